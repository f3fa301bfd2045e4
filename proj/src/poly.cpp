#include "sllt/poly.hpp"

#include <algorithm>
#include <sstream>

namespace sllt {

std::string rational_str(const Rational& r) {
    Rational c(r);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_str(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

namespace {
const char kFamilyLetter[] = {'q', 'x', 'y', 'w', 'z', 'g'};
}

std::string var_name(VarId v) {
    if (v.family == VarFamily::Q) return "q";
    return std::string(1, kFamilyLetter[static_cast<int>(v.family)]) +
           std::to_string(v.index);
}

VarId var_from_name(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty variable name");
    if (s == "q") return q_var();
    VarFamily fam;
    switch (s[0]) {
        case 'x': fam = VarFamily::X; break;
        case 'y': fam = VarFamily::Y; break;
        case 'w': fam = VarFamily::W; break;
        case 'z': fam = VarFamily::Z; break;
        case 'g': fam = VarFamily::GENERIC; break;
        default: throw std::invalid_argument("bad variable name: " + s);
    }
    return {fam, static_cast<std::uint32_t>(std::stoul(s.substr(1)))};
}

Monomial Monomial::variable(VarId v, int e) {
    Monomial m;
    if (e != 0) m.exps_.emplace_back(v, e);
    return m;
}

int Monomial::exponent(VarId v) const {
    auto it = std::lower_bound(exps_.begin(), exps_.end(), v,
                               [](const auto& p, VarId w) { return p.first < w; });
    return (it != exps_.end() && it->first == v) ? it->second : 0;
}

int Monomial::degree_non_q() const {
    int d = 0;
    for (const auto& [v, e] : exps_)
        if (v.family != VarFamily::Q) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.exps_.reserve(exps_.size() + o.exps_.size());
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
            r.exps_.push_back(*a++);
        } else if (a == exps_.end() || b->first < a->first) {
            r.exps_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) r.exps_.emplace_back(a->first, e);
            ++a, ++b;
        }
    }
    return r;
}

Monomial Monomial::power(int e) const {
    Monomial r;
    if (e == 0) return r;
    r.exps_ = exps_;
    for (auto& [v, x] : r.exps_) x *= e;
    return r;
}

Monomial Monomial::inverse() const { return power(-1); }

bool Monomial::valid() const {
    for (const auto& [v, e] : exps_)
        if (v.family != VarFamily::Q && e < 0) return false;
    return true;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    auto i = a.exps_.begin(), j = b.exps_.begin();
    while (i != a.exps_.end() || j != b.exps_.end()) {
        // Walk the merged variable list in canonical order; missing entry = 0.
        VarId va = (i != a.exps_.end()) ? i->first : j->first;
        VarId vb = (j != b.exps_.end()) ? j->first : i->first;
        VarId v = std::min(va, vb);
        int ea = (i != a.exps_.end() && i->first == v) ? i->second : 0;
        int eb = (j != b.exps_.end() && j->first == v) ? j->second : 0;
        if (ea != eb) return ea <=> eb;
        if (i != a.exps_.end() && i->first == v) ++i;
        if (j != b.exps_.end() && j->first == v) ++j;
    }
    return std::strong_ordering::equal;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : exps_) {
        if (!first) os << "*";
        first = false;
        os << var_name(v);
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

MPoly::MPoly(const Rational& c) {
    if (c != 0) {
        Rational cc(c);
        cc.canonicalize();
        terms_.emplace(Monomial{}, cc);
    }
}

MPoly MPoly::variable(VarId v, int e) {
    return term(Monomial::variable(v, e), 1);
}

MPoly MPoly::term(const Monomial& m, const Rational& c) {
    if (!m.valid())
        throw std::domain_error("negative exponent on non-q variable: " + m.str());
    MPoly p;
    if (c != 0) {
        Rational cc(c);
        cc.canonicalize();
        p.terms_.emplace(m, cc);
    }
    return p;
}

bool MPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() &&
           terms_.begin()->second == 1;
}

Rational MPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::insert(const Monomial& m, const Rational& c) {
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) insert(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) insert(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma.times(mb);
            if (!m.valid())
                throw std::domain_error("product left non-q variable with negative exponent");
            r.insert(m, ca * cb);
        }
    }
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly MPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    MPoly r(*this);
    for (auto& [m, x] : r.terms_) x *= c;
    return r;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly r(1);
    MPoly base(*this);
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

MPoly MPoly::truncate_degree(int bound) const {
    if (bound < 0) throw std::invalid_argument("truncation bound must be >= 0");
    MPoly r;
    for (const auto& [m, c] : terms_)
        if (m.degree_non_q() <= bound) r.terms_.emplace(m, c);
    return r;
}

int MPoly::max_degree_non_q() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_non_q());
    return d;
}

MPoly MPoly::substitute(const std::map<VarId, MPoly>& assignment) const {
    MPoly out;
    for (const auto& [m, c] : terms_) {
        MPoly prod(c);
        Monomial untouched;
        for (const auto& [v, e] : m.entries()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                untouched = untouched.times(Monomial::variable(v, e));
                continue;
            }
            const MPoly& val = it->second;
            if (e >= 0) {
                prod *= val.pow(static_cast<unsigned>(e));
            } else {
                // Negative exponents can only be cleared by inverting a
                // single-term value, e.g. q -> 1/q.
                if (val.term_count() != 1)
                    throw std::domain_error(
                        "cannot raise a non-monomial value to a negative power");
                const auto& [vm, vc] = *val.terms().begin();
                Monomial inv = vm.inverse();
                if (!inv.valid())
                    throw std::domain_error(
                        "inverse leaves non-q variable with negative exponent");
                prod *= MPoly::term(inv, Rational(1) / vc).pow(static_cast<unsigned>(-e));
            }
        }
        out += prod * MPoly::term(untouched, 1);
    }
    return out;
}

MPoly MPoly::substitute_q_inverse() const {
    return substitute({{q_var(), MPoly::term(Monomial::variable(q_var(), -1), 1)}});
}

bool MPoly::integral() const {
    for (const auto& [m, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c > 0 ? c : Rational(-c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (a == 1);
        if (!unit || m.is_one()) {
            os << a.get_num().get_str();
            if (a.get_den() != 1) os << "/" << a.get_den().get_str();
            if (!m.is_one()) os << "*";
        }
        if (!m.is_one()) os << m.str();
    }
    return os.str();
}

MPoly expand_product_factor(FactorSign sign, FactorPlace place, VarId u, VarId v,
                            int n, int bound) {
    if (bound < 0) throw std::invalid_argument("expand_product_factor: bound < 0");
    if (u == v) throw std::invalid_argument("expand_product_factor: u == v");
    if (n < 1) throw std::invalid_argument("expand_product_factor: n < 1");

    const Monomial uv = Monomial::variable(u).times(Monomial::variable(v));
    MPoly result(1);
    for (int t = 0; t < n; ++t) {
        Monomial qm = Monomial::variable(q_var(), 2 * t).times(uv);
        Rational s = (sign == FactorSign::plus) ? 1 : -1;
        MPoly factor;
        if (place == FactorPlace::numerator) {
            factor = MPoly(1) + MPoly::term(qm, s);
        } else {
            // (1 + s*w)^{-1} = sum_m (-s)^m w^m with w = q^{2t} u v.
            for (int m = 0; m <= bound; ++m)
                factor += MPoly::term(qm.power(m), (m % 2 == 0) ? Rational(1) : -s);
        }
        result *= factor;
        // Keep only pair-powers <= bound between factors to stop blowup.
        MPoly kept;
        for (const auto& [m, c] : result.terms()) {
            int pu = m.exponent(u);
            if (pu <= bound) kept += MPoly::term(m, c);
        }
        result = kept;
    }
    return result;
}

}  // namespace sllt
