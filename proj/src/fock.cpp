#include "sllt/fock.hpp"

#include <algorithm>
#include <functional>

namespace sllt {

void FockVector::add(const Partition& p, const MPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

MPoly FockVector::coefficient(const Partition& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? MPoly() : it->second;
}

namespace {

// a_k = (1 - q^{2nk}) / (1 - q^{2k}) = 1 + q^{2k} + ... + q^{2k(n-1)}
MPoly heisenberg_a(int n, int k) {
    MPoly s;
    for (int t = 0; t < n; ++t)
        s += MPoly::term(Monomial::variable(q_var(), 2 * k * t), 1);
    return s;
}

Rational z_lambda(const Partition& lam) {
    std::map<int, int> mult;
    for (int p : lam.parts()) ++mult[p];
    Rational z = 1;
    for (auto [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= k;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

}  // namespace

KappaValues kappa(int n, int j_max) {
    if (n < 1) throw std::invalid_argument("kappa: n must be >= 1");
    KappaValues out;
    out.n = n;
    for (int j = 0; j <= j_max; ++j) {
        MPoly h, e;
        for (const Partition& lam : partitions_of(j)) {
            MPoly prod(1);
            for (int p : lam.parts()) prod *= heisenberg_a(n, p);
            Rational zy = Rational(1) / z_lambda(lam);
            h += prod.scaled(zy);
            Rational sign = (lam.length() % 2 == 0) ? 1 : -1;
            e += prod.scaled(zy * sign);
        }
        if (j % 2 == 1) e = -e;  // (-1)^j
        if (!h.integral() || !e.integral())
            throw std::logic_error("kappa values failed to be integral");
        out.h.push_back(std::move(h));
        out.e.push_back(std::move(e));
    }
    return out;
}

MPoly homogeneous_at_q_powers(int n, int j) {
    // Sum over weakly increasing index multisets 0 <= i_1 <= ... <= i_j < n
    // of q^{2(i_1 + ... + i_j)}.
    MPoly out;
    std::function<void(int, int, int)> rec = [&](int slot, int lo, int acc) {
        if (slot == j) {
            out += MPoly::term(Monomial::variable(q_var(), 2 * acc), 1);
            return;
        }
        for (int i = lo; i < n; ++i) rec(slot + 1, i, acc + i);
    };
    rec(0, 0, 0);
    return out;
}

MPoly elementary_at_q_powers(int n, int j) {
    MPoly out;
    std::function<void(int, int, int)> rec = [&](int slot, int lo, int acc) {
        if (slot == j) {
            out += MPoly::term(Monomial::variable(q_var(), 2 * acc), 1);
            return;
        }
        for (int i = lo; i < n; ++i) rec(slot + 1, i + 1, acc + i);
    };
    rec(0, 0, 0);
    return out;
}

FockVector apply_operator(StripOp op, int k, const FockVector& v, int n,
                          const ShapeCap& cap, OperatorAudit* audit) {
    FockVector out;
    const bool adds = (op == StripOp::U || op == StripOp::Utilde);
    const StripMode mode = (op == StripOp::U || op == StripOp::D)
                               ? StripMode::horizontal
                               : StripMode::vertical;
    for (const auto& [shape, coeff] : v.terms) {
        std::vector<StripResult> results;
        if (adds) {
            results = add_strips(shape, n, k, mode, ShapeCap{});
        } else {
            results = remove_strips(shape, n, k, mode);
        }
        for (const StripResult& r : results) {
            if (audit) {
                audit->max_part = std::max(audit->max_part, r.shape.part(0));
                audit->max_length = std::max(audit->max_length, r.shape.length());
            }
            if (r.shape.part(0) > cap.max_part || r.shape.length() > cap.max_length) {
                if (audit) audit->clipped = true;
                continue;
            }
            out.add(r.shape, coeff * MPoly::term(Monomial::variable(q_var(), r.spin), 1));
        }
    }
    return out;
}

bool CommutationReport::all_zero() const {
    for (const auto& e : entries)
        if (!e.residual.terms.empty()) return false;
    return true;
}

CommutationReport verify_commutation(int n, int a, int b, CommutationPair pair,
                                     const std::vector<Partition>& domain) {
    CommutationReport rep;
    rep.n = n, rep.a = a, rep.b = b, rep.pair = pair;

    const StripOp up = (pair == CommutationPair::DU || pair == CommutationPair::DtU)
                           ? StripOp::U
                           : StripOp::Utilde;
    const StripOp down = (pair == CommutationPair::DU || pair == CommutationPair::DUt)
                             ? StripOp::D
                             : StripOp::Dtilde;
    const bool use_h = (pair == CommutationPair::DU || pair == CommutationPair::DtUt);
    const int m = std::min(a, b);
    KappaValues kv = kappa(n, m);

    for (const Partition& mu : domain) {
        // Every shape reachable on either side stays within mu grown by n*a
        // ribbons' worth of cells, so this cap can never clip.
        ShapeCap cap{mu.part(0) + n * a, mu.length() + n * a};
        OperatorAudit audit;
        FockVector start = FockVector::basis(mu);

        FockVector lhs = apply_operator(down, b, apply_operator(up, a, start, n, cap, &audit),
                                        n, cap, &audit);
        FockVector rhs;
        for (int j = 0; j <= m; ++j) {
            FockVector t = apply_operator(up, a - j,
                                          apply_operator(down, b - j, start, n, cap, &audit),
                                          n, cap, &audit);
            const MPoly& kj = use_h ? kv.h[j] : kv.e[j];
            for (const auto& [shape, c] : t.terms) rhs.add(shape, c * kj);
        }
        if (audit.clipped) throw std::logic_error("commutation check clipped by cap");

        FockVector residual = lhs;
        for (const auto& [shape, c] : rhs.terms) residual.add(shape, -c);
        rep.entries.push_back({mu, std::move(residual)});
    }
    return rep;
}

MPoly operator_polynomial(OperatorRoute route, const SkewShape& s, int n,
                          const AlphabetOrder& order) {
    if (s.size() % n != 0) return {};
    const int budget = s.size() / n;
    const ShapeCap cap{s.outer.part(0), s.outer.length()};

    // Per-letter generating application: v -> sum_k var^k Op_k v, keeping only
    // shapes that can still reach the target.
    FockVector v = FockVector::basis(route == OperatorRoute::F ? s.inner : s.outer);
    const bool build_up = (route == OperatorRoute::F);

    std::vector<Letter> letters = order.letters();
    if (!build_up) std::reverse(letters.begin(), letters.end());

    for (const Letter& l : letters) {
        const StripOp op = build_up
                               ? (l.kind == LetterKind::HORIZONTAL ? StripOp::U : StripOp::Utilde)
                               : (l.kind == LetterKind::HORIZONTAL ? StripOp::D : StripOp::Dtilde);
        FockVector next;
        for (int k = 0; k <= budget; ++k) {
            FockVector moved = apply_operator(op, k, v, n, cap);
            Rational sign = (l.kind == LetterKind::VERTICAL && k % 2 == 1) ? -1 : 1;
            MPoly varpow = MPoly::term(Monomial::variable(l.var, k), sign);
            for (const auto& [shape, c] : moved.terms) {
                const bool viable = build_up ? s.outer.contains(shape) : shape.contains(s.inner);
                if (!viable) continue;
                next.add(shape, c * varpow);
            }
        }
        v = next;
    }
    return v.coefficient(build_up ? s.outer : s.inner);
}

}  // namespace sllt
