#include "sllt/tableaux.hpp"

#include <algorithm>
#include <functional>

namespace sllt {

AlphabetOrder::AlphabetOrder(std::vector<Letter> letters) : letters_(std::move(letters)) {
    std::uint32_t last_x = 0, last_y = 0;
    for (const Letter& l : letters_) {
        auto& last = (l.kind == LetterKind::HORIZONTAL) ? last_x : last_y;
        if (l.var.index <= last)
            throw std::invalid_argument("letters must respect each alphabet's order");
        last = l.var.index;
    }
}

AlphabetOrder AlphabetOrder::parse(const std::string& spec) {
    std::vector<Letter> letters;
    std::uint32_t nx = 0, ny = 0;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        if (tok.back() == '\'') {
            ++ny;
            letters.push_back({tok, LetterKind::VERTICAL, y_var(ny)});
        } else {
            ++nx;
            letters.push_back({tok, LetterKind::HORIZONTAL, x_var(nx)});
        }
        tok.clear();
    };
    for (char c : spec) {
        if (c == ',') {
            flush();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            tok.push_back(c);
        }
    }
    flush();
    return AlphabetOrder(std::move(letters));
}

AlphabetOrder AlphabetOrder::trailing_primes(int nx, int ny) {
    std::vector<Letter> letters;
    for (int i = 1; i <= nx; ++i)
        letters.push_back({std::to_string(i), LetterKind::HORIZONTAL,
                           x_var(static_cast<std::uint32_t>(i))});
    for (int j = 1; j <= ny; ++j)
        letters.push_back({std::to_string(j) + "'", LetterKind::VERTICAL,
                           y_var(static_cast<std::uint32_t>(j))});
    return AlphabetOrder(std::move(letters));
}

int AlphabetOrder::count(LetterKind k) const {
    int c = 0;
    for (const Letter& l : letters_)
        if (l.kind == k) ++c;
    return c;
}

AlphabetOrder AlphabetOrder::prefix(int k) const {
    return AlphabetOrder(std::vector<Letter>(letters_.begin(), letters_.begin() + k));
}

AlphabetOrder AlphabetOrder::suffix(int k) const {
    return AlphabetOrder(std::vector<Letter>(letters_.begin() + k, letters_.end()));
}

int SuperTableau::total_spin() const {
    int s = 0;
    for (int x : spins) s += x;
    return s;
}

std::vector<SuperTableau> enumerate_tableaux(const SkewShape& s, int n,
                                             const AlphabetOrder& order) {
    std::vector<SuperTableau> out;
    if (s.size() % n != 0) return out;
    const int total = s.size() / n;

    SuperTableau cur;
    cur.chain.push_back(s.inner);
    std::function<void(int, int)> rec = [&](int letter, int used) {
        if (letter == order.size()) {
            if (cur.chain.back() == s.outer) out.push_back(cur);
            return;
        }
        const Letter& l = order.letters()[letter];
        const StripMode mode = (l.kind == LetterKind::HORIZONTAL) ? StripMode::horizontal
                                                                  : StripMode::vertical;
        for (int k = 0; k + used <= total; ++k) {
            // Chains grow toward the outer shape, so capping by it is exact.
            ShapeCap cap{s.outer.part(0), s.outer.length()};
            for (const StripResult& r : add_strips(cur.chain.back(), n, k, mode, cap)) {
                if (!s.outer.contains(r.shape)) continue;
                cur.chain.push_back(r.shape);
                cur.spins.push_back(r.spin);
                cur.counts.push_back(k);
                rec(letter + 1, used + k);
                cur.chain.pop_back();
                cur.spins.pop_back();
                cur.counts.pop_back();
            }
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), [](const SuperTableau& a, const SuperTableau& b) {
        return a.chain < b.chain;
    });
    return out;
}

MPoly super_llt(const SkewShape& s, int n, const AlphabetOrder& order) {
    MPoly total;
    for (const SuperTableau& t : enumerate_tableaux(s, n, order)) {
        Monomial m = Monomial::variable(q_var(), t.total_spin());
        int sign = 0;
        for (int i = 0; i < order.size(); ++i) {
            const Letter& l = order.letters()[i];
            m = m.times(Monomial::variable(l.var, t.counts[i]));
            if (l.kind == LetterKind::VERTICAL) sign += t.counts[i];
        }
        total += MPoly::term(m, (sign % 2 == 0) ? 1 : -1);
    }
    return total;
}

MPoly schur_polynomial(const Partition& lambda, int nvars) {
    // Fill cells row by row with entries 1..nvars, weakly increasing along
    // rows, strictly increasing down columns.
    MPoly total;
    const int rows = lambda.length();
    if (rows == 0) return MPoly(1);
    std::vector<std::vector<int>> fill(rows);
    for (int r = 0; r < rows; ++r) fill[r].resize(lambda.part(r), 0);

    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            Monomial m;
            for (const auto& row : fill)
                for (int e : row) m = m.times(Monomial::variable(x_var(e)));
            total += MPoly::term(m, 1);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= static_cast<int>(fill[r].size())) nr = r + 1, nc = 0;
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);
        if (r > 0 && c < static_cast<int>(fill[r - 1].size())) lo = std::max(lo, fill[r - 1][c] + 1);
        for (int v = lo; v <= nvars; ++v) {
            fill[r][c] = v;
            rec(nr, nc);
        }
    };
    rec(0, 0);
    return total;
}

}  // namespace sllt
