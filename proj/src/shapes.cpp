#include "sllt/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace sllt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

SkewShape::SkewShape(Partition out, Partition in)
    : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner))
        throw std::invalid_argument("skew shape requires inner <= outer");
}

bool SkewShape::contains_cell(int row, int col) const {
    if (row < 1 || row > outer.length()) return false;
    return col > inner.part(row - 1) && col <= outer.part(row - 1);
}

std::vector<int> to_beta(const Partition& lambda, int r) {
    if (r < lambda.length())
        throw std::invalid_argument("beta set needs r >= length(lambda)");
    std::vector<int> beta(r);
    for (int i = 0; i < r; ++i) beta[i] = lambda.part(i) + (r - i);
    return beta;
}

Partition from_beta(const std::vector<int>& offsets) {
    const int r = static_cast<int>(offsets.size());
    std::vector<int> parts(r);
    for (int i = 0; i < r; ++i) {
        parts[i] = offsets[i] - (r - i);
        if (parts[i] < 0) throw std::invalid_argument("beta offsets too small");
    }
    return Partition(std::move(parts));
}

namespace {

using CellSet = std::set<Cell>;

CellSet skew_cells(const SkewShape& s) {
    CellSet cells;
    for (int row = 1; row <= s.outer.length(); ++row)
        for (int col = s.inner.part(row - 1) + 1; col <= s.outer.part(row - 1); ++col)
            cells.insert({row, col});
    return cells;
}

int ribbon_height(const std::vector<Cell>& ribbon) {
    int lo = ribbon.front().row, hi = ribbon.front().row;
    for (const Cell& c : ribbon) {
        lo = std::min(lo, c.row);
        hi = std::max(hi, c.row);
    }
    return hi - lo + 1;
}

// Head cell of a ribbon: its NE end, i.e. the unique cell with nothing of the
// ribbon above or to the right. With our walk construction it is cells[0].
bool head_on_north_boundary(const std::vector<Cell>& ribbon, const SkewShape& s) {
    const Cell& head = ribbon.front();
    return !s.contains_cell(head.row - 1, head.col);
}

// NE-most cell of a set: minimum row, then maximum column within that row.
Cell ne_most(const CellSet& cells) {
    Cell best = *cells.begin();  // minimal row comes first in set order
    for (const Cell& c : cells) {
        if (c.row != best.row) break;
        if (c.col > best.col) best = c;
    }
    return best;
}

// Enumerate tilings by peeling the ribbon covering the NE-most remaining cell.
// Candidate ribbons are the <= 2^(n-1) SW-walks (left/down steps) from that
// head. For horizontal mode each peeled ribbon must keep its head on the
// northern boundary of the original skew.
void peel(const SkewShape& skew, int n, bool horizontal_only, CellSet& remaining,
          std::vector<std::vector<Cell>>& placed, std::vector<RibbonTiling>& out) {
    if (remaining.empty()) {
        RibbonTiling t;
        t.ribbons = placed;
        for (const auto& r : t.ribbons) t.spin += ribbon_height(r) - 1;
        out.push_back(std::move(t));
        return;
    }
    Cell head = ne_most(remaining);
    std::vector<Cell> ribbon{head};
    std::function<void(Cell)> walk = [&](Cell cur) {
        if (static_cast<int>(ribbon.size()) == n) {
            if (!horizontal_only || head_on_north_boundary(ribbon, skew)) {
                for (const Cell& c : ribbon) remaining.erase(c);
                placed.push_back(ribbon);
                peel(skew, n, horizontal_only, remaining, placed, out);
                placed.pop_back();
                for (const Cell& c : ribbon) remaining.insert(c);
            }
            return;
        }
        for (Cell next : {Cell{cur.row, cur.col - 1}, Cell{cur.row + 1, cur.col}}) {
            if (remaining.count(next)) {
                ribbon.push_back(next);
                walk(next);
                ribbon.pop_back();
            }
        }
    };
    walk(head);
}

RibbonTiling flip_tiling(const RibbonTiling& t, int n) {
    RibbonTiling r;
    for (const auto& rib : t.ribbons) {
        std::vector<Cell> flipped;
        for (const Cell& c : rib) flipped.push_back({c.col, c.row});
        std::sort(flipped.begin(), flipped.end());
        // Restore head-first ordering: NE-most cell first.
        std::sort(flipped.begin(), flipped.end(), [](const Cell& a, const Cell& b) {
            return a.row != b.row ? a.row < b.row : a.col > b.col;
        });
        r.spin += (n - 1) - (ribbon_height(rib) - 1);
        r.ribbons.push_back(std::move(flipped));
    }
    return r;
}

}  // namespace

std::vector<RibbonTiling> ribbon_tilings(const SkewShape& s, int n, StripMode mode) {
    if (n < 1) throw std::invalid_argument("ribbon size must be >= 1");
    std::vector<RibbonTiling> out;
    if (s.size() % n != 0) return out;
    if (s.size() == 0) {
        out.push_back({});
        return out;
    }
    if (mode == StripMode::vertical) {
        // A vertical strip is exactly a tiling whose flip across the
        // antidiagonal is a horizontal strip of the conjugate shape.
        for (const auto& t : ribbon_tilings(s.conjugate(), n, StripMode::horizontal))
            out.push_back(flip_tiling(t, n));
        return out;
    }
    CellSet remaining = skew_cells(s);
    std::vector<std::vector<Cell>> placed;
    peel(s, n, mode == StripMode::horizontal, remaining, placed, out);
    return out;
}

std::vector<StripResult> add_strips(const Partition& mu, int n, int k, StripMode mode,
                                    const ShapeCap& cap) {
    if (k < 0) throw std::invalid_argument("strip count must be >= 0");
    if (k == 0) return {{mu, 0}};
    std::vector<StripResult> out;
    ShapeCap effective = cap;
    effective.max_part = std::min(effective.max_part, mu.part(0) + n * k);
    effective.max_length = std::min(effective.max_length, mu.length() + n * k);
    for (const Partition& lambda : partitions_over(mu, mu.size() + n * k, effective)) {
        for (const auto& t : ribbon_tilings(SkewShape(lambda, mu), n, mode))
            out.push_back({lambda, t.spin});
    }
    return out;
}

std::vector<StripResult> remove_strips(const Partition& lambda, int n, int k,
                                       StripMode mode) {
    if (k < 0) throw std::invalid_argument("strip count must be >= 0");
    if (k == 0) return {{lambda, 0}};
    std::vector<StripResult> out;
    if (lambda.size() < n * k) return out;
    for (const Partition& mu : partitions_under(lambda, lambda.size() - n * k)) {
        for (const auto& t : ribbon_tilings(SkewShape(lambda, mu), n, mode))
            out.push_back({mu, t.spin});
    }
    return out;
}

Partition n_core(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    Partition cur = lambda;
    bool removed = true;
    while (removed && cur.size() >= n) {
        removed = false;
        for (const Partition& mu : partitions_under(cur, cur.size() - n)) {
            if (!ribbon_tilings(SkewShape(cur, mu), n, StripMode::any).empty()) {
                cur = mu;
                removed = true;
                break;
            }
        }
    }
    return cur;
}

std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(Partition(acc));
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            acc.push_back(p);
            rec(left - p, p);
            acc.pop_back();
        }
    };
    rec(m, m);
    return out;
}

std::vector<Partition> partitions_over(const Partition& mu, int size, const ShapeCap& cap) {
    std::vector<Partition> out;
    if (size < mu.size()) return out;
    std::vector<int> tail(mu.length() + 1, 0);  // tail[i] = sum of mu parts from row i on
    for (int i = mu.length() - 1; i >= 0; --i) tail[i] = tail[i + 1] + mu.part(i);

    std::vector<int> acc;
    std::function<void(int, int, int)> rec = [&](int row, int left, int prev) {
        if (left == 0) {
            if (row >= mu.length()) out.push_back(Partition(acc));
            return;
        }
        if (row >= cap.max_length) return;
        const int lo = std::max(mu.part(row), 1);
        const int hi = std::min({left, prev, cap.max_part});
        const int mandatory = row + 1 <= mu.length() ? tail[std::min(row + 1, mu.length())] : 0;
        for (int p = hi; p >= lo; --p) {
            if (left - p < mandatory) continue;
            acc.push_back(p);
            rec(row + 1, left - p, p);
            acc.pop_back();
        }
    };
    rec(0, size, std::min(size, cap.max_part));
    return out;
}

std::vector<Partition> partitions_under(const Partition& lambda, int size) {
    std::vector<Partition> out;
    if (size < 0 || size > lambda.size()) return out;
    std::vector<int> acc;
    std::function<void(int, int, int)> rec = [&](int row, int left, int prev) {
        if (left == 0) {
            out.push_back(Partition(acc));
            return;
        }
        if (row >= lambda.length()) return;
        for (int p = std::min({left, prev, lambda.part(row)}); p >= 1; --p) {
            acc.push_back(p);
            rec(row + 1, left - p, p);
            acc.pop_back();
        }
    };
    rec(0, size, size == 0 ? 0 : lambda.part(0));
    return out;
}

}  // namespace sllt
