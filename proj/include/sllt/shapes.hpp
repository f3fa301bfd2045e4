#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace sllt {

// Integer partition: weakly decreasing positive parts, zero parts stripped so
// that padding with zeros never changes identity.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition of(std::initializer_list<int> parts) {
        return Partition(std::vector<int>(parts));
    }

    int size() const;                  // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const {            // 0-based; 0 beyond the length
        return i < length() ? parts_[i] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    bool contains(const Partition& mu) const;
    Partition conjugate() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    std::string str() const;  // "(3,3)" / "()"

  private:
    std::vector<int> parts_;
};

struct SkewShape {
    Partition outer, inner;
    SkewShape(Partition out, Partition in);
    int size() const { return outer.size() - inner.size(); }
    SkewShape conjugate() const { return {outer.conjugate(), inner.conjugate()}; }
    bool contains_cell(int row, int col) const;  // 1-based coordinates
    std::string str() const { return outer.str() + "/" + inner.str(); }
};

// Beta set: the parts of lambda + rho for rho = (r, r-1, ..., 1), i.e. the
// occupied column positions of the particle encoding. Strictly decreasing.
std::vector<int> to_beta(const Partition& lambda, int r);
Partition from_beta(const std::vector<int>& offsets);

struct Cell {
    int row, col;  // 1-based
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct RibbonTiling {
    std::vector<std::vector<Cell>> ribbons;  // each ribbon's cells
    int spin = 0;                            // sum over ribbons of height-1
};

enum class StripMode { horizontal, vertical, any };

// All tilings of the skew shape by n-ribbons; for horizontal/vertical, only
// those where every ribbon satisfies the strip head condition. Empty result
// when the size is not divisible by n or no tiling exists.
std::vector<RibbonTiling> ribbon_tilings(const SkewShape& s, int n, StripMode mode);

struct StripResult {
    Partition shape;
    int spin;
};

struct ShapeCap {
    int max_part = 1 << 20;
    int max_length = 1 << 20;
    bool unbounded() const { return max_part >= (1 << 20) && max_length >= (1 << 20); }
};

// All lambda obtained from mu by adding a single mode-strip of k n-ribbons;
// one StripResult per (shape, tiling). k = 0 yields {(mu, 0)}.
std::vector<StripResult> add_strips(const Partition& mu, int n, int k, StripMode mode,
                                    const ShapeCap& cap);

// All mu obtained from lambda by removing a single mode-strip of k n-ribbons.
std::vector<StripResult> remove_strips(const Partition& lambda, int n, int k,
                                       StripMode mode);

// Greedy n-ribbon removal until no ribbon can be removed. Order-independent.
Partition n_core(const Partition& lambda, int n);

// Enumeration helpers shared across modules.
std::vector<Partition> partitions_of(int m);
// All lambda with mu <= lambda, |lambda| = size, respecting the cap.
std::vector<Partition> partitions_over(const Partition& mu, int size, const ShapeCap& cap);
// All mu with mu <= lambda, |mu| = size.
std::vector<Partition> partitions_under(const Partition& lambda, int size);

}  // namespace sllt
