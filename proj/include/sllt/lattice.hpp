#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sllt/poly.hpp"
#include "sllt/shapes.hpp"
#include "sllt/tableaux.hpp"

namespace sllt {

// Row kinds: H/V are the original model's horizontal/vertical strip rows
// (particles ride up-left, side boundaries point right); Halt/Valt are the
// alternate model's rows (particles ride up-right, side boundaries left).
enum class RowKind { H, V, Halt, Valt };

inline bool row_is_original(RowKind k) { return k == RowKind::H || k == RowKind::V; }

struct RowSpec {
    RowKind kind;
    VarId spectral;
};

// Vertex types named by which of the column edge and the twisted edge point
// into the vertex (S = south up, N = north down, W = west(1) right,
// E = east(n) left). Exactly two of the four must point in.
enum class VertexType { SW, NS, SE, NW, EW, NE };

const char* vertex_type_name(VertexType t);

struct VertexSite {
    bool south_up, north_up;
    std::vector<char> west, east;  // index k = strand position k+1; true = RIGHT
};

// Classifies by (south, north, west(1), east(n)); nullopt when conservation or
// the straight-edge rule fails.
std::optional<VertexType> vertex_type(const VertexSite& v);

// Boltzmann weight of an admissible vertex in the given row. s counts LEFT
// arrows among the straight east strands east(1..n-1) for H/V rows; the
// alternate rows count RIGHT arrows there instead.
MPoly vertex_weight(VertexType type, const VertexSite& v, const RowSpec& row);

using Mask = std::uint64_t;  // bit c = column c+1 carries a particle

Mask mask_from_beta(const std::vector<int>& beta);
std::vector<int> beta_from_mask(Mask m, int columns);

struct LatticeSystem {
    int n = 1;
    int columns = 0;
    int r = 0;  // beta-set length used for the boundary masks
    std::vector<RowSpec> rows;  // top to bottom
    Mask top_mask = 0, bottom_mask = 0;

    // Original-model rows have all-RIGHT side boundaries, alternate rows
    // all-LEFT. Kept per row so Cauchy systems can mix the two.
    std::vector<char> row_side_right;

    static LatticeSystem original(const SkewShape& s, int n, std::vector<RowSpec> rows, int r);
    static LatticeSystem alternate(const SkewShape& s, int n, std::vector<RowSpec> rows, int r);
    // Stacked Cauchy window: top boundary mu + rho, bottom boundary nu + rho.
    static LatticeSystem window(const Partition& mu, const Partition& nu, int n,
                                std::vector<RowSpec> rows, int r, int columns);
};

struct LatticeState {
    std::vector<Mask> interfaces;  // interfaces[0] = top boundary, ..., [rows] = bottom
    // east_tuples[row][col][k]: the east tuple of each vertex (true = RIGHT);
    // west tuples follow from the side boundary and the straight-edge rule.
    std::vector<std::vector<std::vector<char>>> east_tuples;
    MPoly weight;
};

// Complete enumeration. Zero-weight vertex types are pruned unless
// include_zero_weight is set (then states carry weight 0 where applicable).
std::vector<LatticeState> enumerate_states(const LatticeSystem& sys,
                                           bool include_zero_weight = false);

// Sum of state weights, computed by dynamic programming over interface masks.
MPoly partition_function(const LatticeSystem& sys);

std::string render_state(const LatticeSystem& sys, const LatticeState& st);

struct BranchingReport {
    MPoly lhs, rhs;
    MPoly residual() const { return lhs - rhs; }
    bool chain_conditions_ok = true;  // structural conditions on interface chains
    std::vector<Partition> gammas_used;
};

// Splits the system between rows k and k+1 (1-based k) and checks
//   G_{lambda/mu}(z_1..z_r) = sum_gamma G_{lambda/gamma}(z_{k+1}..) G_{gamma/mu}(z_1..z_k).
BranchingReport verify_branching(const SkewShape& s, int n, const AlphabetOrder& order,
                                 int k, int r);

// Convenience: the original-model system for a shape and letter order.
LatticeSystem system_for_order(const SkewShape& s, int n, const AlphabetOrder& order, int r,
                               bool alternate_model = false);

}  // namespace sllt
