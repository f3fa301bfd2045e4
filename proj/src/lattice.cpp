#include "sllt/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace sllt {

const char* vertex_type_name(VertexType t) {
    switch (t) {
        case VertexType::SW: return "SW";
        case VertexType::NS: return "NS";
        case VertexType::SE: return "SE";
        case VertexType::NW: return "NW";
        case VertexType::EW: return "EW";
        case VertexType::NE: return "NE";
    }
    return "?";
}

namespace {

// in-edges: south up, north down, west(1) right, east(n) left.
std::optional<VertexType> classify(bool south_up, bool north_up, bool west1_right,
                                   bool eastn_right) {
    const int in_s = south_up, in_n = !north_up, in_w = west1_right, in_e = !eastn_right;
    if (in_s + in_n + in_w + in_e != 2) return std::nullopt;
    if (in_s && in_w) return VertexType::SW;
    if (in_n && in_s) return VertexType::NS;
    if (in_s && in_e) return VertexType::SE;
    if (in_n && in_w) return VertexType::NW;
    if (in_e && in_w) return VertexType::EW;
    return VertexType::NE;
}

MPoly q_power(int e) { return MPoly::term(Monomial::variable(q_var(), e), 1); }

// Weight tables for the four row kinds. s counts LEFT arrows on the straight
// east strands for the original model, t counts RIGHT arrows there for the
// alternate model. Zero-weight types: SE (H), NE (V), SW (Halt), NW (Valt).
MPoly row_weight(VertexType type, int s, int t, const RowSpec& row) {
    const MPoly var = MPoly::variable(row.spectral);
    switch (row.kind) {
        case RowKind::H:
            switch (type) {
                case VertexType::SW:
                case VertexType::NS: return q_power(s);
                case VertexType::SE: return {};
                case VertexType::NW: return MPoly(1);
                case VertexType::EW:
                case VertexType::NE: return q_power(s) * var;
            }
            break;
        case RowKind::V:
            switch (type) {
                case VertexType::SW: return q_power(s);
                case VertexType::NS:
                case VertexType::NW: return MPoly(1);
                case VertexType::SE:
                case VertexType::EW: return -var;
                case VertexType::NE: return {};
            }
            break;
        case RowKind::Halt:
            switch (type) {
                case VertexType::SW: return {};
                case VertexType::NS:
                case VertexType::NW: return q_power(t) * var;
                case VertexType::SE:
                case VertexType::EW: return q_power(t);
                case VertexType::NE: return MPoly(1);
            }
            break;
        case RowKind::Valt:
            switch (type) {
                case VertexType::SW:
                case VertexType::NS: return -var;
                case VertexType::SE: return q_power(t);
                case VertexType::NW: return {};
                case VertexType::EW:
                case VertexType::NE: return MPoly(1);
            }
            break;
    }
    return {};
}

struct RowOutcome {
    Mask free_mask = 0;  // the vertical boundary that was not pinned
    MPoly weight;
    std::vector<std::vector<char>> east_tuples;
};

// Left-to-right sweep of one row. Exactly one of north/south may be left free;
// the straight east strands are forced by the west tuple and the remaining
// unknowns are solved by conservation (at most two branches per column).
std::vector<RowOutcome> sweep_row(int n, int columns, const RowSpec& row, bool side_right,
                                  std::optional<Mask> north, std::optional<Mask> south,
                                  bool include_zero_weight,
                                  const std::vector<char>* east_override = nullptr) {
    std::vector<RowOutcome> out;
    std::vector<char> west(n, side_right ? 1 : 0);
    std::vector<std::vector<char>> tuples;
    Mask built = 0;
    MPoly weight(1);

    std::function<void(int)> go = [&](int col) {
        if (col == columns) {
            const std::vector<char> boundary =
                east_override ? *east_override : std::vector<char>(n, side_right ? 1 : 0);
            if (west == boundary) out.push_back({built, weight, tuples});
            return;
        }
        std::vector<char> east(n, 0);
        for (int k = 0; k + 1 < n; ++k) east[k] = west[k + 1];

        const bool both_pinned = north.has_value() && south.has_value();
        for (int vfree = 0; vfree < (both_pinned ? 1 : 2); ++vfree) {
            const bool south_up = south ? ((*south >> col) & 1) : static_cast<bool>(vfree);
            const bool north_up = north ? ((*north >> col) & 1) : static_cast<bool>(vfree);
            for (int e = 0; e < 2; ++e) {
                east[n - 1] = static_cast<char>(e);
                auto type = classify(south_up, north_up, west[0], east[n - 1]);
                if (!type) continue;
                int s = 0, t = 0;
                for (int k = 0; k + 1 < n; ++k) (east[k] ? t : s)++;
                MPoly w = row_weight(*type, s, t, row);
                if (w.is_zero() && !include_zero_weight) continue;

                MPoly saved_weight = std::move(weight);
                weight = saved_weight * w;
                std::vector<char> saved_west = std::move(west);
                west = east;
                tuples.push_back(east);
                Mask saved_built = built;
                if (!both_pinned) {
                    const bool free_up = north ? south_up : north_up;
                    if (free_up) built |= (Mask(1) << col);
                }
                go(col + 1);
                built = saved_built;
                tuples.pop_back();
                west = std::move(saved_west);
                weight = std::move(saved_weight);
            }
        }
    };
    go(0);
    return out;
}

}  // namespace

std::optional<VertexType> vertex_type(const VertexSite& v) {
    const int n = static_cast<int>(v.west.size());
    for (int k = 0; k + 1 < n; ++k)
        if (v.east[k] != v.west[k + 1]) return std::nullopt;
    return classify(v.south_up, v.north_up, v.west[0], v.east[n - 1]);
}

MPoly vertex_weight(VertexType type, const VertexSite& v, const RowSpec& row) {
    int s = 0, t = 0;
    for (std::size_t k = 0; k + 1 < v.east.size(); ++k) (v.east[k] ? t : s)++;
    return row_weight(type, s, t, row);
}

Mask mask_from_beta(const std::vector<int>& beta) {
    Mask m = 0;
    for (int b : beta) {
        if (b < 1 || b > 63) throw std::invalid_argument("beta offset out of mask range");
        m |= (Mask(1) << (b - 1));
    }
    return m;
}

std::vector<int> beta_from_mask(Mask m, int columns) {
    std::vector<int> beta;
    for (int c = columns - 1; c >= 0; --c)
        if ((m >> c) & 1) beta.push_back(c + 1);
    return beta;
}

LatticeSystem LatticeSystem::original(const SkewShape& s, int n, std::vector<RowSpec> rows,
                                      int r) {
    if (r < s.outer.length())
        throw std::invalid_argument("faithful beta encoding needs r >= length(outer)");
    for (const RowSpec& row : rows)
        if (!row_is_original(row.kind))
            throw std::invalid_argument("original system rows must be H or V");
    LatticeSystem sys;
    sys.n = n;
    sys.r = r;
    sys.columns = s.outer.part(0) + r;
    sys.rows = std::move(rows);
    sys.top_mask = mask_from_beta(to_beta(s.inner, r));
    sys.bottom_mask = mask_from_beta(to_beta(s.outer, r));
    sys.row_side_right.assign(sys.rows.size(), 1);
    return sys;
}

LatticeSystem LatticeSystem::alternate(const SkewShape& s, int n, std::vector<RowSpec> rows,
                                       int r) {
    if (r < s.outer.length())
        throw std::invalid_argument("faithful beta encoding needs r >= length(outer)");
    for (const RowSpec& row : rows)
        if (row_is_original(row.kind))
            throw std::invalid_argument("alternate system rows must be Halt or Valt");
    LatticeSystem sys;
    sys.n = n;
    sys.r = r;
    sys.columns = s.outer.part(0) + r;
    sys.rows = std::move(rows);
    sys.top_mask = mask_from_beta(to_beta(s.outer, r));
    sys.bottom_mask = mask_from_beta(to_beta(s.inner, r));
    sys.row_side_right.assign(sys.rows.size(), 0);
    return sys;
}

LatticeSystem LatticeSystem::window(const Partition& mu, const Partition& nu, int n,
                                    std::vector<RowSpec> rows, int r, int columns) {
    if (r < std::max(mu.length(), nu.length()))
        throw std::invalid_argument("window: r too small for the boundary shapes");
    if (columns < std::max(mu.part(0), nu.part(0)) + r)
        throw std::invalid_argument("window: too few columns for the boundary shapes");
    LatticeSystem sys;
    sys.n = n;
    sys.r = r;
    sys.columns = columns;
    sys.top_mask = mask_from_beta(to_beta(mu, r));
    sys.bottom_mask = mask_from_beta(to_beta(nu, r));
    for (const RowSpec& row : rows) sys.row_side_right.push_back(row_is_original(row.kind));
    sys.rows = std::move(rows);
    return sys;
}

std::vector<LatticeState> enumerate_states(const LatticeSystem& sys, bool include_zero_weight) {
    std::vector<LatticeState> out;
    LatticeState cur;
    cur.interfaces.push_back(sys.top_mask);
    cur.weight = MPoly(1);

    std::function<void(int)> go = [&](int row) {
        if (row == static_cast<int>(sys.rows.size())) {
            if (cur.interfaces.back() == sys.bottom_mask) out.push_back(cur);
            return;
        }
        const Mask north = cur.interfaces.back();
        for (const auto& oc : sweep_row(sys.n, sys.columns, sys.rows[row],
                                        sys.row_side_right[row], north, std::nullopt,
                                        include_zero_weight)) {
            MPoly saved = cur.weight;
            cur.interfaces.push_back(oc.free_mask);
            cur.east_tuples.push_back(oc.east_tuples);
            cur.weight *= oc.weight;
            go(row + 1);
            cur.weight = std::move(saved);
            cur.east_tuples.pop_back();
            cur.interfaces.pop_back();
        }
    };
    go(0);
    return out;
}

MPoly partition_function(const LatticeSystem& sys) {
    std::map<Mask, MPoly> acc{{sys.top_mask, MPoly(1)}};
    for (std::size_t row = 0; row < sys.rows.size(); ++row) {
        std::map<Mask, MPoly> next;
        for (const auto& [mask, w] : acc) {
            for (const auto& oc : sweep_row(sys.n, sys.columns, sys.rows[row],
                                            sys.row_side_right[row], mask, std::nullopt,
                                            false)) {
                MPoly contrib = w * oc.weight;
                auto [it, fresh] = next.emplace(oc.free_mask, contrib);
                if (!fresh) it->second += contrib;
            }
        }
        acc = std::move(next);
    }
    auto it = acc.find(sys.bottom_mask);
    return it == acc.end() ? MPoly() : it->second;
}

std::string render_state(const LatticeSystem& sys, const LatticeState& st) {
    std::ostringstream os;
    auto mask_line = [&](Mask m) {
        std::string line(12, ' ');
        for (int c = 0; c < sys.columns; ++c) {
            line += ((m >> c) & 1) ? '^' : 'v';
            line += "  ";
        }
        return line;
    };
    os << mask_line(st.interfaces[0]) << "\n";
    for (std::size_t row = 0; row < sys.rows.size(); ++row) {
        const RowSpec& rs = sys.rows[row];
        const char* kind = rs.kind == RowKind::H ? "H " : rs.kind == RowKind::V ? "V " :
                           rs.kind == RowKind::Halt ? "H~" : "V~";
        for (int k = sys.n - 1; k >= 0; --k) {
            std::string label;
            if (k == sys.n / 2) label = std::string(kind) + " " + var_name(rs.spectral);
            label.resize(10, ' ');
            os << label;
            const char side = sys.row_side_right[row] ? '>' : '<';
            os << side << ' ';
            for (int c = 0; c < sys.columns; ++c)
                os << (st.east_tuples[row][c][k] ? '>' : '<') << "  ";
            os << "\n";
        }
        os << mask_line(st.interfaces[row + 1]) << "\n";
    }
    os << "weight: " << st.weight.str() << "\n";
    return os.str();
}

LatticeSystem system_for_order(const SkewShape& s, int n, const AlphabetOrder& order, int r,
                               bool alternate_model) {
    std::vector<RowSpec> rows;
    for (const Letter& l : order.letters()) {
        RowKind k;
        if (l.kind == LetterKind::HORIZONTAL)
            k = alternate_model ? RowKind::Halt : RowKind::H;
        else
            k = alternate_model ? RowKind::Valt : RowKind::V;
        rows.push_back({k, l.var});
    }
    return alternate_model ? LatticeSystem::alternate(s, n, std::move(rows), r)
                           : LatticeSystem::original(s, n, std::move(rows), r);
}

namespace {

// Structural conditions on an interface chain of the original model: each
// particle's column grows by a multiple of n going down; a column occupied on
// both sides of a horizontal row belongs to the same (stationary) particle;
// vertical rows move each particle by 0 or exactly n. Particles may leapfrog
// in column order, so this is a matching question, not a sorted comparison.
bool row_chain_ok(const std::vector<int>& above, std::vector<int> below, int n,
                  RowKind kind) {
    if (above.size() != below.size()) return false;
    std::function<bool(std::size_t)> match = [&](std::size_t j) {
        if (j == above.size()) return true;
        for (std::size_t k = j; k < below.size(); ++k) {
            int diff = below[k] - above[j];
            if (diff < 0 || diff % n != 0) continue;
            if (kind == RowKind::V && diff != 0 && diff != n) continue;
            if (kind == RowKind::H && diff != 0) {
                // The target column must not be a stationary particle's column.
                if (std::find(above.begin(), above.end(), below[k]) != above.end()) continue;
            }
            std::swap(below[j], below[k]);
            if (match(j + 1)) return true;
            std::swap(below[j], below[k]);
        }
        return false;
    };
    return match(0);
}

bool chain_conditions_hold(const LatticeSystem& sys, const LatticeState& st) {
    for (std::size_t row = 0; row < sys.rows.size(); ++row) {
        if (!row_is_original(sys.rows[row].kind)) continue;
        auto above = beta_from_mask(st.interfaces[row], sys.columns);
        auto below = beta_from_mask(st.interfaces[row + 1], sys.columns);
        if (!row_chain_ok(above, below, sys.n, sys.rows[row].kind)) return false;
    }
    return true;
}

}  // namespace

BranchingReport verify_branching(const SkewShape& s, int n, const AlphabetOrder& order, int k,
                                 int r) {
    if (k < 1 || k >= order.size())
        throw std::invalid_argument("branching cut must satisfy 1 <= k < #rows");
    BranchingReport rep;

    LatticeSystem whole = system_for_order(s, n, order, r);
    rep.lhs = partition_function(whole);
    for (const LatticeState& st : enumerate_states(whole))
        if (!chain_conditions_hold(whole, st)) rep.chain_conditions_ok = false;

    AlphabetOrder upper = order.prefix(k);  // rows 1..k carry gamma/mu
    AlphabetOrder lower = order.suffix(k);  // rows k+1.. carry lambda/gamma

    for (int gsz = s.inner.size(); gsz <= s.outer.size(); ++gsz) {
        if ((gsz - s.inner.size()) % n) continue;
        for (const Partition& gamma : partitions_under(s.outer, gsz)) {
            if (!gamma.contains(s.inner)) continue;
            MPoly top = partition_function(
                system_for_order(SkewShape(gamma, s.inner), n, upper, r));
            if (top.is_zero()) continue;
            MPoly bottom = partition_function(
                system_for_order(SkewShape(s.outer, gamma), n, lower, r));
            if (bottom.is_zero()) continue;
            rep.rhs += top * bottom;
            rep.gammas_used.push_back(gamma);
        }
    }
    return rep;
}

}  // namespace sllt
