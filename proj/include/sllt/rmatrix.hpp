#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sllt/lattice.hpp"
#include "sllt/poly.hpp"

namespace sllt {

// One R^(1) crossing: corner labels I (NE), J (SE), K (SW), L (NW) with
// strands K -> I and L -> J; true = RIGHT. Conservation (two arrows in, two
// out) leaves exactly six admissible configurations.
struct R1Config {
    bool I, J, K, L;
    int code() const { return (I << 3) | (J << 2) | (K << 1) | L; }
    bool admissible() const { return (K + L + !I + !J) == 2; }
    static R1Config from_code(int c) {
        return {static_cast<bool>(c & 8), static_cast<bool>(c & 4),
                static_cast<bool>(c & 2), static_cast<bool>(c & 1)};
    }
    std::string str() const;  // e.g. "RLLR" in I,J,K,L order
};

// The six crossing types of the diagonal weight tables. E is pinned to the
// all-RIGHT configuration and W to all-LEFT; the remaining four assignments
// are a build-time fixture recovered by requiring the n=1 Yang-Baxter
// equations to hold (see pin_type_assignment).
enum class RType { N, SS, W, E, NN, S };

const char* r_type_name(RType t);
RType r_type_from_name(const std::string&);

class RTypeAssignment {
  public:
    RTypeAssignment();  // only E/W pinned; others unset
    static RTypeAssignment from_permutation(int index);  // 0..23
    void set(int code, RType t) { types_[code] = t; }
    std::optional<RType> type_of(int code) const { return types_[code]; }
    bool operator==(const RTypeAssignment&) const = default;

    std::string serialize() const;  // versioned JSON, byte-deterministic
    static RTypeAssignment deserialize(const std::string&);

  private:
    std::array<std::optional<RType>, 16> types_;
};

// Supported row-kind pairs. The first row is the one whose strand runs
// NW -> SE (it carries the first spectral slot of the weight tables), the
// second runs SW -> NE.
enum class RKind { HH, VV, HV, VtH, HtH, HtV, VtV, HHt, HVt, VHt, VVt };

const char* r_kind_name(RKind k);
std::optional<RKind> r_kind_from_name(const std::string&);
RKind r_kind_for_rows(RowKind p, RowKind q);
std::pair<RowKind, RowKind> rows_for_r_kind(RKind k);
bool r_kind_is_mixed(RKind k);       // one row from each model
bool r_kind_tilde_first(RKind k);    // the NW->SE row belongs to the alternate model

// Conventions left open by the mixed weight tables; fixed empirically by the
// n = 2 mixed Yang-Baxter checks (see pin_mixed_conventions).
enum class WCountSide { above, below };       // which W's the VtH W-weight counts
enum class FusedCountAt { exclude_pair, upper, lower };

struct RConventions {
    WCountSide vth_w = WCountSide::above;
    FusedCountAt fused = FusedCountAt::exclude_pair;
};

// Weight of a full R^(n) vertex given the crossing types top-down (index 0 is
// the top crossing). Mixed kinds apply the pre-fusion rule: the first NN above
// a later SS (tilde-first kinds) or the first SS above a later NN
// (original-first kinds) merge into a single combined weight.
MPoly r_vertex_weight(RKind kind, const std::vector<RType>& types, VarId pvar, VarId qvar,
                      int n, const RConventions& conv);

// Weight of the single crossing at position k with its context counts taken
// from the full type vector (no pre-fusion applied).
MPoly r_piece_weight(RKind kind, const std::vector<RType>& types, int k, VarId pvar,
                     VarId qvar, int n, const RConventions& conv);

// Weight from raw configurations; zero when any piece is inadmissible.
MPoly r_vertex_weight_configs(RKind kind, const std::vector<R1Config>& configs,
                              const RTypeAssignment& assign, VarId pvar, VarId qvar, int n,
                              const RConventions& conv);

struct YbeFailure {
    unsigned long boundary;
    MPoly lhs, rhs;
};

struct YbeReport {
    RKind kind = RKind::HH;
    int n = 1;
    unsigned long boundaries_checked = 0;
    std::vector<YbeFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Exhaustive star-triangle check over all 2^(4n+2) boundary assignments with
// symbolic spectral parameters. Both sides sum over the three internal edges
// left free after straight-edge propagation. threads <= 1 runs the plain
// serial loop; larger values shard boundaries across OpenMP workers with a
// deterministic merge.
YbeReport verify_ybe(RKind kind, int n, const RTypeAssignment& assign,
                     const RConventions& conv, int threads = 1);

// Brute-forces the 24 candidate assignments of the four undetermined crossing
// configurations to {N, SS, NN, S}; returns the unique one for which the HH,
// VV and HV equations all hold at n = 1. Anything but exactly one survivor is
// a hard error.
RTypeAssignment pin_type_assignment();

// Searches the small convention space for the mixed tables; returns every
// combination passing all eight mixed kinds at n = 2 (the first entry is the
// pinned one).
std::vector<RConventions> pin_mixed_conventions(const RTypeAssignment& assign);

// Train argument: both orderings of two adjacent rows of a system, with the
// forced all-E braid factors attached. The two products must be equal.
std::pair<MPoly, MPoly> train_argument_demo(const LatticeSystem& sys, int upper_row,
                                            const RTypeAssignment& assign,
                                            const RConventions& conv);

// Particle bookkeeping of the mixed crossings: particles ride RIGHT on
// alternate-model strands and LEFT on original-model ones; every admissible
// configuration conserves them.
bool particle_conserving(RKind kind, const R1Config& cfg);

}  // namespace sllt
