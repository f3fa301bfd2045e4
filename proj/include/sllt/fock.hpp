#pragma once

#include <map>
#include <vector>

#include "sllt/poly.hpp"
#include "sllt/shapes.hpp"
#include "sllt/tableaux.hpp"

namespace sllt {

// Vector in the Fock space spanned by |lambda>, coefficients in MPoly.
// <lambda, mu> = delta_{lambda mu}, extended bilinearly.
struct FockVector {
    std::map<Partition, MPoly> terms;

    void add(const Partition& p, const MPoly& c);
    MPoly coefficient(const Partition& p) const;
    bool operator==(const FockVector&) const = default;
    static FockVector basis(const Partition& p) {
        FockVector v;
        v.terms.emplace(p, MPoly(1));
        return v;
    }
};

// kappa(h_j) and kappa(e_j) for the Heisenberg parameters
// a_k = 1 + q^{2k} + ... + q^{2k(n-1)}; always integral polynomials in q.
struct KappaValues {
    int n = 1;
    std::vector<MPoly> h;  // index j = 0..j_max
    std::vector<MPoly> e;
};

KappaValues kappa(int n, int j_max);

// Independent oracles: complete homogeneous / elementary symmetric polynomials
// evaluated at the alphabet (1, q^2, ..., q^{2(n-1)}) by direct expansion.
MPoly homogeneous_at_q_powers(int n, int j);
MPoly elementary_at_q_powers(int n, int j);

enum class StripOp { U, D, Utilde, Dtilde };

struct OperatorAudit {
    int max_part = 0;
    int max_length = 0;
    bool clipped = false;  // a reachable shape was cut off by the cap
};

// U_k adds horizontal strips of k ribbons with weight q^spin, Utilde_k adds
// vertical ones; D_k / Dtilde_k are the adjoint removals.
FockVector apply_operator(StripOp op, int k, const FockVector& v, int n,
                          const ShapeCap& cap, OperatorAudit* audit = nullptr);

enum class CommutationPair { DU, DtUt, DtU, DUt };

struct CommutationReport {
    int n = 0, a = 0, b = 0;
    CommutationPair pair = CommutationPair::DU;
    struct Entry {
        Partition shape;
        FockVector residual;  // lhs - rhs applied to |shape>; must vanish
    };
    std::vector<Entry> entries;
    bool all_zero() const;
};

// Checks D_b U_a = sum_j kappa(h_j) U_{a-j} D_{b-j} (and the three tilde
// variants with kappa(e_j) where exactly one operator is tilde) on each basis
// vector of the domain. The cap is derived so no reachable shape is clipped.
CommutationReport verify_commutation(int n, int a, int b, CommutationPair pair,
                                     const std::vector<Partition>& domain);

enum class OperatorRoute { F, G };

// The generating-function route to the super LLT polynomial: F builds up from
// the inner shape with U-operators, G tears down from the outer shape with
// D-operators. Both agree with the tableau definition.
MPoly operator_polynomial(OperatorRoute route, const SkewShape& s, int n,
                          const AlphabetOrder& order);

}  // namespace sllt
