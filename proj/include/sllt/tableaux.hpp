#pragma once

#include <string>
#include <vector>

#include "sllt/poly.hpp"
#include "sllt/shapes.hpp"

namespace sllt {

enum class LetterKind { HORIZONTAL, VERTICAL };

struct Letter {
    std::string name;   // "1", "2", "1'", ...
    LetterKind kind;
    VarId var;          // x_i for horizontal letters, y_j for vertical ones
};

// A totally ordered interleaving of the unprimed (horizontal) and primed
// (vertical) alphabets. Within each kind the letters keep their own order.
class AlphabetOrder {
  public:
    AlphabetOrder() = default;
    explicit AlphabetOrder(std::vector<Letter> letters);

    // Parse "1,1',2" style lists: plain letters are horizontal with variables
    // x_1, x_2, ... in order of their labels; primed are vertical with y_j.
    static AlphabetOrder parse(const std::string& spec);
    // nx horizontal letters followed by ny vertical ones.
    static AlphabetOrder trailing_primes(int nx, int ny);

    const std::vector<Letter>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    int count(LetterKind k) const;
    AlphabetOrder prefix(int k) const;  // letters [0, k)
    AlphabetOrder suffix(int k) const;  // letters [k, size)

  private:
    std::vector<Letter> letters_;
};

// A super ribbon tableau: the chain of shapes visited letter by letter,
// together with per-letter spin and ribbon count.
struct SuperTableau {
    std::vector<Partition> chain;  // chain[0] = inner, chain[size] = outer
    std::vector<int> spins;        // per letter
    std::vector<int> counts;       // ribbons added per letter
    int total_spin() const;
};

std::vector<SuperTableau> enumerate_tableaux(const SkewShape& s, int n,
                                             const AlphabetOrder& order);

// Spin-weighted generating polynomial: sum over tableaux of
//   q^spin * prod x_i^{wt_i} * prod (-y_j)^{wt'_j},
// the sign folded into the coefficient.
MPoly super_llt(const SkewShape& s, int n, const AlphabetOrder& order);

// Schur polynomial s_lambda(x_1..x_r) by direct semistandard tableau
// enumeration. Independent cross-check oracle for the n = 1 specialisation.
MPoly schur_polynomial(const Partition& lambda, int nvars);

}  // namespace sllt
