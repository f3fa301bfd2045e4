#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sllt {

using Rational = mpq_class;

// Canonical "p/q" form (denominator always printed, always positive).
std::string rational_str(const Rational& r);
Rational rational_from_str(const std::string& s);

// Variable universe. q is the single Laurent variable; every other family is
// constrained to nonnegative exponents so sign/exponent bugs surface early.
enum class VarFamily : std::uint8_t { Q = 0, X, Y, W, Z, GENERIC };

struct VarId {
    VarFamily family = VarFamily::Q;
    std::uint32_t index = 0;  // unused for Q

    friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

inline constexpr VarId q_var() { return {VarFamily::Q, 0}; }
inline constexpr VarId x_var(std::uint32_t i) { return {VarFamily::X, i}; }
inline constexpr VarId y_var(std::uint32_t i) { return {VarFamily::Y, i}; }
inline constexpr VarId w_var(std::uint32_t i) { return {VarFamily::W, i}; }
inline constexpr VarId z_var(std::uint32_t i) { return {VarFamily::Z, i}; }
inline constexpr VarId g_var(std::uint32_t i) { return {VarFamily::GENERIC, i}; }

std::string var_name(VarId v);             // "q", "x1", "y2", "w1", "z3", "g7"
VarId var_from_name(const std::string&);   // inverse of var_name

// Sparse exponent map, sorted by VarId, zero entries never stored.
class Monomial {
  public:
    Monomial() = default;
    static Monomial variable(VarId v, int e = 1);

    int exponent(VarId v) const;
    const std::vector<std::pair<VarId, int>>& entries() const { return exps_; }
    bool is_one() const { return exps_.empty(); }

    // Total degree over all non-q variables.
    int degree_non_q() const;
    int degree_q() const { return exponent(q_var()); }

    Monomial times(const Monomial& o) const;
    Monomial power(int e) const;
    Monomial inverse() const;

    // Valid iff every non-q exponent is >= 0.
    bool valid() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Lexicographic over the canonical variable order (q, X, Y, W, Z, GENERIC).
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    std::string str() const;

  private:
    std::vector<std::pair<VarId, int>> exps_;
};

// Exact sparse multivariate polynomial over the rationals, Laurent in q.
class MPoly {
  public:
    MPoly() = default;
    MPoly(int c) : MPoly(Rational(c)) {}
    MPoly(const Rational& c);
    static MPoly variable(VarId v, int e = 1);
    static MPoly term(const Monomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    std::size_t term_count() const { return terms_.size(); }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly scaled(const Rational& c) const;
    MPoly pow(unsigned k) const;

    friend bool operator==(const MPoly&, const MPoly&) = default;

    // Drop every monomial whose total degree in non-q variables exceeds bound.
    MPoly truncate_degree(int bound) const;
    int max_degree_non_q() const;  // -1 for the zero polynomial

    // Simultaneous exact substitution. Variables absent from the assignment are
    // left untouched. Substituting into a negative exponent requires the value
    // to be a single invertible term; anything else throws.
    MPoly substitute(const std::map<VarId, MPoly>& assignment) const;
    MPoly substitute_q_inverse() const;  // q -> 1/q

    // True iff every coefficient is an integer (denominator 1).
    bool integral() const;

    std::string str() const;

  private:
    std::map<Monomial, Rational> terms_;
    void insert(const Monomial& m, const Rational& c);
};

enum class FactorSign { plus, minus };
enum class FactorPlace { numerator, denominator };

// prod_{t=0}^{n-1} (1 +/- q^{2t} u v)^{+/-1}, denominator factors expanded by
// geometric series; powers of the pair (u v) kept up to (u v)^bound.
MPoly expand_product_factor(FactorSign sign, FactorPlace place, VarId u, VarId v,
                            int n, int bound);

}  // namespace sllt
