#pragma once

#include "classint/errors.hpp"
#include "classint/rational.hpp"

#include <map>
#include <vector>

namespace classint {

// Exponents and frequencies are stored doubled ("half-units"), so the lattice
// (1/2)Z^n becomes Z^n.  A FrequencyVector mu2 represents the monomial
// e^{-<mu,x>} with mu = mu2/2.
using FrequencyVector = std::vector<int>;

// Exponents of (t_1,...,t_n) under t_j = e^{-(x_j - x_{j+1})}, t_n = e^{-x_n},
// also in half-units.  Related to FrequencyVector by partial sums.
using TExponent = std::vector<int>;

TExponent freq_to_texp(const FrequencyVector& mu2);
FrequencyVector texp_to_freq(const TExponent& nu2);

// Total t-degree in half-units: sum of partial sums of mu2.
long degree2(const FrequencyVector& mu2);

// Truncated multivariate exponential sum with exact rational coefficients.
//
// Window semantics: the represented function has no terms of t-degree below
// floor(); every term with floor() <= degree <= ceiling() is stored exactly
// (absence means exact zero); terms above ceiling() are unknown and dropped.
// Arithmetic combines windows conservatively so that every retained
// coefficient stays exact.
class ExpSum {
  public:
    // Degrees at or above this sentinel are treated as "exact to all orders".
    static constexpr long kInf = 1L << 20;

    explicit ExpSum(int rank, long ceiling = kInf)
        : rank_(rank), floor_(0), ceiling_(ceiling)
    {
    }

    int rank() const { return rank_; }
    long floor_degree() const { return floor_; }
    long ceiling() const { return ceiling_; }

    const std::map<FrequencyVector, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Inserts c * e^{-<mu,x>}; drops what falls outside the window, keeps the
    // no-stored-zeros invariant.
    void add_term(const FrequencyVector& mu2, const Rational& c);

    // Stored coefficient or exact zero; OutsideWindow beyond the window.
    Rational coefficient(const FrequencyVector& mu2) const;

    bool is_zero() const { return terms_.empty(); }

    // True when every coefficient of degree at most `hi` is known exactly
    // (below the floor they are certified zeros).
    bool window_covers(long hi) const { return ceiling_ >= hi; }

    void set_floor(long f);
    void set_ceiling(long c); // may only shrink; drops terms above

    ExpSum& operator+=(const ExpSum& rhs);
    ExpSum& operator-=(const ExpSum& rhs);
    ExpSum& operator*=(const Rational& c);

    friend ExpSum operator+(ExpSum a, const ExpSum& b) { return a += b; }
    friend ExpSum operator-(ExpSum a, const ExpSum& b) { return a -= b; }
    friend ExpSum operator*(ExpSum a, const Rational& c) { return a *= c; }
    friend ExpSum operator*(const Rational& c, ExpSum a) { return a *= c; }
    ExpSum operator-() const;

    friend ExpSum operator*(const ExpSum& a, const ExpSum& b);

    // d/dx_i (monomials are eigenvectors with eigenvalue -mu_i).
    ExpSum derivative(int i) const;

    // Multiplies each term by <w, mu>, mu in true units.  Realizes the theta
    // operators t d/dt along a direction.
    ExpSum weight(const std::vector<Rational>& w) const;

  private:
    int rank_;
    long floor_;
    long ceiling_;
    std::map<FrequencyVector, Rational> terms_;

    void check_rank(const ExpSum& other) const;
};

ExpSum es_add(const ExpSum& a, const ExpSum& b);
ExpSum es_mul(const ExpSum& a, const ExpSum& b);

// Rank-1 substitution t -> a t^r with r = r_num/r_den.  Exact; throws
// NonLatticeExponent when an exponent leaves the half-integer lattice and
// SideConditionViolated when a^nu is irrational for some term.
ExpSum es_substitute(const ExpSum& s, const Rational& scale, const Rational& power);

Rational es_coefficient(const ExpSum& s, const FrequencyVector& mu2);

// Rank-1 helpers used throughout the functional-equation machinery.
ExpSum rank1_monomial(int exp2, const Rational& c, long ceiling = ExpSum::kInf);
Rational rank1_coeff(const ExpSum& s, int exp2); // OutsideWindow past the window
ExpSum strip_constant(const ExpSum& s);          // drops the frequency-0 term

} // namespace classint
