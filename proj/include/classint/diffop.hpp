#pragma once

#include "classint/expsum.hpp"
#include "classint/potential.hpp"

#include <map>
#include <utility>
#include <vector>

namespace classint {

// partial^beta = d^{b1}/dx_1^{b1} ... d^{bn}/dx_n^{bn}
using MultiIndex = std::vector<int>;

int multi_order(const MultiIndex& beta);

// Differential operator with ExpSum coefficients.  Monomials e^{-<mu,x>} act
// diagonally under each d/dx_j, which keeps composition exact.  The window
// bookkeeping on the frequency part mirrors ExpSum.
class ExpDiffOp {
  public:
    static constexpr int kMaxOrder = 8;

    explicit ExpDiffOp(int rank, long ceiling = ExpSum::kInf)
        : rank_(rank), floor_(0), ceiling_(ceiling)
    {
    }

    int rank() const { return rank_; }
    long floor_degree() const { return floor_; }
    long ceiling() const { return ceiling_; }

    using Key = std::pair<FrequencyVector, MultiIndex>;
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const FrequencyVector& mu2, const MultiIndex& beta, const Rational& c);

    int order() const;

    ExpDiffOp& operator+=(const ExpDiffOp& rhs);
    ExpDiffOp& operator-=(const ExpDiffOp& rhs);
    ExpDiffOp& operator*=(const Rational& c);
    ExpDiffOp operator-() const;
    friend ExpDiffOp operator+(ExpDiffOp a, const ExpDiffOp& b) { return a += b; }
    friend ExpDiffOp operator-(ExpDiffOp a, const ExpDiffOp& b) { return a -= b; }

    void set_ceiling(long c);
    void set_floor(long f);

  private:
    int rank_;
    long floor_;
    long ceiling_;
    std::map<Key, Rational> terms_;
};

ExpDiffOp op_from_expsum(const ExpSum& s);
ExpDiffOp op_partial(int rank, const MultiIndex& beta); // exact window
ExpDiffOp op_identity(int rank);

ExpDiffOp op_compose(const ExpDiffOp& a, const ExpDiffOp& b);
ExpDiffOp op_commutator(const ExpDiffOp& a, const ExpDiffOp& b);
ExpDiffOp op_adjoint(const ExpDiffOp& a);

// Order-k part (terms with |beta| = k) as a new operator.
ExpDiffOp op_order_part(const ExpDiffOp& a, int k);

// P = sum_j d^2/dx_j^2 + R(x)
ExpDiffOp build_P(const PotentialSpec& spec, long ceiling);

// The four one-variable pieces of a rank-2 potential, as functions of
// x+y, x-y, x, y respectively.
struct B2Potential {
    OneVarPotential uplus, uminus, v, w;
};

ExpSum expand_b2_slot(const OneVarPotential& p, int slot, long ceiling); // slot 0..3
PotentialSpec b2_to_spec(const B2Potential& p);

// Left minus right side of the compatibility condition, as a rank-2 series.
ExpSum compat_residual_b2(const B2Potential& p, long ceiling);

// Order-zero correction of the partner operator, solved by termwise
// integration of its defining gradient system; the integration constant is
// fixed by a zero frequency-0 coefficient.  ObstructedIntegration when a
// source term cannot be integrated, InconsistentPair when the second
// equation fails.
ExpSum integrate_T(const B2Potential& p, long ceiling);

// Q = (dxdy + (u+ - u-)/2)^2 + w dx^2 + v dy^2 + vw + T
ExpDiffOp build_Q_b2(const B2Potential& p, const ExpSum& T, long ceiling);

} // namespace classint
