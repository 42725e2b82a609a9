#pragma once

#include "classint/expsum.hpp"

#include <vector>

namespace classint {

// One-variable basis functions attached to a root direction s = <alpha,x>.
enum class TermKind {
    Exp,       // e^{-r s}
    InvSinhSq, // sh^{-2}(r s)
    Cosh,      // ch(r s)
    Const,
};

struct PotentialTerm {
    Rational coeff;
    TermKind kind = TermKind::Const;
    Rational freq;        // the r above; nonzero unless Const
    FrequencyVector root; // alpha, in half-units; empty/zero only for Const
};

struct PotentialSpec {
    int rank = 0;
    std::vector<PotentialTerm> terms;
};

// Exact expansion of a single term in the region t -> 0 (dominant chamber
// x_1 > ... > x_n > 0):
//   Exp(r)        ->  e^{-r<a,x>}
//   Cosh(r)       ->  (e^{r<a,x>} + e^{-r<a,x>})/2
//   InvSinhSq(r)  ->  4 sum_{k>=1} k e^{-2kr<a,x>}, truncated at `ceiling`
// InvSinhSq requires <a,x> -> +infinity as t -> 0, else DivergentDirection.
ExpSum expand_term(const PotentialTerm& term, int rank, long ceiling);

ExpSum expand_potential(const PotentialSpec& spec, long ceiling);

// Removes frequency-zero terms from each component; constants never affect
// any of the commutation conditions.
std::vector<ExpSum> strip_constants(const std::vector<ExpSum>& tuple);

// A one-variable potential, not yet attached to a root direction.
struct OneVarTerm {
    Rational coeff;
    TermKind kind = TermKind::Const;
    Rational freq;
};
using OneVarPotential = std::vector<OneVarTerm>;

PotentialTerm attach(const OneVarTerm& term, const FrequencyVector& root);

// Expansion of the one-variable function of s in powers of z = e^{-s}
// (rank-1 series, exponents in half-units).
ExpSum expand_onevar(const OneVarPotential& p, long ceiling);

} // namespace classint
