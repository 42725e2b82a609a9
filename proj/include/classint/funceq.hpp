#pragma once

#include "classint/b2tuple.hpp"
#include "classint/catalog.hpp"
#include "classint/roots.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace classint {

// The integrated series (U_ij, U_jk, U_ik) of a type-A triple, rank 1, zero
// constant terms.
struct ATriple {
    ExpSum uij{1}, ujk{1}, uik{1};
};

// Per-positive-root integrated series U_alpha at ambient rank n.
struct BnSolution {
    int rank = 0;
    std::map<Root, ExpSum> u;

    const ExpSum* series(const Root& alpha) const
    {
        auto it = u.find(alpha);
        return it == u.end() ? nullptr : &it->second;
    }
};

struct Witness {
    long p = 0, q = 0;
    Rational value;
    std::string note;
};

struct ResidualReport {
    bool ok = true;
    std::vector<Witness> witnesses;
    long window = 0; // half-units actually certified
};

// ---- type A ----------------------------------------------------------------

// pq(p-q)(C^ij_p C^jk_q - C^ij_{p-q} C^ik_q - C^jk_{q-p} C^ik_p) over the
// window (exponents in half-units).
ResidualReport ani_residual(const ATriple& a, long window);

// Assembles the full three-variable obstruction from u = tU' and checks that
// it vanishes as a series.
ResidualReport uijk_residual(const ATriple& a, long window);

struct ExtendResult {
    enum class Status { Ok, Inconsistent, Underdetermined };
    Status status = Status::Ok;
    ATriple triple;
    std::string detail;
};

// Extends leading coefficients by the shift recurrences; every forced value
// inside the seed window must agree with the seed.
ExtendResult extend_a_solution(const ATriple& seed, long target_ceiling);

// ---- rank 2 ----------------------------------------------------------------

// pq(2p-q)(p-q)(V_{2p-q} U+_{q-p} + V_q U-_{p-q} + W_{q-2p} U+_p - W_q U-_p)
ResidualReport b2_residual(const B2Tuple& sol, long window);

// Exact rational nullspace of the residual system in (V, W) for fixed U's,
// over supports |exponent| <= support (half-units, constant terms excluded).
struct VWBasis {
    int dimension = 0;
    std::vector<B2Tuple> basis; // uplus/uminus copied from the input
};

VWBasis solve_vw_linear(const ExpSum& uplus, const ExpSum& uminus, long support);

// The decomposition test behind the equivalence of the coefficient condition
// with the four-function identity: the product series must be supported on
// the four lines st^2, s, st, t.
bool fg_decomposition_exists(const B2Tuple& sol);

// ---- type B_n --------------------------------------------------------------

BnSolution bn_solution_from_spec(const PotentialSpec& spec, long ceiling);

// S^{ij} - S^{ji} for one pair, as a residual report over the frequency grid.
ResidualReport bn_residual(const BnSolution& sol, int i, int j);

// The triple condition on long roots (alpha, beta, alpha+beta).
ResidualReport a2b_residual(const BnSolution& sol, const Root& alpha, const Root& beta,
                            long window);

enum class LemTwoCase { Case1, Case2First, Case2Second, Violation };

// Classifies U_beta against the allowed forms when U_alpha = C t^r is a
// monomial and the pair is connected.
LemTwoCase lem_two_case(const ExpSum& ualpha, const ExpSum& ubeta, bool equal_length,
                        int inner_sign);

// ---- regularity ------------------------------------------------------------

bool has_regular_singularity(const B2Tuple& sol);
bool has_regular_singularity(const BnSolution& sol);

// True when every Weyl chart re-expansion stays holomorphic at its origin.
// Decided through the rational normal form of each root series; an
// unrecognized series counts as not regular.
bool regular_everywhere(const BnSolution& sol);

// Rational normal form of a rank-1 series: monomials plus geometric tails.
struct SeriesShape {
    struct Mono {
        long exp2;
        Rational coeff;
    };
    struct Geom {
        long step2; // signed: tail runs toward +/- infinity
        Rational first;
        Rational ratio;
    };
    std::vector<Mono> monos;
    std::vector<Geom> geoms;
};

std::optional<SeriesShape> recognize_series(const ExpSum& s);

} // namespace classint
