#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "classint/potential.hpp"

using namespace classint;

namespace {

PotentialTerm term(Rational coeff, TermKind kind, Rational freq, FrequencyVector root)
{
    return PotentialTerm{std::move(coeff), kind, std::move(freq), std::move(root)};
}

// independent oracle: 4 q / (1-q)^2 = 4 sum k q^k with q = e^{-2r<a,x>}
ExpSum invsinhsq_oracle(const FrequencyVector& step2, long ceiling)
{
    int n = (int)step2.size();
    ExpSum geo(n, ceiling);
    FrequencyVector mu2(n, 0);
    geo.add_term(mu2, Rational(1));
    for (int k = 1;; ++k) {
        for (int i = 0; i < n; ++i)
            mu2[i] = k * step2[i];
        if (degree2(mu2) > ceiling)
            break;
        geo.add_term(mu2, Rational(1));
    }
    ExpSum q(n, ceiling);
    q.add_term(step2, Rational(4));
    return q * geo * geo;
}

} // namespace

TEST_CASE("sh^{-2} expansion against the geometric oracle")
{
    // sh^{-2}(x), t = e^{-x}: 4t^2 + 8t^4 + 12t^6 + ...
    ExpSum s = expand_term(term(1, TermKind::InvSinhSq, 1, {2}), 1, 32);
    CHECK(s.coefficient({4}) == 4);
    CHECK(s.coefficient({8}) == 8);
    CHECK(s.coefficient({12}) == 12);
    CHECK(s.coefficient({6}) == 0);

    ExpSum oracle = invsinhsq_oracle({4}, 32);
    CHECK((s - oracle).is_zero());

    // closed-form coefficient law c_{2kr} = 4k through the window, on e_1 at rank 2
    // (the term at k has t-degree 16k)
    ExpSum s4 = expand_term(term(1, TermKind::InvSinhSq, 2, {2, 0}), 2, 40);
    for (int k = 1; 16 * k <= 40; ++k)
        CHECK(s4.coefficient({8 * k, 0}) == Rational(4 * k));
}

TEST_CASE("cosh and exp expansions")
{
    // ch(2x) -> t^{-2}/2 + t^2/2
    ExpSum c = expand_term(term(1, TermKind::Cosh, 2, {2}), 1, 16);
    CHECK(c.coefficient({-4}) == Rational(1, 2));
    CHECK(c.coefficient({4}) == Rational(1, 2));
    CHECK(c.terms().size() == 2);
    CHECK(c.floor_degree() == -4);

    ExpSum e = expand_term(term(Rational(5), TermKind::Exp, Rational(1, 2), {2, -2}), 2, 16);
    CHECK(e.coefficient({1, -1}) == 5);
}

TEST_CASE("divergent direction is rejected")
{
    // sh^{-2}(x_2 - x_1) in the chamber x_1 > x_2
    CHECK_THROWS_AS(expand_term(term(1, TermKind::InvSinhSq, 1, {-2, 2}), 2, 16),
                    DivergentDirection);
}

TEST_CASE("expand_potential")
{
    // Toda chain piece e^{-2(x_1-x_2)} -> t_1 exponent 4 in half-units
    PotentialSpec spec;
    spec.rank = 2;
    spec.terms.push_back(term(1, TermKind::Exp, 2, {2, -2}));
    ExpSum s = expand_potential(spec, 32);
    CHECK(s.coefficient({4, -4}) == 1);
    CHECK(freq_to_texp({4, -4}) == TExponent{4, 0});

    PotentialSpec empty;
    empty.rank = 3;
    CHECK(expand_potential(empty, 8).is_zero());

    // additivity in the term list
    PotentialSpec two = spec;
    two.terms.push_back(term(3, TermKind::InvSinhSq, 1, {2, 2}));
    ExpSum lhs = expand_potential(two, 24);
    ExpSum rhs = expand_potential(spec, 24) +
                 expand_term(term(3, TermKind::InvSinhSq, 1, {2, 2}), 2, 24);
    CHECK((lhs - rhs).is_zero());
}

TEST_CASE("Trig-B2 u-side with C0=1 expands termwise")
{
    // 4 sum_k k (e^{-2k(x_1+x_2)} + e^{-2k(x_1-x_2)})
    PotentialSpec spec;
    spec.rank = 2;
    spec.terms.push_back(term(1, TermKind::InvSinhSq, 1, {2, 2}));
    spec.terms.push_back(term(1, TermKind::InvSinhSq, 1, {2, -2}));
    ExpSum s = expand_potential(spec, 24);
    for (int k = 1; 12 * k <= 24; ++k)
        CHECK(s.coefficient({4 * k, 4 * k}) == Rational(4 * k));
    for (int k = 1; 4 * k <= 24; ++k)
        CHECK(s.coefficient({4 * k, -4 * k}) == Rational(4 * k));
}

TEST_CASE("strip_constants")
{
    ExpSum a(1, 20);
    a.add_term({0}, Rational(1));
    a.add_term({2}, Rational(1));
    ExpSum b(1, 20);
    b.add_term({0}, Rational(2));
    ExpSum c(1, 20);
    c.add_term({-2}, Rational(1));
    ExpSum d(1, 20);

    auto out = strip_constants({a, b, c, d});
    CHECK(out[0].coefficient({2}) == 1);
    CHECK(out[0].coefficient({0}) == 0);
    CHECK(out[1].is_zero());
    CHECK(out[2].coefficient({-2}) == 1);
    CHECK(out[3].is_zero());

    // idempotence
    auto again = strip_constants(out);
    for (int i = 0; i < 4; ++i)
        CHECK((again[i] - out[i]).is_zero());
}
