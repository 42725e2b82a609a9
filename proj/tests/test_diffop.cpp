#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "classint/diffop.hpp"

#include <random>

using namespace classint;

namespace {

ExpDiffOp random_op(std::mt19937& rng, int rank, int nterms, long ceiling)
{
    std::uniform_int_distribution<int> exp_dist(-1, 2);
    std::uniform_int_distribution<int> ord_dist(0, 2);
    std::uniform_int_distribution<int> num_dist(-4, 4);
    ExpDiffOp a(rank, ceiling);
    for (int t = 0; t < nterms; ++t) {
        FrequencyVector mu2(rank);
        MultiIndex beta(rank, 0);
        for (int i = 0; i < rank; ++i)
            mu2[i] = 2 * exp_dist(rng);
        // keep total order at most 2 so nested brackets stay under the cap
        int total = ord_dist(rng);
        for (int j = 0; j < total; ++j)
            beta[rng() % rank] += 1;
        a.add_term(mu2, beta, Rational(num_dist(rng)));
    }
    return a;
}

bool op_same_in_window(const ExpDiffOp& a, const ExpDiffOp& b)
{
    long lo = std::max(a.floor_degree(), b.floor_degree());
    long hi = std::min(a.ceiling(), b.ceiling());
    auto covered = [&](const ExpDiffOp& x, const ExpDiffOp& y) {
        for (const auto& [k, c] : x.terms()) {
            long d = degree2(k.first);
            if (d < lo || d > hi)
                continue;
            auto it = y.terms().find(k);
            Rational v = it == y.terms().end() ? Rational(0) : it->second;
            if (v != c)
                return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

bool op_zero_in_window(const ExpDiffOp& a)
{
    for (const auto& [k, c] : a.terms())
        if (c != 0)
            return false;
    return true;
}

OneVarTerm ov(Rational c, TermKind k, Rational f) { return OneVarTerm{std::move(c), k, std::move(f)}; }

} // namespace

TEST_CASE("composition via the product rule")
{
    // d_1 o e^{-x_1} = e^{-x_1} d_1 - e^{-x_1}
    ExpDiffOp d1 = op_partial(1, {1});
    ExpSum ex(1);
    ex.add_term({2}, Rational(1));
    ExpDiffOp e = op_from_expsum(ex);
    ExpDiffOp c = op_compose(d1, e);
    CHECK(c.terms().size() == 2);
    CHECK(c.terms().at({{2}, {1}}) == 1);
    CHECK(c.terms().at({{2}, {0}}) == -1);

    CHECK(op_same_in_window(op_compose(op_identity(1), c), c));

    // d_1^2 o e^{-x_1} = e^{-x_1}(d_1^2 - 2 d_1 + 1)
    ExpDiffOp c2 = op_compose(op_partial(1, {2}), e);
    CHECK(c2.terms().at({{2}, {2}}) == 1);
    CHECK(c2.terms().at({{2}, {1}}) == -2);
    CHECK(c2.terms().at({{2}, {0}}) == 1);
}

TEST_CASE("commutator basics")
{
    ExpSum ex(1);
    ex.add_term({2}, Rational(1));
    ExpDiffOp e = op_from_expsum(ex);
    ExpDiffOp c = op_commutator(op_partial(1, {1}), e);
    CHECK(c.terms().size() == 1);
    CHECK(c.terms().at({{2}, {0}}) == -1);

    std::mt19937 rng(5);
    ExpDiffOp a = random_op(rng, 2, 5, 40);
    CHECK(op_zero_in_window(op_commutator(a, a)));
}

TEST_CASE("commutator bilinearity, antisymmetry, Jacobi")
{
    std::mt19937 rng(17);
    for (int it = 0; it < 12; ++it) {
        ExpDiffOp a = random_op(rng, 2, 3, 60);
        ExpDiffOp b = random_op(rng, 2, 3, 60);
        ExpDiffOp c = random_op(rng, 2, 3, 60);
        CHECK(op_zero_in_window(op_commutator(a, b) + op_commutator(b, a)));
        ExpDiffOp lhs = op_commutator(a + b, c);
        ExpDiffOp rhs = op_commutator(a, c) + op_commutator(b, c);
        CHECK(op_same_in_window(lhs, rhs));
        ExpDiffOp jac = op_commutator(a, op_commutator(b, c)) +
                        op_commutator(b, op_commutator(c, a)) +
                        op_commutator(c, op_commutator(a, b));
        CHECK(op_zero_in_window(jac));
    }
}

TEST_CASE("adjoint")
{
    ExpDiffOp d1 = op_partial(2, {1, 0});
    ExpDiffOp t = op_adjoint(d1);
    CHECK(t.terms().at({{0, 0}, {1, 0}}) == -1);

    ExpSum ex(2);
    ex.add_term({2, 0}, Rational(1));
    CHECK(op_same_in_window(op_adjoint(op_from_expsum(ex)), op_from_expsum(ex)));

    std::mt19937 rng(23);
    for (int it = 0; it < 10; ++it) {
        ExpDiffOp a = random_op(rng, 2, 4, 60);
        ExpDiffOp b = random_op(rng, 2, 4, 60);
        CHECK(op_same_in_window(op_adjoint(op_adjoint(a)), a));
        // t[A,B] = -[tA, tB]
        ExpDiffOp lhs = op_adjoint(op_commutator(a, b));
        ExpDiffOp rhs = -op_commutator(op_adjoint(a), op_adjoint(b));
        CHECK(op_same_in_window(lhs, rhs));
    }
}

TEST_CASE("build_P")
{
    PotentialSpec zero;
    zero.rank = 2;
    ExpDiffOp lap = build_P(zero, 16);
    CHECK(lap.terms().size() == 2);
    CHECK(lap.terms().at({{0, 0}, {2, 0}}) == 1);
    CHECK(lap.terms().at({{0, 0}, {0, 2}}) == 1);

    PotentialSpec toda;
    toda.rank = 2;
    toda.terms.push_back(PotentialTerm{Rational(1), TermKind::Exp, Rational(2), {2, -2}});
    ExpDiffOp p = build_P(toda, 16);
    CHECK(p.terms().at({{4, -4}, {0, 0}}) == 1);
}

TEST_CASE("integrate_T hand oracle")
{
    // u+ = 0, u- = e^{-(x-y)}, v = e^x, w = e^{-y}  ->  T = e^{-x}/2 + e^{y}/2
    B2Potential p;
    p.uminus = {ov(1, TermKind::Exp, 1)};
    p.v = {ov(1, TermKind::Exp, -1)};
    p.w = {ov(1, TermKind::Exp, 1)};
    CHECK(compat_residual_b2(p, 32).is_zero());
    ExpSum T = integrate_T(p, 32);
    CHECK(T.coefficient({2, 0}) == Rational(1, 2));
    CHECK(T.coefficient({0, -2}) == Rational(1, 2));
    CHECK(T.terms().size() == 2);

    B2Potential none;
    CHECK(integrate_T(none, 16).is_zero());
}

TEST_CASE("integrate_T failure modes")
{
    // constant u- makes the T_x source x-free
    B2Potential p;
    p.uminus = {ov(1, TermKind::Const, 0)};
    p.w = {ov(1, TermKind::Exp, 1)};
    CHECK_THROWS_AS(integrate_T(p, 16), ObstructedIntegration);

    // incompatible pair: v against nothing on the w side
    B2Potential q;
    q.uminus = {ov(1, TermKind::Exp, 1)};
    q.v = {ov(1, TermKind::Exp, 1)};
    CHECK(!compat_residual_b2(q, 24).is_zero());
    CHECK_THROWS_AS(integrate_T(q, 24), InconsistentPair);
}

TEST_CASE("compat residual examples")
{
    // trivial solution: u+ = u- = 0
    B2Potential p;
    p.v = {ov(3, TermKind::Exp, 2)};
    p.w = {ov(5, TermKind::InvSinhSq, 1)};
    CHECK(compat_residual_b2(p, 24).is_zero());

    // u- = sh^{-2}(x-y), v = e^x, w = 0: not compatible
    B2Potential q;
    q.uminus = {ov(1, TermKind::InvSinhSq, 1)};
    q.v = {ov(1, TermKind::Exp, -1)};
    CHECK(!compat_residual_b2(q, 24).is_zero());
}

TEST_CASE("build_Q_b2 zero potential")
{
    B2Potential none;
    ExpSum T = integrate_T(none, 16);
    ExpDiffOp q = build_Q_b2(none, T, 16);
    CHECK(q.terms().size() == 1);
    CHECK(q.terms().at({{0, 0}, {2, 2}}) == 1);
    ExpDiffOp p = build_P(PotentialSpec{2, {}}, 16);
    CHECK(op_zero_in_window(op_commutator(p, q)));
}

TEST_CASE("Toda-C2(1) commuting pair at ceiling 32")
{
    // u+ = 0, u- = e^{-t}, v = 2e^{t} + 3e^{2t}, w = 5e^{-t} + 7e^{-2t}
    B2Potential p;
    p.uminus = {ov(1, TermKind::Exp, 1)};
    p.v = {ov(2, TermKind::Exp, -1), ov(3, TermKind::Exp, -2)};
    p.w = {ov(5, TermKind::Exp, 1), ov(7, TermKind::Exp, 2)};

    long ceiling = 56; // commutator window still covers degree 32
    CHECK(compat_residual_b2(p, ceiling).is_zero());
    ExpSum T = integrate_T(p, ceiling);
    ExpDiffOp Q = build_Q_b2(p, T, ceiling);
    CHECK(op_same_in_window(op_adjoint(Q), Q));
    ExpDiffOp P = build_P(b2_to_spec(p), ceiling);
    ExpDiffOp comm = op_commutator(P, Q);
    CHECK(comm.ceiling() >= 32);
    CHECK(op_zero_in_window(comm));

    // P_2 = P^2 - 2Q has leading part dx^4 + dy^4
    ExpDiffOp p2 = op_compose(P, P) - (Q + Q);
    ExpDiffOp lead = op_order_part(p2, 4);
    CHECK(lead.terms().size() == 2);
    CHECK(lead.terms().at({{0, 0}, {4, 0}}) == 1);
    CHECK(lead.terms().at({{0, 0}, {0, 4}}) == 1);
}

TEST_CASE("Trig-B2 commuting pair at ceiling 32")
{
    // u+ = u- = sh^{-2}(t); v = w = 2 sh^{-2}(2t) + 3 sh^{-2}(t) + 5 ch(2t) + 7 ch(4t)
    B2Potential p;
    p.uplus = {ov(1, TermKind::InvSinhSq, 1)};
    p.uminus = {ov(1, TermKind::InvSinhSq, 1)};
    p.v = {ov(2, TermKind::InvSinhSq, 2), ov(3, TermKind::InvSinhSq, 1), ov(5, TermKind::Cosh, 2),
           ov(7, TermKind::Cosh, 4)};
    p.w = p.v;

    long ceiling = 72; // ch(4t) floors at -8 twice over in products
    CHECK(compat_residual_b2(p, ceiling).is_zero());
    ExpSum T = integrate_T(p, ceiling);
    ExpDiffOp Q = build_Q_b2(p, T, ceiling);
    CHECK(op_same_in_window(op_adjoint(Q), Q));
    ExpDiffOp P = build_P(b2_to_spec(p), ceiling);
    ExpDiffOp comm = op_commutator(P, Q);
    CHECK(comm.ceiling() >= 32);
    CHECK(op_zero_in_window(comm));
}
