#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "classint/roots.hpp"

#include <random>

using namespace classint;

TEST_CASE("positive root counts")
{
    CHECK(positive_roots(2, RootFlavor::B) ==
          RootSubset{{1, -1}, {1, 1}, {1, 0}, {0, 1}});
    CHECK(positive_roots(1, RootFlavor::B) == RootSubset{{1}});
    CHECK(positive_roots(3, RootFlavor::B).size() == 9);
    for (int n = 2; n <= 6; ++n) {
        CHECK((int)positive_roots(n, RootFlavor::B).size() == n * n);
        CHECK((int)positive_roots(n, RootFlavor::D).size() == n * (n - 1));
        CHECK((int)positive_roots(n, RootFlavor::A).size() == n * (n - 1) / 2);
    }
}

TEST_CASE("reflections")
{
    CHECK(reflect({1, 0}, {3, 5}) == std::vector<long>{-3, 5});
    CHECK(reflect({1, -1}, {3, 5}) == std::vector<long>{5, 3});
    CHECK_THROWS_AS(reflect({0, 0}, {1, 2}), ZeroVector);

    std::mt19937 rng(31);
    std::uniform_int_distribution<int> d(-9, 9);
    auto roots = positive_roots(3, RootFlavor::B);
    std::vector<Root> rv(roots.begin(), roots.end());
    for (int it = 0; it < 100; ++it) {
        std::vector<long> x = {d(rng), d(rng), d(rng)};
        const Root& v = rv[rng() % rv.size()];
        CHECK(reflect(v, reflect(v, x)) == x);
    }
}

TEST_CASE("weyl group order by enumeration")
{
    for (int n = 1; n <= 4; ++n) {
        long expect = 1;
        for (int i = 1; i <= n; ++i)
            expect *= i;
        expect <<= n;
        CHECK((long)weyl_group(n).size() == expect);
    }

    // group structure sanity: inverse and composition agree with the action
    std::mt19937 rng(7);
    auto g3 = weyl_group(3);
    for (int it = 0; it < 50; ++it) {
        const auto& a = g3[rng() % g3.size()];
        const auto& b = g3[rng() % g3.size()];
        Root x = {(int)(rng() % 7) - 3, (int)(rng() % 7) - 3, (int)(rng() % 7) - 3};
        CHECK((a * b).apply(x) == a.apply(b.apply(x)));
        CHECK(a.inverse().apply(a.apply(x)) == x);
    }
}

TEST_CASE("generated subsystems")
{
    CHECK(generated_subsystem({{1, -1}}) == RootSubset{{1, -1}, {-1, 1}});

    auto full = generated_subsystem({{1, -1}, {0, 1}});
    CHECK(full.size() == 8);

    RootSubset a2 = generated_subsystem({{1, -1, 0}, {0, 1, -1}});
    CHECK(a2.size() == 6);
    CHECK(a2.count({1, 0, -1}) == 1);

    // idempotent and reflection-stable
    auto closure = generated_subsystem(a2);
    CHECK(closure == a2);
    for (const auto& v : a2)
        for (const auto& x : a2)
            CHECK(a2.count(reflect_root(v, x)) == 1);
}

TEST_CASE("irreducible components")
{
    auto parts = irreducible_components({{1, -1, 0}, {0, 0, 1}});
    CHECK(parts.size() == 2);

    RootSubset all = positive_roots(3, RootFlavor::B);
    CHECK(irreducible_components(all).size() == 1);

    CHECK(irreducible_components({}).empty());

    // a partition: disjoint and covering
    RootSubset delta = {{1, -1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    auto ps = irreducible_components(delta);
    std::size_t total = 0;
    for (const auto& p : ps)
        total += p.size();
    CHECK(total == delta.size());
    // re-running on a merged copy gives the same partition
    RootSubset merged;
    for (const auto& p : ps)
        merged.insert(p.begin(), p.end());
    CHECK(irreducible_components(merged) == ps);
}

TEST_CASE("component types")
{
    CHECK(component_type({{1, -1}}) == ComponentType{CartanLetter::Rank1, 1});
    CHECK(component_type({{1, -1, 0}, {0, 1, -1}, {0, 0, 1}}) ==
          ComponentType{CartanLetter::B, 3});
    CHECK(component_type({{1, -1, 0}, {0, 1, -1}, {0, 1, 1}}) ==
          ComponentType{CartanLetter::D, 3});
    CHECK(component_type({{1, -1, 0}, {0, 1, -1}}) == ComponentType{CartanLetter::A, 2});
    // sign-flipped A2 is still type A
    CHECK(component_type({{1, 1, 0}, {0, -1, 1}}) == ComponentType{CartanLetter::A, 2});
    CHECK_THROWS_AS(component_type({{1, 0}, {0, 1}}), NotIrreducible);
}

TEST_CASE("ext sets")
{
    CHECK(ext_sets(2, ExtShape::Bm) == RootSubset{{1, -1}, {0, 1}});
    CHECK(ext_sets(3, ExtShape::EAm) == RootSubset{{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}});
    CHECK_THROWS_AS(ext_sets(3, ExtShape::Dm), RankTooSmall);
    CHECK(ext_sets(4, ExtShape::EDm).size() == 5);
}

TEST_CASE("obtuse normal form")
{
    // already standard: identity
    auto r = obtuse_normal_form(ext_sets(2, ExtShape::Bm), 2);
    CHECK(r.shape == ExtShape::Bm);
    CHECK(r.w == WeylElement::identity(2));

    // {e_2 - e_1, e_1}: a transposition brings it to {e_1 - e_2, e_2}
    auto s = obtuse_normal_form({{-1, 1}, {1, 0}}, 2);
    CHECK(s.shape == ExtShape::Bm);
    RootSubset image;
    for (const Root& v : RootSubset{{-1, 1}, {1, 0}})
        image.insert(s.w.apply(v));
    CHECK(image == ext_sets(2, ExtShape::Bm));

    auto t = obtuse_normal_form({{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}, 3);
    CHECK(t.shape == ExtShape::EAm);
    CHECK(t.w == WeylElement::identity(3));

    CHECK_THROWS_AS(obtuse_normal_form({{1, 0}, {0, 1}}, 2), NotIrreducible);
    CHECK_THROWS_AS(obtuse_normal_form({{1, -1}, {0, 1}, {1, 0}}, 2), NotObtuse);

    // every shape at its minimal rank normalizes with the identity
    for (auto [shape, m] : std::initializer_list<std::pair<ExtShape, int>>{
             {ExtShape::Am, 3}, {ExtShape::Bm, 2}, {ExtShape::Dm, 4}, {ExtShape::EAm, 3},
             {ExtShape::EBm, 2}, {ExtShape::EDm, 4}, {ExtShape::BDm, 3}}) {
        auto nf = obtuse_normal_form(ext_sets(m, shape), m);
        CHECK(nf.shape == shape);
        CHECK(nf.m == m);
        CHECK(nf.w == WeylElement::identity(m));
    }
}
