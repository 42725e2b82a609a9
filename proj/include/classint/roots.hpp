#pragma once

#include "classint/errors.hpp"

#include <set>
#include <string>
#include <vector>

namespace classint {

// Roots of Sigma(B_n) as integer vectors: +-e_i +- e_j (i<j) and +-e_k.
using Root = std::vector<int>;

long dot(const Root& a, const Root& b);
bool is_bn_root(const Root& r);

enum class RootFlavor { A, D, B };

using RootSubset = std::set<Root>;

RootSubset positive_roots(int n, RootFlavor flavor);

std::vector<long> reflect(const Root& v, const std::vector<long>& x);
Root reflect_root(const Root& v, const Root& x);

// Signed permutation w: x_i -> signs[i] * x_{perm[i]}; that is,
// (w x)_i = signs[i] * x_{perm[i]}.
struct WeylElement {
    std::vector<int> perm;
    std::vector<int> signs;

    static WeylElement identity(int n);
    Root apply(const Root& x) const;
    WeylElement inverse() const;
    // (a*b) acts as a after b.
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    bool operator==(const WeylElement&) const = default;
    bool operator<(const WeylElement& o) const;
};

WeylElement weyl_from_reflection(const Root& v, int n);
std::vector<WeylElement> weyl_group(int n); // all 2^n n! signed permutations

// Closure of F under its own reflections, returned with both signs.
RootSubset generated_subsystem(const RootSubset& F);

// Partition of Delta into the intersections with the irreducible factors of
// the generated system.
std::vector<RootSubset> irreducible_components(const RootSubset& delta);

enum class CartanLetter { A, B, D, Rank1 };

struct ComponentType {
    CartanLetter letter;
    int rank;
    bool operator==(const ComponentType&) const = default;
};

ComponentType component_type(const RootSubset& component);

enum class ExtShape { Am, Bm, Dm, EAm, EBm, EDm, BDm };

std::string to_string(ExtShape s);

// The seven explicit generator sets, at ambient rank m.
RootSubset ext_sets(int m, ExtShape shape);

// For an irreducible S with pairwise non-positive inner products and rank at
// least two: a Weyl element w with w(S) equal to one of the listed sets,
// found breadth-first with lexicographic tie-breaking.
struct ObtuseNormalForm {
    WeylElement w;
    ExtShape shape;
    int m;
};

ObtuseNormalForm obtuse_normal_form(const RootSubset& S, int ambient_rank);

} // namespace classint
