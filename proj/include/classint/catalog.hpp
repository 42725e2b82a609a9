#pragma once

#include "classint/b2tuple.hpp"
#include "classint/diffop.hpp"
#include "classint/potential.hpp"

#include <optional>
#include <string>
#include <vector>

namespace classint {

enum class FamilyTag {
    A1Any,
    // the ten rank-2 families
    TrigB2,
    TrigB2S,
    TodaD21Bry,
    TodaD21SBry,
    TodaB21Bry,
    TodaB21SBry,
    TrigA1Bry,
    TrigA1SBry,
    TodaC21,
    TodaC21S,
    // the six higher-rank families
    TrigBm,
    TrigAm1Bry,
    TodaBm1Bry,
    TodaCm1,
    TodaDm1Bry,
    TodaAm11,
    // named specializations
    TrigAm1,
    TodaBm1,
    TodaDm1,
    TodaDmBry,
    TodaAm1,
    TodaBCm,
    TodaDm,
    // rank-2 regular-singularity list
    TrigBC2Reg,
    TrigdBC2Reg,
    TodaD2Bry,
    TodadD2Bry,
    TrigA1BryReg,
    TrigdA1BryReg,
    TodaBC2,
    TodadBC2,
    // higher-rank regular-singularity list (the two tags not already above)
    TrigBCmReg,
    TrigAm1BryReg,
};

std::string to_string(FamilyTag tag);
std::optional<FamilyTag> tag_from_string(const std::string& name);

struct FamilyInfo {
    FamilyTag tag;
    int param_count;
    int min_rank; // 1 for A1Any, 2 for the B2 list, 3 for the B_m list
    int max_rank; // 2 for the B2 list, unbounded otherwise
    std::optional<FamilyTag> parent;
    std::vector<int> nulled; // parent parameter slots set to zero
    bool dual_of_parent = false;
};

const FamilyInfo& family_info(FamilyTag tag);
std::vector<FamilyTag> list_families(int rank);
std::vector<FamilyTag> regular_families(int rank);

struct FamilyInstance {
    FamilyTag tag;
    int rank = 2;
    std::vector<Rational> params;
    int scale = 1; // lattice scale, the lambda multiplier
};

// Symbolic potential exactly as displayed (constants dropped).  Rank-2 tags
// produce the (u+, u-, v, w) split; instantiate() attaches roots.
B2Potential instantiate_b2(const FamilyInstance& inst);
PotentialSpec instantiate(const FamilyInstance& inst);

// The series the classifier consumes, expanded at `ceiling` half-units.
B2Tuple instantiate_b2_tuple(const FamilyInstance& inst, long ceiling);
B2Tuple b2_tuple_from_potential(const B2Potential& pot, long ceiling);

struct TransformAtom {
    enum class Kind { Dual, Translate, Scale, ReflectY, ReflectXY, Bilinear };
    Kind kind;
    Rational a, b, c; // Translate(a,b), Scale(a), Bilinear(a,b,c)
};

using TransformationRecord = std::vector<TransformAtom>;

TransformAtom dual_atom();
TransformAtom translate_atom(Rational a, Rational b);
TransformAtom scale_atom(Rational r);
TransformAtom reflect_y_atom();
TransformAtom reflect_xy_atom();
TransformAtom bilinear_atom(Rational a, Rational b, Rational c = Rational(0));

B2Tuple apply_atom(const TransformAtom& atom, const B2Tuple& sol);
B2Tuple apply_transformation(const TransformationRecord& rec, const B2Tuple& sol);

std::string to_string(const TransformAtom& atom);
TransformationRecord parse_transformation(const std::string& text);

} // namespace classint
