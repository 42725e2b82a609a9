#include "classint/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace classint {

ExpSum u_to_capital(const ExpSum& u)
{
    ExpSum U(1, u.ceiling());
    U.set_floor(u.floor_degree());
    for (const auto& [mu2, c] : u.terms()) {
        if (mu2[0] == 0)
            continue;
        U.add_term(mu2, c / Rational(mu2[0], 2));
    }
    return U;
}

ExpSum capital_to_u(const ExpSum& U)
{
    ExpSum u(1, U.ceiling());
    u.set_floor(U.floor_degree());
    for (const auto& [mu2, c] : U.terms()) {
        if (mu2[0] == 0)
            continue;
        u.add_term(mu2, c * Rational(mu2[0], 2));
    }
    return u;
}

namespace {

// One displayed basis function: params[param] * mult * kind(freq * lambda).
struct B2Atom {
    int slot; // 0 u+, 1 u-, 2 v, 3 w
    int param;
    TermKind kind;
    Rational freq;
    Rational mult = 1;
};

struct B2Shape {
    int param_count = 0;
    std::vector<B2Atom> atoms;
};

B2Atom at(int slot, int param, TermKind kind, Rational freq, Rational mult = 1)
{
    return B2Atom{slot, param, kind, std::move(freq), std::move(mult)};
}

using K = TermKind;

B2Shape base_shape(FamilyTag tag)
{
    switch (tag) {
    case FamilyTag::TrigB2:
        return {5,
                {at(0, 0, K::InvSinhSq, 1), at(1, 0, K::InvSinhSq, 1), at(2, 1, K::InvSinhSq, 2),
                 at(2, 2, K::InvSinhSq, 1), at(2, 3, K::Cosh, 2), at(2, 4, K::Cosh, 4),
                 at(3, 1, K::InvSinhSq, 2), at(3, 2, K::InvSinhSq, 1), at(3, 3, K::Cosh, 2),
                 at(3, 4, K::Cosh, 4)}};
    case FamilyTag::TrigB2S:
        return {4,
                {at(0, 0, K::InvSinhSq, 1), at(0, 1, K::InvSinhSq, 2), at(1, 0, K::InvSinhSq, 1),
                 at(1, 1, K::InvSinhSq, 2), at(2, 2, K::InvSinhSq, 2), at(2, 3, K::Cosh, 4),
                 at(3, 2, K::InvSinhSq, 2), at(3, 3, K::Cosh, 4)}};
    case FamilyTag::TodaD21Bry:
        return {5,
                {at(0, 0, K::Cosh, 2), at(1, 0, K::Cosh, 2), at(2, 1, K::InvSinhSq, 1),
                 at(2, 2, K::InvSinhSq, 2), at(3, 3, K::InvSinhSq, 1), at(3, 4, K::InvSinhSq, 2)}};
    case FamilyTag::TodaD21SBry:
        return {4,
                {at(0, 0, K::Cosh, 1), at(0, 1, K::Cosh, 2), at(1, 0, K::Cosh, 1),
                 at(1, 1, K::Cosh, 2), at(2, 2, K::InvSinhSq, 1), at(3, 3, K::InvSinhSq, 1)}};
    case FamilyTag::TodaB21Bry:
        return {5,
                {at(0, 0, K::Exp, 2), at(1, 0, K::Exp, 2), at(2, 1, K::Exp, -2),
                 at(2, 2, K::Exp, -4), at(3, 3, K::InvSinhSq, 1), at(3, 4, K::InvSinhSq, 2)}};
    case FamilyTag::TodaB21SBry:
        return {4,
                {at(0, 0, K::Exp, 1), at(0, 1, K::Exp, 2), at(1, 0, K::Exp, 1),
                 at(1, 1, K::Exp, 2), at(2, 2, K::Exp, -2), at(3, 3, K::InvSinhSq, 1)}};
    case FamilyTag::TrigA1Bry:
        return {5,
                {at(1, 0, K::InvSinhSq, 1), at(2, 1, K::Exp, 2), at(2, 2, K::Exp, 4),
                 at(2, 3, K::Exp, -2), at(2, 4, K::Exp, -4), at(3, 1, K::Exp, 2),
                 at(3, 2, K::Exp, 4), at(3, 3, K::Exp, -2), at(3, 4, K::Exp, -4)}};
    case FamilyTag::TrigA1SBry:
        return {4,
                {at(1, 0, K::InvSinhSq, 1), at(1, 1, K::InvSinhSq, 2), at(2, 2, K::Exp, 4),
                 at(2, 3, K::Exp, -4), at(3, 2, K::Exp, 4), at(3, 3, K::Exp, -4)}};
    case FamilyTag::TodaC21:
        return {5,
                {at(1, 0, K::Exp, 1), at(2, 1, K::Exp, -1), at(2, 2, K::Exp, -2),
                 at(3, 3, K::Exp, 1), at(3, 4, K::Exp, 2)}};
    case FamilyTag::TodaC21S:
        return {4,
                {at(1, 0, K::Exp, 1), at(1, 1, K::Exp, 2), at(2, 2, K::Exp, -2),
                 at(3, 3, K::Exp, 2)}};
    default:
        throw std::logic_error("base_shape: not a base rank-2 family");
    }
}

B2Shape specialize(const B2Shape& parent, const std::vector<int>& nulled)
{
    // surviving parameters keep their relative order
    std::map<int, int> remap;
    for (int i = 0; i < parent.param_count; ++i)
        if (std::find(nulled.begin(), nulled.end(), i) == nulled.end())
            remap.emplace(i, (int)remap.size());
    B2Shape out;
    out.param_count = (int)remap.size();
    for (const auto& a : parent.atoms) {
        if (!remap.count(a.param))
            continue;
        B2Atom b = a;
        b.param = remap.at(a.param);
        out.atoms.push_back(b);
    }
    return out;
}

// The duality move at the display level: (u+, u-, v, w) with basis g(k)
// becomes (v, w, 2 g(2k), 2 g(2k)) slotwise.
B2Shape dualize(const B2Shape& s)
{
    B2Shape out;
    out.param_count = s.param_count;
    for (const auto& a : s.atoms) {
        B2Atom b = a;
        switch (a.slot) {
        case 2: b.slot = 0; break;
        case 3: b.slot = 1; break;
        case 0:
            b.slot = 2;
            b.freq = a.freq * 2;
            b.mult = a.mult * 2;
            break;
        case 1:
            b.slot = 3;
            b.freq = a.freq * 2;
            b.mult = a.mult * 2;
            break;
        }
        out.atoms.push_back(b);
    }
    return out;
}

B2Shape b2_shape(FamilyTag tag)
{
    const FamilyInfo& info = family_info(tag);
    if (!info.parent)
        return base_shape(tag);
    B2Shape s = specialize(b2_shape(*info.parent), info.nulled);
    if (info.dual_of_parent)
        s = dualize(s);
    return s;
}

const std::map<FamilyTag, FamilyInfo>& info_table()
{
    static const std::map<FamilyTag, FamilyInfo> table = [] {
        std::map<FamilyTag, FamilyInfo> t;
        auto add = [&](FamilyTag tag, int params, int lo, int hi,
                       std::optional<FamilyTag> parent = std::nullopt,
                       std::vector<int> nulled = {}, bool dual = false) {
            t[tag] = FamilyInfo{tag, params, lo, hi, parent, std::move(nulled), dual};
        };
        constexpr int kNoMax = 1 << 20;
        add(FamilyTag::A1Any, 0, 1, kNoMax);
        add(FamilyTag::TrigB2, 5, 2, 2);
        add(FamilyTag::TrigB2S, 4, 2, 2);
        add(FamilyTag::TodaD21Bry, 5, 2, 2);
        add(FamilyTag::TodaD21SBry, 4, 2, 2);
        add(FamilyTag::TodaB21Bry, 5, 2, 2);
        add(FamilyTag::TodaB21SBry, 4, 2, 2);
        add(FamilyTag::TrigA1Bry, 5, 2, 2);
        add(FamilyTag::TrigA1SBry, 4, 2, 2);
        add(FamilyTag::TodaC21, 5, 2, 2);
        add(FamilyTag::TodaC21S, 4, 2, 2);

        add(FamilyTag::TrigBm, 5, 3, kNoMax);
        add(FamilyTag::TrigAm1Bry, 5, 3, kNoMax);
        add(FamilyTag::TodaBm1Bry, 5, 3, kNoMax);
        add(FamilyTag::TodaCm1, 5, 3, kNoMax);
        add(FamilyTag::TodaDm1Bry, 5, 3, kNoMax);
        add(FamilyTag::TodaAm11, 1, 3, kNoMax);

        add(FamilyTag::TrigAm1, 1, 3, kNoMax, FamilyTag::TrigAm1Bry, {1, 2, 3, 4});
        add(FamilyTag::TodaBm1, 3, 3, kNoMax, FamilyTag::TodaBm1Bry, {3, 4});
        add(FamilyTag::TodaDm1, 1, 3, kNoMax, FamilyTag::TodaDm1Bry, {1, 2, 3, 4});
        add(FamilyTag::TodaDmBry, 3, 3, kNoMax, FamilyTag::TodaBm1Bry, {1, 2});
        add(FamilyTag::TodaAm1, 1, 3, kNoMax, FamilyTag::TodaCm1, {1, 2, 3, 4});
        add(FamilyTag::TodaBCm, 3, 3, kNoMax, FamilyTag::TodaCm1, {1, 2});
        add(FamilyTag::TodaDm, 1, 3, kNoMax, FamilyTag::TodaBm1Bry, {1, 2, 3, 4});

        add(FamilyTag::TrigBC2Reg, 3, 2, 2, FamilyTag::TrigB2, {3, 4});
        add(FamilyTag::TrigdBC2Reg, 3, 2, 2, FamilyTag::TrigB2, {3, 4}, true);
        add(FamilyTag::TodaD2Bry, 3, 2, 2, FamilyTag::TodaB21Bry, {1, 2});
        add(FamilyTag::TodadD2Bry, 3, 2, 2, FamilyTag::TodaB21Bry, {1, 2}, true);
        add(FamilyTag::TrigA1BryReg, 3, 2, 2, FamilyTag::TrigA1Bry, {3, 4});
        add(FamilyTag::TrigdA1BryReg, 3, 2, 2, FamilyTag::TrigA1Bry, {3, 4}, true);
        add(FamilyTag::TodaBC2, 3, 2, 2, FamilyTag::TodaC21, {1, 2});
        add(FamilyTag::TodadBC2, 3, 2, 2, FamilyTag::TodaC21, {1, 2}, true);

        add(FamilyTag::TrigBCmReg, 3, 3, kNoMax, FamilyTag::TrigBm, {3, 4});
        add(FamilyTag::TrigAm1BryReg, 3, 3, kNoMax, FamilyTag::TrigAm1Bry, {3, 4});
        return t;
    }();
    return table;
}

const std::map<FamilyTag, std::string>& name_table()
{
    static const std::map<FamilyTag, std::string> table = {
        {FamilyTag::A1Any, "a1-any"},
        {FamilyTag::TrigB2, "trig-b2"},
        {FamilyTag::TrigB2S, "trig-b2-s"},
        {FamilyTag::TodaD21Bry, "toda-d2-1-bry"},
        {FamilyTag::TodaD21SBry, "toda-d2-1-s-bry"},
        {FamilyTag::TodaB21Bry, "toda-b2-1-bry"},
        {FamilyTag::TodaB21SBry, "toda-b2-1-s-bry"},
        {FamilyTag::TrigA1Bry, "trig-a1-bry"},
        {FamilyTag::TrigA1SBry, "trig-a1-s-bry"},
        {FamilyTag::TodaC21, "toda-c2-1"},
        {FamilyTag::TodaC21S, "toda-c2-1-s"},
        {FamilyTag::TrigBm, "trig-bm"},
        {FamilyTag::TrigAm1Bry, "trig-am1-bry"},
        {FamilyTag::TodaBm1Bry, "toda-bm-1-bry"},
        {FamilyTag::TodaCm1, "toda-cm-1"},
        {FamilyTag::TodaDm1Bry, "toda-dm-1-bry"},
        {FamilyTag::TodaAm11, "toda-am1-1"},
        {FamilyTag::TrigAm1, "trig-am1"},
        {FamilyTag::TodaBm1, "toda-bm-1"},
        {FamilyTag::TodaDm1, "toda-dm-1"},
        {FamilyTag::TodaDmBry, "toda-dm-bry"},
        {FamilyTag::TodaAm1, "toda-am1"},
        {FamilyTag::TodaBCm, "toda-bcm"},
        {FamilyTag::TodaDm, "toda-dm"},
        {FamilyTag::TrigBC2Reg, "trig-bc2-reg"},
        {FamilyTag::TrigdBC2Reg, "trig-d-bc2-reg"},
        {FamilyTag::TodaD2Bry, "toda-d2-bry"},
        {FamilyTag::TodadD2Bry, "toda-d-d2-bry"},
        {FamilyTag::TrigA1BryReg, "trig-a1-bry-reg"},
        {FamilyTag::TrigdA1BryReg, "trig-d-a1-bry-reg"},
        {FamilyTag::TodaBC2, "toda-bc2"},
        {FamilyTag::TodadBC2, "toda-d-bc2"},
        {FamilyTag::TrigBCmReg, "trig-bcm-reg"},
        {FamilyTag::TrigAm1BryReg, "trig-am1-bry-reg"},
    };
    return table;
}

} // namespace

std::string to_string(FamilyTag tag) { return name_table().at(tag); }

std::optional<FamilyTag> tag_from_string(const std::string& name)
{
    for (const auto& [tag, n] : name_table())
        if (n == name)
            return tag;
    return std::nullopt;
}

const FamilyInfo& family_info(FamilyTag tag) { return info_table().at(tag); }

std::vector<FamilyTag> list_families(int rank)
{
    std::vector<FamilyTag> out;
    for (const auto& [tag, info] : info_table())
        if (rank >= info.min_rank && rank <= info.max_rank)
            out.push_back(tag);
    return out;
}

std::vector<FamilyTag> regular_families(int rank)
{
    if (rank < 2)
        throw RankTooSmall("regular_families: rank must be at least 2");
    if (rank == 2)
        return {FamilyTag::TrigBC2Reg,    FamilyTag::TrigdBC2Reg, FamilyTag::TodaD2Bry,
                FamilyTag::TodadD2Bry,    FamilyTag::TrigA1BryReg, FamilyTag::TrigdA1BryReg,
                FamilyTag::TodaBC2,       FamilyTag::TodadBC2};
    return {FamilyTag::TrigBCmReg, FamilyTag::TrigAm1BryReg, FamilyTag::TodaDmBry,
            FamilyTag::TodaBCm};
}

B2Potential instantiate_b2(const FamilyInstance& inst)
{
    const FamilyInfo& info = family_info(inst.tag);
    if (inst.tag == FamilyTag::A1Any)
        throw SideConditionViolated("a1-any takes explicit series, not parameters");
    if (info.max_rank != 2 || inst.rank != 2)
        throw RankMismatch("instantiate_b2 requires a rank-2 family");
    if ((int)inst.params.size() != info.param_count)
        throw BadParameterCount(to_string(inst.tag) + " takes " +
                                std::to_string(info.param_count) + " parameters");
    if (inst.scale < 1)
        throw SideConditionViolated("lattice scale must be a positive integer");

    B2Potential pot;
    OneVarPotential* slots[4] = {&pot.uplus, &pot.uminus, &pot.v, &pot.w};
    for (const auto& a : b2_shape(inst.tag).atoms) {
        Rational c = inst.params[a.param] * a.mult;
        if (c == 0)
            continue;
        slots[a.slot]->push_back(OneVarTerm{c, a.kind, a.freq * inst.scale});
    }
    return pot;
}

namespace {

void add_term_checked(PotentialSpec& spec, Rational coeff, TermKind kind, Rational freq,
                      FrequencyVector root)
{
    if (coeff == 0)
        return;
    spec.terms.push_back(PotentialTerm{std::move(coeff), kind, std::move(freq), std::move(root)});
}

FrequencyVector e(int m, int i)
{
    FrequencyVector r(m, 0);
    r[i] = 2;
    return r;
}

FrequencyVector epm(int m, int i, int j, int sj)
{
    FrequencyVector r(m, 0);
    r[i] = 2;
    r[j] = 2 * sj;
    return r;
}

PotentialSpec bn_spec(FamilyTag tag, int m, const std::vector<Rational>& p, int scale)
{
    PotentialSpec spec;
    spec.rank = m;
    Rational L(scale);
    switch (tag) {
    case FamilyTag::TrigBm:
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                add_term_checked(spec, p[0], K::InvSinhSq, L, epm(m, i, j, +1));
                add_term_checked(spec, p[0], K::InvSinhSq, L, epm(m, i, j, -1));
            }
        for (int k = 0; k < m; ++k) {
            add_term_checked(spec, p[1], K::InvSinhSq, 2 * L, e(m, k));
            add_term_checked(spec, p[2], K::InvSinhSq, L, e(m, k));
            add_term_checked(spec, p[3], K::Cosh, 2 * L, e(m, k));
            add_term_checked(spec, p[4], K::Cosh, 4 * L, e(m, k));
        }
        break;
    case FamilyTag::TrigAm1Bry:
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                add_term_checked(spec, p[0], K::InvSinhSq, L, epm(m, i, j, -1));
        for (int k = 0; k < m; ++k) {
            add_term_checked(spec, p[1], K::Exp, 2 * L, e(m, k));
            add_term_checked(spec, p[2], K::Exp, 4 * L, e(m, k));
            add_term_checked(spec, p[3], K::Exp, -2 * L, e(m, k));
            add_term_checked(spec, p[4], K::Exp, -4 * L, e(m, k));
        }
        break;
    case FamilyTag::TodaBm1Bry:
        for (int i = 0; i + 1 < m; ++i)
            add_term_checked(spec, p[0], K::Exp, 2 * L, epm(m, i, i + 1, -1));
        add_term_checked(spec, p[0], K::Exp, 2 * L, epm(m, m - 2, m - 1, +1));
        add_term_checked(spec, p[1], K::Exp, -2 * L, e(m, 0));
        add_term_checked(spec, p[2], K::Exp, -4 * L, e(m, 0));
        add_term_checked(spec, p[3], K::InvSinhSq, L, e(m, m - 1));
        add_term_checked(spec, p[4], K::InvSinhSq, 2 * L, e(m, m - 1));
        break;
    case FamilyTag::TodaCm1:
        for (int i = 0; i + 1 < m; ++i)
            add_term_checked(spec, p[0], K::Exp, 2 * L, epm(m, i, i + 1, -1));
        add_term_checked(spec, p[1], K::Exp, -2 * L, e(m, 0));
        add_term_checked(spec, p[2], K::Exp, -4 * L, e(m, 0));
        add_term_checked(spec, p[3], K::Exp, 2 * L, e(m, m - 1));
        add_term_checked(spec, p[4], K::Exp, 4 * L, e(m, m - 1));
        break;
    case FamilyTag::TodaDm1Bry:
        for (int i = 0; i + 1 < m; ++i)
            add_term_checked(spec, p[0], K::Exp, 2 * L, epm(m, i, i + 1, -1));
        add_term_checked(spec, p[0], K::Exp, 2 * L, epm(m, m - 2, m - 1, +1));
        add_term_checked(spec, p[0], K::Exp, -2 * L, epm(m, 0, 1, +1));
        add_term_checked(spec, p[1], K::InvSinhSq, L, e(m, m - 1));
        add_term_checked(spec, p[2], K::InvSinhSq, 2 * L, e(m, m - 1));
        add_term_checked(spec, p[3], K::InvSinhSq, L, e(m, 0));
        add_term_checked(spec, p[4], K::InvSinhSq, 2 * L, e(m, 0));
        break;
    case FamilyTag::TodaAm11:
        for (int i = 0; i + 1 < m; ++i)
            add_term_checked(spec, p[0], K::Exp, 2 * L, epm(m, i, i + 1, -1));
        add_term_checked(spec, p[0], K::Exp, -2 * L, epm(m, 0, m - 1, -1));
        break;
    default:
        throw std::logic_error("bn_spec: not a base higher-rank family");
    }
    return spec;
}

} // namespace

PotentialSpec instantiate(const FamilyInstance& inst)
{
    const FamilyInfo& info = family_info(inst.tag);
    if (inst.tag == FamilyTag::A1Any)
        throw SideConditionViolated("a1-any takes explicit series, not parameters");
    if (inst.rank < info.min_rank || inst.rank > info.max_rank)
        throw RankMismatch(to_string(inst.tag) + " is not defined at rank " +
                           std::to_string(inst.rank));
    if (info.max_rank == 2)
        return b2_to_spec(instantiate_b2(inst));

    if ((int)inst.params.size() != info.param_count)
        throw BadParameterCount(to_string(inst.tag) + " takes " +
                                std::to_string(info.param_count) + " parameters");
    if (inst.scale < 1)
        throw SideConditionViolated("lattice scale must be a positive integer");

    if (!info.parent)
        return bn_spec(inst.tag, inst.rank, inst.params, inst.scale);

    // expand a specialization into its parent's parameter vector
    const FamilyInfo& parent = family_info(*info.parent);
    std::vector<Rational> full(parent.param_count, Rational(0));
    std::size_t next = 0;
    for (int i = 0; i < parent.param_count; ++i) {
        if (std::find(info.nulled.begin(), info.nulled.end(), i) != info.nulled.end())
            continue;
        full[i] = inst.params.at(next++);
    }
    return bn_spec(*info.parent, inst.rank, full, inst.scale);
}

B2Tuple b2_tuple_from_potential(const B2Potential& pot, long ceiling)
{
    FrequencyVector e1 = {2};
    auto expand1 = [&](const OneVarPotential& p) {
        ExpSum s(1, ceiling);
        for (const auto& t : p)
            s += expand_term(attach(t, e1), 1, ceiling);
        return u_to_capital(s);
    };
    B2Tuple tup;
    tup.uplus = expand1(pot.uplus);
    tup.uminus = expand1(pot.uminus);
    tup.v = expand1(pot.v);
    tup.w = expand1(pot.w);
    return tup;
}

B2Tuple instantiate_b2_tuple(const FamilyInstance& inst, long ceiling)
{
    return b2_tuple_from_potential(instantiate_b2(inst), ceiling);
}

TransformAtom dual_atom() { return {TransformAtom::Kind::Dual, 0, 0, 0}; }
TransformAtom translate_atom(Rational a, Rational b)
{
    return {TransformAtom::Kind::Translate, std::move(a), std::move(b), 0};
}
TransformAtom scale_atom(Rational r) { return {TransformAtom::Kind::Scale, std::move(r), 0, 0}; }
TransformAtom reflect_y_atom() { return {TransformAtom::Kind::ReflectY, 0, 0, 0}; }
TransformAtom reflect_xy_atom() { return {TransformAtom::Kind::ReflectXY, 0, 0, 0}; }
TransformAtom bilinear_atom(Rational a, Rational b, Rational c)
{
    return {TransformAtom::Kind::Bilinear, std::move(a), std::move(b), std::move(c)};
}

B2Tuple apply_atom(const TransformAtom& atom, const B2Tuple& sol)
{
    B2Tuple out;
    switch (atom.kind) {
    case TransformAtom::Kind::Dual:
        out.uplus = sol.v;
        out.uminus = sol.w;
        out.v = es_substitute(sol.uplus, 1, 2);
        out.w = es_substitute(sol.uminus, 1, 2);
        return out;
    case TransformAtom::Kind::Translate: {
        if (atom.a == 0 || atom.b == 0)
            throw SideConditionViolated("translate needs nonzero a, b");
        out.uplus = es_substitute(sol.uplus, atom.a * atom.b * atom.b, 1);
        out.uminus = es_substitute(sol.uminus, atom.a, 1);
        out.v = es_substitute(sol.v, atom.a * atom.b, 1);
        out.w = es_substitute(sol.w, atom.b, 1);
        return out;
    }
    case TransformAtom::Kind::Scale: {
        if (atom.a == 0)
            throw SideConditionViolated("scale needs a nonzero exponent");
        out.uplus = es_substitute(sol.uplus, 1, atom.a);
        out.uminus = es_substitute(sol.uminus, 1, atom.a);
        out.v = es_substitute(sol.v, 1, atom.a);
        out.w = es_substitute(sol.w, 1, atom.a);
        return out;
    }
    case TransformAtom::Kind::ReflectY:
        out.uplus = sol.uminus;
        out.uminus = sol.uplus;
        out.v = sol.v;
        out.w = -es_substitute(sol.w, 1, -1);
        return out;
    case TransformAtom::Kind::ReflectXY:
        out.uplus = sol.uplus;
        out.uminus = -es_substitute(sol.uminus, 1, -1);
        out.v = sol.v;
        out.w = sol.w;
        return out;
    case TransformAtom::Kind::Bilinear:
        if (atom.a == 0 || atom.b == 0)
            throw SideConditionViolated("bilinear needs nonzero a, b");
        out.uplus = sol.uplus * atom.a;
        out.uminus = sol.uminus * atom.a;
        out.v = sol.v * atom.b;
        out.w = sol.w * atom.b;
        return out;
    }
    throw std::logic_error("apply_atom: unknown atom");
}

B2Tuple apply_transformation(const TransformationRecord& rec, const B2Tuple& sol)
{
    B2Tuple cur = sol;
    for (const auto& atom : rec)
        cur = apply_atom(atom, cur);
    return cur;
}

std::string to_string(const TransformAtom& atom)
{
    switch (atom.kind) {
    case TransformAtom::Kind::Dual: return "dual";
    case TransformAtom::Kind::Translate:
        return "translate:" + to_string(atom.a) + ":" + to_string(atom.b);
    case TransformAtom::Kind::Scale: return "scale:" + to_string(atom.a);
    case TransformAtom::Kind::ReflectY: return "reflect-y";
    case TransformAtom::Kind::ReflectXY: return "reflect-xy";
    case TransformAtom::Kind::Bilinear:
        return "bilinear:" + to_string(atom.a) + ":" + to_string(atom.b) + ":" +
               to_string(atom.c);
    }
    return "?";
}

TransformationRecord parse_transformation(const std::string& text)
{
    TransformationRecord rec;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::vector<std::string> parts;
        std::stringstream ps(item);
        std::string p;
        while (std::getline(ps, p, ':'))
            parts.push_back(p);
        const std::string& name = parts[0];
        auto arg = [&](std::size_t i) -> Rational {
            if (i >= parts.size())
                throw SideConditionViolated("transformation atom '" + name + "' needs arguments");
            return parse_rational(parts[i]);
        };
        if (name == "dual")
            rec.push_back(dual_atom());
        else if (name == "translate")
            rec.push_back(translate_atom(arg(1), arg(2)));
        else if (name == "scale")
            rec.push_back(scale_atom(arg(1)));
        else if (name == "reflect-y")
            rec.push_back(reflect_y_atom());
        else if (name == "reflect-xy")
            rec.push_back(reflect_xy_atom());
        else if (name == "bilinear")
            rec.push_back(bilinear_atom(arg(1), arg(2), parts.size() > 3 ? arg(3) : Rational(0)));
        else
            throw SideConditionViolated("unknown transformation atom '" + name + "'");
    }
    return rec;
}

} // namespace classint
