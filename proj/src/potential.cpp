#include "classint/potential.hpp"

#include <algorithm>

namespace classint {

namespace {

// mu2 = f * alpha2 in half-units; the lattice invariant demands integrality.
FrequencyVector scaled_root(const FrequencyVector& root, const Rational& f)
{
    FrequencyVector mu2(root.size());
    for (std::size_t i = 0; i < root.size(); ++i) {
        Rational v = f * root[i];
        if (den(v) != 1)
            throw NonLatticeExponent("potential term frequency leaves the half-integer lattice");
        mu2[i] = (int)num(v);
    }
    return mu2;
}

} // namespace

ExpSum expand_term(const PotentialTerm& term, int rank, long ceiling)
{
    ExpSum r(rank, ceiling);
    if (term.kind == TermKind::Const) {
        r.add_term(FrequencyVector(rank, 0), term.coeff);
        return r;
    }
    if (term.freq == 0)
        throw SideConditionViolated("non-constant potential term with zero frequency");
    if ((int)term.root.size() != rank)
        throw RankMismatch("potential term root has wrong rank");

    switch (term.kind) {
    case TermKind::Exp:
        r.add_term(scaled_root(term.root, term.freq), term.coeff);
        break;
    case TermKind::Cosh: {
        Rational half = term.coeff / 2;
        r.add_term(scaled_root(term.root, term.freq), half);
        r.add_term(scaled_root(term.root, -term.freq), half);
        break;
    }
    case TermKind::InvSinhSq: {
        // sh^{-2} is even; normalize to positive frequency first.
        Rational f = term.freq > 0 ? term.freq : -term.freq;
        FrequencyVector step = scaled_root(term.root, 2 * f);
        long d = degree2(step);
        bool nonneg = true;
        for (int nu : freq_to_texp(step))
            nonneg = nonneg && nu >= 0;
        if (!nonneg || d <= 0)
            throw DivergentDirection("sh^{-2} argument does not tend to +infinity as t -> 0");
        FrequencyVector mu2(rank, 0);
        for (long k = 1; k * d <= ceiling; ++k) {
            for (int i = 0; i < rank; ++i)
                mu2[i] = (int)(k * step[i]);
            r.add_term(mu2, term.coeff * Rational(4 * k));
        }
        break;
    }
    case TermKind::Const:
        break;
    }
    return r;
}

ExpSum expand_potential(const PotentialSpec& spec, long ceiling)
{
    ExpSum r(spec.rank, ceiling);
    for (const auto& term : spec.terms)
        r += expand_term(term, spec.rank, ceiling);
    return r;
}

std::vector<ExpSum> strip_constants(const std::vector<ExpSum>& tuple)
{
    std::vector<ExpSum> out;
    out.reserve(tuple.size());
    for (const auto& s : tuple)
        out.push_back(strip_constant(s));
    return out;
}

PotentialTerm attach(const OneVarTerm& term, const FrequencyVector& root)
{
    return PotentialTerm{term.coeff, term.kind, term.freq, root};
}

ExpSum expand_onevar(const OneVarPotential& p, long ceiling)
{
    ExpSum r(1, ceiling);
    FrequencyVector e1 = {2}; // the unit direction, in half-units
    for (const auto& t : p)
        r += expand_term(attach(t, e1), 1, ceiling);
    return r;
}

} // namespace classint
