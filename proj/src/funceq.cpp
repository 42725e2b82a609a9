#include "classint/funceq.hpp"

#include <algorithm>
#include <numeric>

namespace classint {

namespace {

// A coefficient is known exactly when it does not lie beyond the ceiling;
// below the floor it is a certified zero.
bool in_window(const ExpSum& s, long e)
{
    return e <= s.ceiling();
}

Rational coeff1(const ExpSum& s, long e) { return s.coefficient({(int)e}); }

// minimal stored exponent, or nullopt for the zero series
std::optional<long> min_exp(const ExpSum& s)
{
    std::optional<long> m;
    for (const auto& [mu2, c] : s.terms())
        if (!m || mu2[0] < *m)
            m = mu2[0];
    return m;
}

} // namespace

// ---- type A -----------------------------------------------------------------

ResidualReport ani_residual(const ATriple& a, long window)
{
    ResidualReport rep;
    rep.window = window;
    for (long p = -window; p <= window; ++p) {
        for (long q = -window; q <= window; ++q) {
            if (p == 0 || q == 0 || p == q)
                continue;
            if (!in_window(a.uij, p) || !in_window(a.uij, p - q) || !in_window(a.ujk, q) ||
                !in_window(a.ujk, q - p) || !in_window(a.uik, q) || !in_window(a.uik, p))
                continue;
            Rational bracket = coeff1(a.uij, p) * coeff1(a.ujk, q) -
                               coeff1(a.uij, p - q) * coeff1(a.uik, q) -
                               coeff1(a.ujk, q - p) * coeff1(a.uik, p);
            if (bracket != 0) {
                rep.ok = false;
                rep.witnesses.push_back({p, q, bracket, ""});
            }
        }
    }
    return rep;
}

namespace {

// rank-1 series placed on one of the coordinate lines of the (s,t) plane
ExpSum embed_line(const ExpSum& s, int sfac, int tfac)
{
    long d = sfac + tfac; // degree of one stored unit
    ExpSum out(2);
    if (s.ceiling() < ExpSum::kInf)
        out.set_ceiling(s.ceiling() * d);
    out.set_floor(std::min(s.floor_degree() * d, 0L));
    for (const auto& [mu2, c] : s.terms()) {
        TExponent nu2 = {mu2[0] * sfac, mu2[0] * tfac};
        out.add_term(texp_to_freq(nu2), c);
    }
    return out;
}

// theta = z d/dz on a rank-1 series
ExpSum theta1(const ExpSum& s)
{
    ExpSum out(1, s.ceiling());
    out.set_floor(s.floor_degree());
    for (const auto& [mu2, c] : s.terms()) {
        Rational v = c * Rational(mu2[0], 2);
        if (v != 0)
            out.add_term(mu2, v);
    }
    return out;
}

} // namespace

ResidualReport uijk_residual(const ATriple& a, long window)
{
    ExpSum uij = capital_to_u(a.uij), ujk = capital_to_u(a.ujk), uik = capital_to_u(a.uik);
    ExpSum uij_s = embed_line(uij, 1, 0);
    ExpSum ujk_t = embed_line(ujk, 0, 1);
    ExpSum uik_st = embed_line(uik, 1, 1);
    ExpSum tij_s = embed_line(theta1(uij), 1, 0);
    ExpSum tjk_t = embed_line(theta1(ujk), 0, 1);
    ExpSum tik_st = embed_line(theta1(uik), 1, 1);

    ExpSum obstruction = ujk_t * (tij_s + tik_st) + uik_st * (tjk_t - tij_s) -
                         uij_s * (tik_st + tjk_t);
    obstruction.set_ceiling(std::min(obstruction.ceiling(), 2 * window));

    ResidualReport rep;
    rep.window = obstruction.ceiling();
    for (const auto& [mu2, c] : obstruction.terms()) {
        TExponent nu2 = freq_to_texp(mu2);
        rep.ok = false;
        rep.witnesses.push_back({nu2[0], nu2[1], c, "s^p t^q obstruction"});
    }
    return rep;
}

ExtendResult extend_a_solution(const ATriple& seed, long target_ceiling)
{
    using Status = ExtendResult::Status;
    ATriple s;
    s.uij = strip_constant(seed.uij);
    s.ujk = strip_constant(seed.ujk);
    s.uik = strip_constant(seed.uik);

    int zeros = (int)s.uij.is_zero() + (int)s.ujk.is_zero() + (int)s.uik.is_zero();
    if (zeros >= 2) {
        return {Status::Underdetermined, s,
                "two series vanish; the remaining one is arbitrary and nothing is forced"};
    }

    auto finish = [&](ATriple t) -> ExtendResult {
        ResidualReport rep = ani_residual(t, target_ceiling);
        if (!rep.ok)
            return {Status::Inconsistent, t, "the extension violates the coefficient condition"};
        return {Status::Ok, t, ""};
    };

    auto zero_extend = [&](const ExpSum& x) {
        ExpSum out(1, target_ceiling);
        out.set_floor(x.floor_degree());
        for (const auto& [mu2, c] : x.terms())
            out.add_term(mu2, c);
        return out;
    };

    // one vanishing series: the other two are forced to be a monomial pair
    if (zeros == 1 && (s.uij.is_zero() || s.ujk.is_zero())) {
        ATriple t;
        t.uij = zero_extend(s.uij);
        t.ujk = zero_extend(s.ujk);
        t.uik = zero_extend(s.uik);
        return finish(t);
    }

    auto lij = min_exp(s.uij), ljk = min_exp(s.ujk);
    if (lij && ljk && *lij < 0 && *ljk < 0) {
        // fully negative leads: only the monomial family survives
        ATriple t;
        t.uij = zero_extend(s.uij);
        t.ujk = zero_extend(s.ujk);
        t.uik = zero_extend(s.uik);
        return finish(t);
    }
    if (!lij || !ljk || *lij <= 0 || *ljk <= 0)
        return {Status::Inconsistent, s, "mixed-sign leading indices admit no solution"};
    if (*lij != *ljk)
        return {Status::Inconsistent, s, "distinct positive leading indices admit no solution"};

    long r = *lij;
    long k = std::min({s.uij.ceiling(), s.ujk.ceiling(), s.uik.ceiling()});
    if (k < r)
        return {Status::Underdetermined, s, "seed window ends before the leading index"};

    Rational cij_r = coeff1(s.uij, r);
    Rational cjk_r = coeff1(s.ujk, r);
    Rational cik_r = in_window(s.uik, r) ? coeff1(s.uik, r) : Rational(0);

    auto seeded = [&](const ExpSum& x, long e) -> std::optional<Rational> {
        if (e <= x.ceiling())
            return coeff1(x, e); // below the floor this is a certified zero
        return std::nullopt;
    };

    std::map<long, Rational> cij, cjk, cik;
    for (const auto& [mu2, c] : s.uij.terms())
        cij[mu2[0]] = c;
    for (const auto& [mu2, c] : s.ujk.terms())
        cjk[mu2[0]] = c;
    for (const auto& [mu2, c] : s.uik.terms())
        cik[mu2[0]] = c;
    auto get = [](std::map<long, Rational>& m, long e) {
        auto it = m.find(e);
        return it == m.end() ? Rational(0) : it->second;
    };

    long hi = target_ceiling + r; // the ik recurrence looks one step ahead
    std::string clash;
    auto force = [&](std::map<long, Rational>& m, const ExpSum& sd, long e, const Rational& v) {
        if (auto sv = seeded(sd, e)) {
            if (*sv != v && clash.empty())
                clash = "forced coefficient at exponent " + std::to_string(e) +
                        " disagrees with the seed";
            return;
        }
        if (v != 0)
            m[e] = v;
    };

    // shift recurrences upward from the seed window
    for (long d = k + 1; d <= hi; ++d) {
        force(cij, s.uij, d, get(cij, d - r) * cik_r / cjk_r);
        force(cjk, s.ujk, d, get(cjk, d - r) * cik_r / cij_r);
    }
    for (long d = 1; d <= target_ceiling; ++d) {
        if (seeded(s.uik, d))
            continue;
        force(cik, s.uik, d, get(cij, d + r) * get(cjk, d) / cij_r);
    }
    if (!clash.empty())
        return {Status::Inconsistent, s, clash};

    ATriple t;
    auto build = [&](const std::map<long, Rational>& m, const ExpSum& sd) {
        ExpSum out(1, target_ceiling);
        out.set_floor(std::min(sd.floor_degree(), 0L));
        for (const auto& [e, c] : m)
            if (e <= target_ceiling)
                out.add_term({(int)e}, c);
        return out;
    };
    t.uij = build(cij, s.uij);
    t.ujk = build(cjk, s.ujk);
    t.uik = build(cik, s.uik);
    return finish(t);
}

// ---- rank 2 ------------------------------------------------------------------

ResidualReport b2_residual(const B2Tuple& sol, long window)
{
    ResidualReport rep;
    rep.window = window;
    for (long p = -window; p <= window; ++p) {
        for (long q = -window; q <= window; ++q) {
            if (p == 0 || q == 0 || 2 * p == q || p == q)
                continue;
            if (!in_window(sol.uplus, q - p) || !in_window(sol.uplus, p) ||
                !in_window(sol.uminus, p - q) || !in_window(sol.uminus, p) ||
                !in_window(sol.v, 2 * p - q) || !in_window(sol.v, q) ||
                !in_window(sol.w, q - 2 * p) || !in_window(sol.w, q))
                continue;
            Rational bracket = coeff1(sol.v, 2 * p - q) * coeff1(sol.uplus, q - p) +
                               coeff1(sol.v, q) * coeff1(sol.uminus, p - q) +
                               coeff1(sol.w, q - 2 * p) * coeff1(sol.uplus, p) -
                               coeff1(sol.w, q) * coeff1(sol.uminus, p);
            if (bracket != 0) {
                rep.ok = false;
                rep.witnesses.push_back({p, q, bracket, ""});
            }
        }
    }
    return rep;
}

namespace {

// reduced row echelon form in place; returns the pivot columns
std::vector<long> rref(std::vector<std::vector<Rational>>& rows, long ncols)
{
    std::size_t rank = 0;
    std::vector<long> pivot_col;
    for (long col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[rank], rows[piv]);
        Rational inv = Rational(1) / rows[rank][col];
        for (long j = col; j < ncols; ++j)
            rows[rank][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0)
                continue;
            Rational f = rows[i][col];
            for (long j = col; j < ncols; ++j)
                rows[i][j] -= f * rows[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivot_col;
}

} // namespace

VWBasis solve_vw_linear(const ExpSum& uplus, const ExpSum& uminus, long support)
{
    if (support < 1)
        throw EmptySupport("solve_vw_linear: empty support window");

    // Solve on a padded window; pole orders beyond the requested support are
    // pinned to zero (meromorphy at the origin), which removes the spurious
    // edge-chain solutions of the bare truncated system.
    long big = support + 16;
    auto vidx = [&](long e) { return e < 0 ? e + big : e + big - 1; };
    long nv = 2 * big;
    long ncols = 2 * nv;

    long preach = std::min({std::max(uplus.ceiling(), uminus.ceiling()), big + 8});
    std::set<std::vector<Rational>> row_set;
    for (long p = -preach; p <= preach; ++p) {
        for (long q = -(2 * preach + big); q <= 2 * preach + big; ++q) {
            if (p == 0 || q == 0 || 2 * p == q || p == q)
                continue;
            if (!in_window(uplus, q - p) || !in_window(uplus, p) || !in_window(uminus, p - q) ||
                !in_window(uminus, p))
                continue;
            std::vector<Rational> row(ncols, Rational(0));
            bool nontrivial = false;
            bool admissible = true;
            auto add = [&](bool is_w, long idx, const Rational& c) {
                if (idx == 0 || c == 0)
                    return;
                if (std::abs(idx) > big) {
                    // a reference beyond the padded window with a nonzero
                    // coefficient makes the equation unusable
                    admissible = false;
                    return;
                }
                row[(is_w ? nv : 0) + vidx(idx)] += c;
                nontrivial = true;
            };
            add(false, 2 * p - q, coeff1(uplus, q - p));
            add(false, q, coeff1(uminus, p - q));
            add(true, q - 2 * p, coeff1(uplus, p));
            add(true, q, -coeff1(uminus, p));
            if (admissible && nontrivial)
                row_set.insert(std::move(row));
        }
    }
    std::vector<std::vector<Rational>> rows(row_set.begin(), row_set.end());
    for (long e = -big; e < -support; ++e) {
        std::vector<Rational> row(ncols, Rational(0));
        row[vidx(e)] = 1;
        rows.push_back(row);
        std::vector<Rational> roww(ncols, Rational(0));
        roww[nv + vidx(e)] = 1;
        rows.push_back(roww);
    }

    std::vector<long> pivot_col = rref(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (long c : pivot_col)
        is_pivot[c] = true;

    // nullspace of the padded system
    std::vector<std::vector<Rational>> null_vecs;
    for (long freeCol = 0; freeCol < ncols; ++freeCol) {
        if (is_pivot[freeCol])
            continue;
        std::vector<Rational> vec(ncols, Rational(0));
        vec[freeCol] = 1;
        for (std::size_t i = 0; i < rows.size(); ++i)
            vec[pivot_col[i]] = -rows[i][freeCol];
        null_vecs.push_back(std::move(vec));
    }

    // keep the vectors whose restrictions to the requested support are
    // linearly independent; pure beyond-support tail fragments are dropped
    std::vector<std::vector<Rational>> proj_rref;
    auto project = [&](const std::vector<Rational>& vec) {
        std::vector<Rational> p;
        for (long e = -support; e <= support; ++e) {
            if (e == 0)
                continue;
            p.push_back(vec[vidx(e)]);
            p.push_back(vec[nv + vidx(e)]);
        }
        return p;
    };
    auto lead_of = [](const std::vector<Rational>& r) {
        std::size_t lead = 0;
        while (lead < r.size() && r[lead] == 0)
            ++lead;
        return lead;
    };
    auto reduces_to_zero = [&](std::vector<Rational> p) {
        for (const auto& r : proj_rref) { // kept sorted by leading position
            std::size_t lead = lead_of(r);
            if (lead < r.size() && p[lead] != 0) {
                Rational f = p[lead] / r[lead];
                for (std::size_t j = lead; j < r.size(); ++j)
                    p[j] -= f * r[j];
            }
        }
        for (const auto& x : p)
            if (x != 0)
                return std::make_pair(true, p);
        return std::make_pair(false, p);
    };

    VWBasis out;
    for (const auto& vec : null_vecs) {
        auto [indep, reduced] = reduces_to_zero(project(vec));
        if (!indep)
            continue;
        proj_rref.push_back(reduced);
        std::sort(proj_rref.begin(), proj_rref.end(),
                  [&](const auto& a, const auto& b) { return lead_of(a) < lead_of(b); });
        B2Tuple b;
        b.uplus = uplus;
        b.uminus = uminus;
        b.v = ExpSum(1);
        b.v.set_ceiling(big);
        b.v.set_floor(-support);
        b.w = b.v;
        for (long e = -big; e <= big; ++e) {
            if (e == 0)
                continue;
            b.v.add_term({(int)e}, vec[vidx(e)]);
            b.w.add_term({(int)e}, vec[nv + vidx(e)]);
        }
        out.basis.push_back(std::move(b));
    }
    out.dimension = (int)out.basis.size();
    return out;
}

bool fg_decomposition_exists(const B2Tuple& sol)
{
    ExpSum v_st = embed_line(sol.v, 1, 1);
    ExpSum w_t = embed_line(sol.w, 0, 1);
    ExpSum up_st2 = embed_line(sol.uplus, 1, 2);
    ExpSum um_s = embed_line(sol.uminus, 1, 0);
    ExpSum lhs = v_st * (up_st2 + um_s) + w_t * (up_st2 - um_s);
    for (const auto& [mu2, c] : lhs.terms()) {
        TExponent nu2 = freq_to_texp(mu2);
        long a = nu2[0], b = nu2[1];
        bool on_lines = (b == 2 * a) || (b == 0) || (a == b) || (a == 0);
        if (!on_lines && c != 0)
            return false;
    }
    return true;
}

// ---- type B_n -----------------------------------------------------------------

namespace {

Root positive_form(const Root& alpha, bool& flipped)
{
    for (int v : alpha) {
        if (v > 0) {
            flipped = false;
            return alpha;
        }
        if (v < 0)
            break;
    }
    Root r = alpha;
    for (auto& v : r)
        v = -v;
    flipped = true;
    return r;
}

// mirror exponents; realizes u_{-alpha}(t) = u_alpha(-t) at the series level
ExpSum mirror1(const ExpSum& s)
{
    ExpSum out(1);
    out.set_ceiling(-s.floor_degree());
    out.set_floor(s.ceiling() >= ExpSum::kInf ? -ExpSum::kInf : -s.ceiling());
    for (const auto& [mu2, c] : s.terms())
        out.add_term({-mu2[0]}, c);
    return out;
}

long root_unit_degree(const Root& alpha)
{
    FrequencyVector v(alpha.begin(), alpha.end());
    return degree2(v);
}

ExpSum embed_root(const ExpSum& s1, const Root& alpha, int n)
{
    long d = root_unit_degree(alpha);
    ExpSum out(n);
    if (s1.ceiling() < ExpSum::kInf)
        out.set_ceiling(s1.ceiling() * d);
    out.set_floor(std::min(s1.floor_degree() * d, 0L));
    FrequencyVector mu2(n);
    for (const auto& [e2, c] : s1.terms()) {
        for (int i = 0; i < n; ++i)
            mu2[i] = e2[0] * alpha[i];
        out.add_term(mu2, c);
    }
    return out;
}

} // namespace

BnSolution bn_solution_from_spec(const PotentialSpec& spec, long ceiling)
{
    BnSolution sol;
    sol.rank = spec.rank;
    std::map<Root, OneVarPotential> byroot;
    for (const auto& term : spec.terms) {
        if (term.kind == TermKind::Const)
            continue;
        Root alpha(term.root.size());
        for (std::size_t i = 0; i < term.root.size(); ++i) {
            if (term.root[i] % 2 != 0)
                throw NonLatticeExponent("bn_solution_from_spec: root off the integer lattice");
            alpha[i] = term.root[i] / 2;
        }
        bool flipped = false;
        Root pos = positive_form(alpha, flipped);
        if (!is_bn_root(pos))
            throw SideConditionViolated("potential term root is not a B_n root");
        OneVarTerm t{term.coeff, term.kind, term.freq};
        if (flipped) {
            // u_{-a}(t) = u_a(-t): even kinds unchanged, exponentials flip
            if (t.kind == TermKind::Exp)
                t.freq = -t.freq;
        }
        byroot[pos].push_back(t);
    }
    for (const auto& [root, terms] : byroot) {
        ExpSum u = expand_onevar(terms, ceiling);
        ExpSum U = u_to_capital(u);
        if (!U.is_zero())
            sol.u.emplace(root, U);
    }
    return sol;
}

ResidualReport bn_residual(const BnSolution& sol, int i, int j)
{
    int n = sol.rank;
    if (n < 3)
        throw RankMismatch("bn_residual expects rank at least 3");
    if (i == j || i < 0 || j < 0 || i >= n || j >= n)
        throw SideConditionViolated("bn_residual: bad pair");

    auto root_pm = [&](int a, int b, int sb) {
        Root r(n, 0);
        r[a] = 1;
        r[b] = sb;
        bool fl;
        return positive_form(r, fl);
    };
    auto root_e = [&](int a) {
        Root r(n, 0);
        r[a] = 1;
        return r;
    };
    auto fetch = [&](const Root& alpha) {
        const ExpSum* U = sol.series(alpha);
        if (!U)
            return ExpSum(n);
        return embed_root(capital_to_u(*U), alpha, n);
    };

    auto S = [&](int a, int b) {
        // boundary + pair terms seen from coordinate a
        ExpSum W = fetch(root_e(a));
        ExpSum A0 = W;
        for (int nu = 0; nu < n; ++nu) {
            if (nu == a || nu == b)
                continue;
            A0 += fetch(root_pm(a, nu, +1)) + fetch(root_pm(a, nu, -1));
        }
        ExpSum A1 = A0.derivative(a);
        ExpSum A2 = A1.derivative(a);
        ExpSum B0 = fetch(root_pm(a, b, +1)) - fetch(root_pm(a, b, -1));
        ExpSum B1 = B0.derivative(a);
        ExpSum B2 = B1.derivative(a);
        ExpSum out = A2 * B0 + Rational(3) * (A1 * B1) + Rational(2) * (A0 * B2);
        for (int nu = 0; nu < n; ++nu) {
            if (nu == a || nu == b)
                continue;
            ExpSum diff = fetch(root_pm(a, nu, +1)) - fetch(root_pm(a, nu, -1));
            ExpSum other = fetch(root_pm(b, nu, +1)) - fetch(root_pm(b, nu, -1));
            out += diff.derivative(a).derivative(a) * other;
        }
        return out;
    };

    ExpSum diff = S(i, j) - S(j, i);
    ResidualReport rep;
    rep.window = diff.ceiling();
    for (const auto& [mu2, c] : diff.terms()) {
        TExponent nu2 = freq_to_texp(mu2);
        std::string note = "t-exponents";
        for (int v : nu2)
            note += " " + std::to_string(v);
        rep.ok = false;
        rep.witnesses.push_back({nu2.empty() ? 0 : nu2[0], nu2.size() > 1 ? nu2[1] : 0, c, note});
    }
    return rep;
}

ResidualReport a2b_residual(const BnSolution& sol, const Root& alpha, const Root& beta,
                            long window)
{
    auto is_long_pos = [&](const Root& r) {
        bool fl;
        Root p = positive_form(r, fl);
        return !fl && is_bn_root(p) && dot(p, p) == 2;
    };
    Root gamma(alpha.size());
    for (std::size_t k = 0; k < alpha.size(); ++k)
        gamma[k] = alpha[k] + beta[k];
    if (!is_long_pos(alpha) || !is_long_pos(beta) || !is_bn_root(gamma) || dot(gamma, gamma) != 2)
        throw InvalidTriple("a2b_residual: not a long positive triple");

    auto get = [&](const Root& r) {
        const ExpSum* U = sol.series(r);
        return U ? *U : ExpSum(1);
    };
    ATriple t;
    t.uij = get(alpha);
    t.ujk = get(beta);
    t.uik = get(gamma);
    return ani_residual(t, window);
}

LemTwoCase lem_two_case(const ExpSum& ualpha, const ExpSum& ubeta, bool equal_length,
                        int inner_sign)
{
    if (ualpha.terms().size() != 1)
        throw NotMonomial("lem_two_case: U_alpha must be a monomial");
    if (inner_sign == 0)
        throw SideConditionViolated("lem_two_case: the pair must be connected");
    long r = ualpha.terms().begin()->first[0];
    if (r == 0)
        throw NotMonomial("lem_two_case: constant U_alpha");
    long sigma = inner_sign < 0 ? 1 : -1;

    auto support = [&]() {
        std::vector<long> s;
        for (const auto& [mu2, c] : ubeta.terms())
            s.push_back(mu2[0]);
        std::sort(s.begin(), s.end());
        return s;
    }();

    if (support.empty())
        return LemTwoCase::Violation;

    if (equal_length) {
        if (support.size() == 1 && support[0] == sigma * r)
            return LemTwoCase::Case1;
        return LemTwoCase::Violation;
    }

    // long-short: the monomial may sit on either the long or the short root
    auto within = [&](long unit) {
        for (long e : support)
            if (e != sigma * unit && e != 2 * sigma * unit)
                return false;
        return true;
    };
    auto is_geom_pair = [&](long unit) {
        // c1 t^u (1 - rho t^u)^{-1} + c2 t^{2u} (1 - rho^2 t^{2u})^{-1}
        auto shape = recognize_series(ubeta);
        if (!shape || !shape->monos.empty() || shape->geoms.empty())
            return false;
        for (const auto& g : shape->geoms)
            if (g.step2 != sigma * unit && g.step2 != 2 * sigma * unit)
                return false;
        if (shape->geoms.size() == 2) {
            const auto& g1 = shape->geoms[0];
            const auto& g2 = shape->geoms[1];
            const auto& fine = std::abs(g1.step2) < std::abs(g2.step2) ? g1 : g2;
            const auto& coarse = std::abs(g1.step2) < std::abs(g2.step2) ? g2 : g1;
            if (coarse.ratio != fine.ratio * fine.ratio)
                return false;
        }
        return shape->geoms.size() <= 2;
    };

    for (long unit : {r, r % 2 == 0 ? r / 2 : 0}) {
        if (unit == 0)
            continue;
        if (within(unit))
            return LemTwoCase::Case2Second;
        if (is_geom_pair(unit))
            return LemTwoCase::Case2First;
    }
    return LemTwoCase::Violation;
}

// ---- regularity ----------------------------------------------------------------

bool has_regular_singularity(const B2Tuple& sol)
{
    for (const ExpSum* s : {&sol.uplus, &sol.uminus, &sol.v, &sol.w})
        for (const auto& [mu2, c] : s->terms())
            if (mu2[0] < 0)
                return false;
    return true;
}

bool has_regular_singularity(const BnSolution& sol)
{
    for (const auto& [root, s] : sol.u)
        for (const auto& [mu2, c] : s.terms())
            if (mu2[0] < 0)
                return false;
    return true;
}

namespace {

// positive-side decomposition of exponent -> coefficient data on a lattice
struct FitOut {
    std::vector<SeriesShape::Mono> monos;
    std::vector<SeriesShape::Geom> geoms;
    bool ok = true;
};

FitOut fit_positive(std::map<long, Rational> work, long ceiling)
{
    FitOut out;
    while (!work.empty()) {
        long g = 0;
        for (const auto& [e, c] : work)
            g = std::gcd(g, e);
        long jmax = g > 0 ? ceiling / g : 0;
        auto at = [&](long e) {
            auto it = work.find(e);
            return it == work.end() ? Rational(0) : it->second;
        };
        if (jmax < 5) {
            for (const auto& [e, c] : work)
                out.monos.push_back({e, c});
            return out;
        }
        long m = g;
        Rational c3 = at(3 * m), c5 = at(5 * m);
        if (c3 == 0) {
            bool tail = false;
            for (long j = 3; j <= jmax; j += 2)
                if (at(j * m) != 0)
                    tail = true;
            if (tail) {
                out.ok = false;
                return out;
            }
            // no odd tail: the coefficient at m is a plain monomial
            if (at(m) != 0)
                out.monos.push_back({m, at(m)});
            work.erase(m);
            if (work.empty())
                return out;
            continue; // gcd grows; re-run on the rest
        }
        if (c5 == 0) {
            // a finite stub can only be monomials
            bool high = false;
            for (long j = 5; j <= jmax; ++j)
                if (at(j * m) != 0)
                    high = true;
            if (high) {
                out.ok = false;
                return out;
            }
            for (long j = 1; j <= 4; ++j)
                if (at(j * m) != 0)
                    out.monos.push_back({j * m, at(j * m)});
            return out;
        }
        auto rho2 = c5 / c3;
        auto root = sqrt_rational(rho2);
        bool done = false;
        if (root) {
            for (int sign : {+1, -1}) {
                Rational rho = *root * sign;
                if (rho == 0)
                    continue;
                Rational A = c3 / (rho * rho);
                Rational B = at(4 * m) - A * rho * rho * rho;
                B /= rho * rho;
                bool match = true;
                for (long j = 3; j <= jmax && match; ++j) {
                    Rational expect = A * pow_int(rho, j - 1);
                    if (j % 2 == 0)
                        expect += B * pow_int(rho * rho, j / 2 - 1);
                    if (expect != at(j * m))
                        match = false;
                }
                if (!match)
                    continue;
                out.geoms.push_back({m, A, rho});
                if (B != 0)
                    out.geoms.push_back({2 * m, B, rho * rho});
                Rational m1 = at(m) - A;
                Rational m2 = at(2 * m) - (A * rho + B);
                if (m1 != 0)
                    out.monos.push_back({m, m1});
                if (m2 != 0)
                    out.monos.push_back({2 * m, m2});
                done = true;
                break;
            }
        }
        if (!done)
            out.ok = false;
        return out;
    }
    return out;
}

} // namespace

std::optional<SeriesShape> recognize_series(const ExpSum& s)
{
    if (s.rank() != 1)
        throw RankMismatch("recognize_series expects rank 1");
    SeriesShape shape;
    std::map<long, Rational> pos, neg;
    for (const auto& [mu2, c] : s.terms()) {
        if (mu2[0] > 0)
            pos[mu2[0]] = c;
        else if (mu2[0] < 0)
            neg[-mu2[0]] = c;
        else
            shape.monos.push_back({0, c});
    }
    FitOut fp = fit_positive(std::move(pos), s.ceiling());
    if (!fp.ok)
        return std::nullopt;
    FitOut fn = fit_positive(std::move(neg), -s.floor_degree());
    if (!fn.ok)
        return std::nullopt;
    for (const auto& m : fp.monos)
        shape.monos.push_back(m);
    for (const auto& g : fp.geoms)
        shape.geoms.push_back(g);
    for (const auto& m : fn.monos)
        shape.monos.push_back({-m.exp2, m.coeff});
    for (const auto& g : fn.geoms)
        shape.geoms.push_back({-g.step2, g.first, g.ratio});
    return shape;
}

bool regular_everywhere(const BnSolution& sol)
{
    for (const auto& [root, U] : sol.u) {
        auto shape = recognize_series(U);
        if (!shape)
            return false;
        for (const auto& m : shape->monos)
            if (m.exp2 != 0)
                return false;
        for (const auto& g : shape->geoms)
            if (g.step2 < 0)
                return false;
    }
    return true;
}

} // namespace classint
