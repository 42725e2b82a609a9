#include "classint/diffop.hpp"

#include <algorithm>

namespace classint {

int multi_order(const MultiIndex& beta)
{
    int o = 0;
    for (int b : beta)
        o += b;
    return o;
}

void ExpDiffOp::add_term(const FrequencyVector& mu2, const MultiIndex& beta, const Rational& c)
{
    if ((int)mu2.size() != rank_ || (int)beta.size() != rank_)
        throw RankMismatch("ExpDiffOp::add_term: wrong rank");
    if (multi_order(beta) > kMaxOrder)
        throw SideConditionViolated("differential operator order cap exceeded");
    if (c == 0)
        return;
    long d = degree2(mu2);
    if (d > ceiling_)
        return;
    floor_ = std::min(floor_, d);
    Key k{mu2, beta};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int ExpDiffOp::order() const
{
    int o = 0;
    for (const auto& [k, c] : terms_)
        o = std::max(o, multi_order(k.second));
    return o;
}

ExpDiffOp& ExpDiffOp::operator+=(const ExpDiffOp& rhs)
{
    if (rank_ != rhs.rank_)
        throw RankMismatch("ExpDiffOp sum rank mismatch");
    ceiling_ = std::min(ceiling_, rhs.ceiling_);
    std::erase_if(terms_, [&](const auto& kv) { return degree2(kv.first.first) > ceiling_; });
    floor_ = std::min(floor_, rhs.floor_);
    for (const auto& [k, c] : rhs.terms_) {
        if (degree2(k.first) > ceiling_)
            continue;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

ExpDiffOp& ExpDiffOp::operator-=(const ExpDiffOp& rhs) { return *this += -rhs; }

ExpDiffOp& ExpDiffOp::operator*=(const Rational& c)
{
    if (c == 0)
        terms_.clear();
    else
        for (auto& [k, v] : terms_)
            v *= c;
    return *this;
}

ExpDiffOp ExpDiffOp::operator-() const
{
    ExpDiffOp r = *this;
    for (auto& [k, v] : r.terms_)
        v = -v;
    return r;
}

void ExpDiffOp::set_ceiling(long c)
{
    ceiling_ = std::min(ceiling_, c);
    std::erase_if(terms_, [&](const auto& kv) { return degree2(kv.first.first) > ceiling_; });
}

void ExpDiffOp::set_floor(long f)
{
    floor_ = f;
    for (const auto& [k, c] : terms_)
        floor_ = std::min(floor_, degree2(k.first));
}

ExpDiffOp op_from_expsum(const ExpSum& s)
{
    ExpDiffOp r(s.rank(), s.ceiling());
    r.set_floor(s.floor_degree());
    MultiIndex zero(s.rank(), 0);
    for (const auto& [mu2, c] : s.terms())
        r.add_term(mu2, zero, c);
    return r;
}

ExpDiffOp op_partial(int rank, const MultiIndex& beta)
{
    ExpDiffOp r(rank);
    r.add_term(FrequencyVector(rank, 0), beta, Rational(1));
    return r;
}

ExpDiffOp op_identity(int rank)
{
    ExpDiffOp r(rank);
    r.add_term(FrequencyVector(rank, 0), MultiIndex(rank, 0), Rational(1));
    return r;
}

namespace {

void binomial_row(int n, std::vector<Integer>& out)
{
    out.assign(n + 1, Integer(1));
    for (int k = 1; k <= n; ++k)
        out[k] = out[k - 1] * (n - k + 1) / k;
}

// Enumerates k <= beta componentwise, calling f(k, prod of C(beta_i, k_i)).
template <typename F> void for_sub_indices(const MultiIndex& beta, F&& f)
{
    int n = (int)beta.size();
    std::vector<std::vector<Integer>> rows(n);
    for (int i = 0; i < n; ++i)
        binomial_row(beta[i], rows[i]);
    MultiIndex k(n, 0);
    while (true) {
        Integer binom(1);
        for (int i = 0; i < n; ++i)
            binom *= rows[i][k[i]];
        f(k, binom);
        int i = 0;
        while (i < n) {
            if (k[i] < beta[i]) {
                ++k[i];
                break;
            }
            k[i] = 0;
            ++i;
        }
        if (i == n)
            break;
    }
}

} // namespace

ExpDiffOp op_compose(const ExpDiffOp& a, const ExpDiffOp& b)
{
    if (a.rank() != b.rank())
        throw RankMismatch("op_compose rank mismatch");
    int n = a.rank();
    ExpDiffOp r(n);
    long c1 = a.ceiling() >= ExpSum::kInf ? ExpSum::kInf : a.ceiling() + b.floor_degree();
    long c2 = b.ceiling() >= ExpSum::kInf ? ExpSum::kInf : b.ceiling() + a.floor_degree();
    r.set_ceiling(std::min({c1, c2, ExpSum::kInf}));
    r.set_floor(a.floor_degree() + b.floor_degree());

    FrequencyVector mu2(n);
    MultiIndex gamma(n);
    for (const auto& [ka, ca] : a.terms()) {
        long da = degree2(ka.first);
        for (const auto& [kb, cb] : b.terms()) {
            if (da + degree2(kb.first) > r.ceiling())
                continue;
            for (int i = 0; i < n; ++i)
                mu2[i] = ka.first[i] + kb.first[i];
            // e^{-mu} d^beta o e^{-nu} d^gamma
            //   = sum_k C(beta,k) (-nu)^k e^{-(mu+nu)} d^{beta+gamma-k}
            for_sub_indices(ka.second, [&](const MultiIndex& k, const Integer& binom) {
                Rational factor(binom);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < k[i]; ++j)
                        factor *= Rational(-kb.first[i], 2);
                if (factor == 0)
                    return;
                for (int i = 0; i < n; ++i)
                    gamma[i] = ka.second[i] + kb.second[i] - k[i];
                r.add_term(mu2, gamma, ca * cb * factor);
            });
        }
    }
    return r;
}

ExpDiffOp op_commutator(const ExpDiffOp& a, const ExpDiffOp& b)
{
    return op_compose(a, b) - op_compose(b, a);
}

ExpDiffOp op_adjoint(const ExpDiffOp& a)
{
    int n = a.rank();
    ExpDiffOp r(n);
    r.set_ceiling(a.ceiling());
    r.set_floor(a.floor_degree());
    MultiIndex gamma(n);
    for (const auto& [key, c] : a.terms()) {
        const auto& [mu2, beta] = key;
        int sign = multi_order(beta) % 2 == 0 ? 1 : -1;
        // (-1)^{|beta|} d^beta o e^{-mu} = sum_k C(beta,k)(-mu)^k e^{-mu} d^{beta-k}
        for_sub_indices(beta, [&](const MultiIndex& k, const Integer& binom) {
            Rational factor(binom * sign);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < k[i]; ++j)
                    factor *= Rational(-mu2[i], 2);
            if (factor == 0)
                return;
            for (int i = 0; i < n; ++i)
                gamma[i] = beta[i] - k[i];
            r.add_term(mu2, gamma, c * factor);
        });
    }
    return r;
}

ExpDiffOp op_order_part(const ExpDiffOp& a, int k)
{
    ExpDiffOp r(a.rank());
    r.set_ceiling(a.ceiling());
    r.set_floor(a.floor_degree());
    for (const auto& [key, c] : a.terms())
        if (multi_order(key.second) == k)
            r.add_term(key.first, key.second, c);
    return r;
}

ExpDiffOp build_P(const PotentialSpec& spec, long ceiling)
{
    ExpDiffOp p(spec.rank);
    for (int j = 0; j < spec.rank; ++j) {
        MultiIndex beta(spec.rank, 0);
        beta[j] = 2;
        p.add_term(FrequencyVector(spec.rank, 0), beta, Rational(1));
    }
    p += op_from_expsum(expand_potential(spec, ceiling));
    return p;
}

namespace {

const FrequencyVector kRootUPlus = {2, 2};   // x + y
const FrequencyVector kRootUMinus = {2, -2}; // x - y
const FrequencyVector kRootV = {2, 0};       // x
const FrequencyVector kRootW = {0, 2};       // y

} // namespace

ExpSum expand_b2_slot(const OneVarPotential& p, int slot, long ceiling)
{
    static const FrequencyVector* roots[4] = {&kRootUPlus, &kRootUMinus, &kRootV, &kRootW};
    ExpSum r(2, ceiling);
    for (const auto& t : p)
        r += expand_term(attach(t, *roots[slot]), 2, ceiling);
    return r;
}

PotentialSpec b2_to_spec(const B2Potential& p)
{
    PotentialSpec spec;
    spec.rank = 2;
    for (const auto& t : p.uplus)
        spec.terms.push_back(attach(t, kRootUPlus));
    for (const auto& t : p.uminus)
        spec.terms.push_back(attach(t, kRootUMinus));
    for (const auto& t : p.v)
        spec.terms.push_back(attach(t, kRootV));
    for (const auto& t : p.w)
        spec.terms.push_back(attach(t, kRootW));
    return spec;
}

namespace {

// Right sides of the gradient system for T:
//   2 T_x = (u+ - u-) w' + 2 w (u+ - u-)_y
//   2 T_y = (u+ - u-) v' + 2 v (u+ - u-)_x
struct TSources {
    ExpSum rhs_x, rhs_y;
};

TSources t_sources(const B2Potential& p, long ceiling)
{
    ExpSum up = expand_b2_slot(p.uplus, 0, ceiling);
    ExpSum um = expand_b2_slot(p.uminus, 1, ceiling);
    ExpSum v = expand_b2_slot(p.v, 2, ceiling);
    ExpSum w = expand_b2_slot(p.w, 3, ceiling);
    ExpSum diff = up - um;
    ExpSum rhs_x = diff * w.derivative(1) + Rational(2) * (w * diff.derivative(1));
    ExpSum rhs_y = diff * v.derivative(0) + Rational(2) * (v * diff.derivative(0));
    return {std::move(rhs_x), std::move(rhs_y)};
}

} // namespace

ExpSum compat_residual_b2(const B2Potential& p, long ceiling)
{
    auto src = t_sources(p, ceiling);
    return src.rhs_y.derivative(0) - src.rhs_x.derivative(1);
}

ExpSum integrate_T(const B2Potential& p, long ceiling)
{
    auto src = t_sources(p, ceiling);
    ExpSum T(2, std::min(src.rhs_x.ceiling(), src.rhs_y.ceiling()));
    T.set_floor(std::min(src.rhs_x.floor_degree(), src.rhs_y.floor_degree()));

    for (const auto& [mu2, c] : src.rhs_x.terms()) {
        // 2 T_x picks up -mu_x per monomial, so x-free sources cannot be hit
        if (mu2[0] == 0)
            throw ObstructedIntegration("x-free source term in the T_x equation");
        T.add_term(mu2, c / Rational(-mu2[0]));
    }
    // the x-free part of T comes from the second equation
    for (const auto& [mu2, c] : src.rhs_y.terms()) {
        if (mu2[0] == 0) {
            if (mu2[1] == 0)
                throw ObstructedIntegration("constant source term in the T_y equation");
            T.add_term(mu2, c / Rational(-mu2[1]));
        }
    }

    // the second equation must hold identically
    ExpSum check = Rational(2) * T.derivative(1) - src.rhs_y;
    if (!check.is_zero())
        throw InconsistentPair("T from the T_x equation fails the T_y equation");
    return T;
}

ExpDiffOp build_Q_b2(const B2Potential& p, const ExpSum& T, long ceiling)
{
    ExpSum up = expand_b2_slot(p.uplus, 0, ceiling);
    ExpSum um = expand_b2_slot(p.uminus, 1, ceiling);
    ExpSum v = expand_b2_slot(p.v, 2, ceiling);
    ExpSum w = expand_b2_slot(p.w, 3, ceiling);

    ExpDiffOp a = op_partial(2, {1, 1}) + op_from_expsum((up - um) * Rational(1, 2));
    ExpDiffOp q = op_compose(a, a);
    q += op_compose(op_from_expsum(w), op_partial(2, {2, 0}));
    q += op_compose(op_from_expsum(v), op_partial(2, {0, 2}));
    q += op_from_expsum(v * w + T);
    return q;
}

} // namespace classint
