#include "classint/expsum.hpp"

#include <algorithm>

namespace classint {

TExponent freq_to_texp(const FrequencyVector& mu2)
{
    TExponent nu2(mu2.size());
    int acc = 0;
    for (std::size_t i = 0; i < mu2.size(); ++i) {
        acc += mu2[i];
        nu2[i] = acc;
    }
    return nu2;
}

FrequencyVector texp_to_freq(const TExponent& nu2)
{
    FrequencyVector mu2(nu2.size());
    int prev = 0;
    for (std::size_t i = 0; i < nu2.size(); ++i) {
        mu2[i] = nu2[i] - prev;
        prev = nu2[i];
    }
    return mu2;
}

long degree2(const FrequencyVector& mu2)
{
    long acc = 0, deg = 0;
    for (int m : mu2) {
        acc += m;
        deg += acc;
    }
    return deg;
}

void ExpSum::check_rank(const ExpSum& other) const
{
    if (rank_ != other.rank_)
        throw RankMismatch("ExpSum rank mismatch");
}

void ExpSum::add_term(const FrequencyVector& mu2, const Rational& c)
{
    if ((int)mu2.size() != rank_)
        throw RankMismatch("ExpSum::add_term: wrong frequency length");
    if (c == 0)
        return;
    long d = degree2(mu2);
    if (d > ceiling_)
        return;
    floor_ = std::min(floor_, d);
    auto it = terms_.find(mu2);
    if (it == terms_.end()) {
        terms_.emplace(mu2, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational ExpSum::coefficient(const FrequencyVector& mu2) const
{
    if ((int)mu2.size() != rank_)
        throw RankMismatch("ExpSum::coefficient: wrong frequency length");
    long d = degree2(mu2);
    if (d > ceiling_)
        throw OutsideWindow("coefficient at degree " + std::to_string(d) +
                            " beyond ceiling " + std::to_string(ceiling_) +
                            " is unknown, not zero");
    if (d < floor_)
        return Rational(0); // the floor certifies nothing lives below it
    auto it = terms_.find(mu2);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ExpSum::set_floor(long f)
{
    floor_ = f;
    for (const auto& [mu2, c] : terms_)
        floor_ = std::min(floor_, degree2(mu2));
}

void ExpSum::set_ceiling(long c)
{
    ceiling_ = std::min(ceiling_, c);
    std::erase_if(terms_, [&](const auto& kv) { return degree2(kv.first) > ceiling_; });
}

ExpSum& ExpSum::operator+=(const ExpSum& rhs)
{
    check_rank(rhs);
    ceiling_ = std::min(ceiling_, rhs.ceiling_);
    std::erase_if(terms_, [&](const auto& kv) { return degree2(kv.first) > ceiling_; });
    floor_ = std::min(floor_, rhs.floor_);
    for (const auto& [mu2, c] : rhs.terms_) {
        if (degree2(mu2) > ceiling_)
            continue;
        auto it = terms_.find(mu2);
        if (it == terms_.end()) {
            terms_.emplace(mu2, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

ExpSum& ExpSum::operator-=(const ExpSum& rhs) { return *this += -rhs; }

ExpSum& ExpSum::operator*=(const Rational& c)
{
    if (c == 0)
        terms_.clear();
    else
        for (auto& [mu2, v] : terms_)
            v *= c;
    return *this;
}

ExpSum ExpSum::operator-() const
{
    ExpSum r = *this;
    for (auto& [mu2, v] : r.terms_)
        v = -v;
    return r;
}

ExpSum operator*(const ExpSum& a, const ExpSum& b)
{
    a.check_rank(b);
    ExpSum r(a.rank_);
    // Each side's floor shifts the other's reliable range.
    long c1 = a.ceiling_ >= ExpSum::kInf ? ExpSum::kInf : a.ceiling_ + b.floor_;
    long c2 = b.ceiling_ >= ExpSum::kInf ? ExpSum::kInf : b.ceiling_ + a.floor_;
    r.ceiling_ = std::min({c1, c2, ExpSum::kInf});
    r.floor_ = a.floor_ + b.floor_;

    FrequencyVector mu2(a.rank_);
    for (const auto& [ma, ca] : a.terms_) {
        long da = degree2(ma);
        for (const auto& [mb, cb] : b.terms_) {
            if (da + degree2(mb) > r.ceiling_)
                continue;
            for (int i = 0; i < a.rank_; ++i)
                mu2[i] = ma[i] + mb[i];
            auto it = r.terms_.find(mu2);
            if (it == r.terms_.end()) {
                Rational prod = ca * cb;
                if (prod != 0)
                    r.terms_.emplace(mu2, std::move(prod));
            } else {
                it->second += ca * cb;
                if (it->second == 0)
                    r.terms_.erase(it);
            }
        }
    }
    return r;
}

ExpSum ExpSum::derivative(int i) const
{
    ExpSum r(rank_, ceiling_);
    r.floor_ = floor_;
    for (const auto& [mu2, c] : terms_) {
        Rational v = c * Rational(-mu2[i], 2);
        if (v != 0)
            r.terms_.emplace(mu2, std::move(v));
    }
    return r;
}

ExpSum ExpSum::weight(const std::vector<Rational>& w) const
{
    ExpSum r(rank_, ceiling_);
    r.floor_ = floor_;
    for (const auto& [mu2, c] : terms_) {
        Rational f(0);
        for (int i = 0; i < rank_; ++i)
            f += w[i] * Rational(mu2[i], 2);
        Rational v = c * f;
        if (v != 0)
            r.terms_.emplace(mu2, std::move(v));
    }
    return r;
}

ExpSum es_add(const ExpSum& a, const ExpSum& b) { return a + b; }
ExpSum es_mul(const ExpSum& a, const ExpSum& b) { return a * b; }

namespace {

long scale_degree_down(long d, const Rational& power)
{
    // floor(d * power)
    Integer n = num(power) * d;
    Integer q = den(power);
    Integer fl;
    if (n >= 0)
        fl = n / q;
    else
        fl = -((-n + q - 1) / q);
    return (long)fl;
}

long scale_degree_up(long d, const Rational& power)
{
    // ceil(d * power)
    Integer n = num(power) * d;
    Integer q = den(power);
    Integer ce;
    if (n >= 0)
        ce = (n + q - 1) / q;
    else
        ce = -((-n) / q);
    return (long)ce;
}

} // namespace

ExpSum es_substitute(const ExpSum& s, const Rational& scale, const Rational& power)
{
    if (s.rank() != 1)
        throw RankMismatch("es_substitute requires rank 1");
    if (scale == 0 || power == 0)
        throw SideConditionViolated("es_substitute: zero scale or power");

    ExpSum r(1);
    bool inf = s.ceiling() >= ExpSum::kInf;
    if (power > 0) {
        r.set_floor(scale_degree_up(s.floor_degree(), power));
        if (!inf)
            r.set_ceiling(scale_degree_down(s.ceiling(), power));
    } else {
        r.set_floor(inf ? -ExpSum::kInf : scale_degree_up(s.ceiling(), power));
        r.set_ceiling(scale_degree_down(s.floor_degree(), power));
    }

    for (const auto& [mu2, c] : s.terms()) {
        long e2 = mu2[0];
        Integer newExpNum = num(power) * e2;
        if (newExpNum % den(power) != 0)
            throw NonLatticeExponent("es_substitute: exponent " + std::to_string(e2) +
                                     "/2 leaves the half-integer lattice");
        long newExp = (long)(newExpNum / den(power));
        auto f = pow_half_units(scale, e2);
        if (!f)
            throw SideConditionViolated("es_substitute: scale^exponent is irrational");
        r.add_term({(int)newExp}, c * *f);
    }
    return r;
}

Rational es_coefficient(const ExpSum& s, const FrequencyVector& mu2)
{
    return s.coefficient(mu2);
}

ExpSum rank1_monomial(int exp2, const Rational& c, long ceiling)
{
    ExpSum r(1, ceiling);
    r.add_term({exp2}, c);
    return r;
}

Rational rank1_coeff(const ExpSum& s, int exp2) { return s.coefficient({exp2}); }

ExpSum strip_constant(const ExpSum& s)
{
    FrequencyVector zero(s.rank(), 0);
    if (s.terms().find(zero) == s.terms().end())
        return s;
    ExpSum t(s.rank(), s.ceiling());
    t.set_floor(s.floor_degree());
    for (const auto& [mu2, c] : s.terms())
        if (mu2 != zero)
            t.add_term(mu2, c);
    return t;
}

} // namespace classint
