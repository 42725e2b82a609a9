#include "classint/rational.hpp"

#include <stdexcept>

namespace classint {

Rational pow_int(const Rational& base, long e)
{
    if (e == 0)
        return Rational(1);
    if (base == 0) {
        if (e < 0)
            throw std::domain_error("pow_int: zero base, negative exponent");
        return Rational(0);
    }
    Rational b = base;
    long n = e;
    if (n < 0) {
        b = Rational(den(base), num(base));
        n = -n;
    }
    Rational r(1);
    while (n > 0) {
        if (n & 1)
            r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

std::optional<Integer> nth_root_int(const Integer& a, unsigned n)
{
    if (n == 0)
        throw std::domain_error("nth_root_int: n = 0");
    if (a == 0)
        return Integer(0);
    if (a < 0) {
        if (n % 2 == 0)
            return std::nullopt;
        auto r = nth_root_int(-a, n);
        if (!r)
            return std::nullopt;
        return -*r;
    }
    if (n == 1)
        return a;
    // Newton iteration on integers, then verify.
    Integer x = Integer(1) << (unsigned)((boost::multiprecision::msb(a) / n) + 1);
    Integer prev = -1;
    while (x != prev) {
        prev = x;
        Integer xn1 = boost::multiprecision::pow(x, n - 1);
        x = ((n - 1) * x + a / xn1) / n;
        if (x > prev)
            break; // converged from below; prev is the floor root candidate
    }
    for (Integer c = x - 1; c <= x + 1; ++c) {
        if (c >= 0 && boost::multiprecision::pow(c, n) == a)
            return c;
    }
    if (boost::multiprecision::pow(prev, n) == a)
        return prev;
    return std::nullopt;
}

std::optional<Rational> sqrt_rational(const Rational& q) { return nth_root_rational(q, 2); }

std::optional<Rational> nth_root_rational(const Rational& q, unsigned n)
{
    auto rn = nth_root_int(num(q), n);
    if (!rn)
        return std::nullopt;
    auto rd = nth_root_int(den(q), n);
    if (!rd)
        return std::nullopt;
    return Rational(*rn, *rd);
}

std::optional<Rational> pow_half_units(const Rational& base, long e2)
{
    if (e2 % 2 == 0)
        return pow_int(base, e2 / 2);
    if (base == 0)
        return e2 > 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
    return sqrt_rational(pow_int(base, e2));
}

Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(Integer(s));
    Integer n(s.substr(0, slash));
    Integer d(s.substr(slash + 1));
    if (d == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    return Rational(n, d);
}

std::string to_string(const Rational& q)
{
    if (den(q) == 1)
        return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

} // namespace classint
