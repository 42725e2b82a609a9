#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace classint {

using Integer = boost::multiprecision::cpp_int;

// Exact rational number, always stored reduced with positive denominator.
// Every "equals zero" decision in this library is made on these; floating
// point never enters.
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

Rational pow_int(const Rational& base, long e);

// Exact integer n-th root; nullopt if the argument is not a perfect power.
std::optional<Integer> nth_root_int(const Integer& a, unsigned n);

std::optional<Rational> sqrt_rational(const Rational& q);
std::optional<Rational> nth_root_rational(const Rational& q, unsigned n);

// base^(e2/2) with e2 an exponent in half-units.  Exact or nullopt (odd e2
// needs base^e2 to be a perfect square).
std::optional<Rational> pow_half_units(const Rational& base, long e2);

// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

} // namespace classint
