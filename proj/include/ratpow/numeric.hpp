#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ratpow/errors.hpp"

namespace ratpow {

// Arbitrary-precision integers and rationals.  Everything in this library is
// exact; no floating point appears anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Integer int_gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

// Largest integer <= r.
inline Integer floor_rat(const Rational& r) {
    Integer q = rat_num(r) / rat_den(r); // truncates toward zero
    if (r < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

// Smallest integer >= r.
inline Integer ceil_rat(const Rational& r) {
    Integer q = rat_num(r) / rat_den(r);
    if (r > 0 && q * rat_den(r) != rat_num(r)) ++q;
    return q;
}

// Smallest integer >= a/b for integers a, b with b > 0.
inline Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (a > 0 && q * b != a) ++q;
    return q;
}

inline std::string int_to_string(const Integer& n) { return n.str(); }

// "p/q" in lowest terms; plain "p" when the denominator is 1.
inline std::string rat_to_string(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Parses "p", "p/q" or "-p/q".  Throws ParseError on malformed input or a
// zero denominator.
Rational parse_rational(const std::string& text);

} // namespace ratpow
