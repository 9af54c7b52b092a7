#pragma once

#include <gmpxx.h>

#include <array>
#include <string>

#include "fourstate/errors.hpp"

namespace fourstate {

// Arbitrary-precision rational, always stored reduced with positive denominator.
// mpq_class keeps results of arithmetic canonical, which is exactly the invariant
// the certificates need; parsing goes through parse_rational so that "1/0" and
// malformed strings are rejected instead of crashing inside GMP.
using Rational = mpq_class;
using BigInt = mpz_class;

using QVec2 = std::array<Rational, 2>;
using QVec3 = std::array<Rational, 3>;

// Textual form: optional leading '-', decimal integer, optional "/<positive integer>".
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& r);

// Decimal rendering with the given number of fractional digits (round toward zero).
std::string to_decimal_string(const Rational& r, int digits);

double to_double(const Rational& r);

// Largest integer <= r, as a Rational.
Rational rational_floor(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Reduced rational from an integer pair; mpq_class construction alone does not
// canonicalize, and GMP comparisons assume canonical operands.
inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Small vector helpers used throughout the exact pipeline.
QVec3 vec3_add(const QVec3& a, const QVec3& b);
QVec3 vec3_sub(const QVec3& a, const QVec3& b);
QVec3 vec3_scale(const Rational& s, const QVec3& a);
bool vec3_is_zero(const QVec3& a);
std::string vec3_to_string(const QVec3& a);
std::string vec2_to_string(const QVec2& a);

} // namespace fourstate
