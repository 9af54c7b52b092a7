#pragma once

#include <vector>

#include "fourstate/rational.hpp"

namespace fourstate {

// Univariate polynomial over Q, coefficients ascending by power, canonical
// (no trailing zero coefficient; the zero polynomial has an empty vector).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const Rational& coeff(int k) const; // 0 outside the stored range
    const Rational& leading() const;    // throws on zero polynomial

    Rational eval(const Rational& t) const;
    UniPoly derivative() const;

    UniPoly operator+(const UniPoly& rhs) const;
    UniPoly operator-(const UniPoly& rhs) const;
    UniPoly operator*(const UniPoly& rhs) const;
    UniPoly scaled(const Rational& s) const;
    bool operator==(const UniPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

    UniPoly monic() const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

// Remainder of a by b (rational division). Throws on zero divisor.
UniPoly poly_mod(const UniPoly& a, const UniPoly& b);

// Monic greatest common divisor by the Euclidean algorithm; intermediate
// remainders are rescaled to primitive integer content to bound growth.
// Throws BothZero.
UniPoly gcd_uni(const UniPoly& a, const UniPoly& b);

// Determinant of the Sylvester matrix, first block of rows built from a.
// Throws DegreeTooLow unless deg a >= 1 and deg b >= 1.
Rational resultant(const UniPoly& a, const UniPoly& b);

} // namespace fourstate
