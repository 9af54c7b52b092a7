#pragma once

#include <vector>

#include "fourstate/rational.hpp"
#include "fourstate/unipoly.hpp"

namespace fourstate {

enum class Axis { X, Y };

// Homogeneous bivariate polynomial of degree d; coeffs_[s] is the coefficient
// of x^{d-s} y^{s} (descending x-degree order).
class HomPoly2 {
public:
    explicit HomPoly2(int degree);
    HomPoly2(int degree, std::vector<Rational> coeffs);

    int degree() const { return degree_; }
    const Rational& coeff(int s) const { return coeffs_[static_cast<std::size_t>(s)]; }
    Rational& coeff(int s) { return coeffs_[static_cast<std::size_t>(s)]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    Rational eval(const Rational& x, const Rational& y) const;
    Rational eval(const QVec2& xi) const { return eval(xi[0], xi[1]); }

    // Throws DegreeZero when degree == 0.
    HomPoly2 partial(Axis axis) const;

    // z -> p(z, 1).
    UniPoly dehomogenize() const;

    HomPoly2 operator+(const HomPoly2& rhs) const;
    HomPoly2 operator-(const HomPoly2& rhs) const;
    HomPoly2 operator*(const HomPoly2& rhs) const; // degree adds
    HomPoly2 scaled(const Rational& s) const;
    bool operator==(const HomPoly2& rhs) const {
        return degree_ == rhs.degree_ && coeffs_ == rhs.coeffs_;
    }

private:
    int degree_;
    std::vector<Rational> coeffs_;
};

} // namespace fourstate
