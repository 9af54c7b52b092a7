#pragma once

#include <vector>

#include "fourstate/rational.hpp"
#include "fourstate/unipoly.hpp"

namespace fourstate {

// General bivariate polynomial of bounded total degree, dense storage.
class BiPoly {
public:
    explicit BiPoly(int max_degree);

    int max_degree() const { return max_deg_; }
    int total_degree() const; // -1 for the zero polynomial

    const Rational& coeff(int i, int j) const; // coefficient of x^i y^j
    void set_coeff(int i, int j, const Rational& c);
    void add_coeff(int i, int j, const Rational& c);

    Rational eval(const Rational& x, const Rational& y) const;

    BiPoly operator+(const BiPoly& rhs) const; // result max degree = max of the two
    BiPoly scaled(const Rational& s) const;
    bool operator==(const BiPoly& rhs) const;
    bool is_zero() const;

    // Substitute t = alpha*x + beta*y into a univariate polynomial.
    static BiPoly compose_linear(const UniPoly& p, const Rational& alpha, const Rational& beta);

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * (max_deg_ + 1) + j; }
    int max_deg_;
    std::vector<Rational> c_;
};

} // namespace fourstate
