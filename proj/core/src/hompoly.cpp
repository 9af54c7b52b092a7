#include "fourstate/hompoly.hpp"

namespace fourstate {

HomPoly2::HomPoly2(int degree)
    : degree_(degree), coeffs_(static_cast<std::size_t>(degree) + 1, Rational(0)) {
    if (degree < 0) throw MathError("negative degree");
}

HomPoly2::HomPoly2(int degree, std::vector<Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0) throw MathError("negative degree");
    if (coeffs_.size() != static_cast<std::size_t>(degree) + 1)
        throw DimensionMismatch("homogeneous coefficient count must be degree+1");
}

bool HomPoly2::is_zero() const {
    for (const auto& c : coeffs_)
        if (!fourstate::is_zero(c)) return false;
    return true;
}

Rational HomPoly2::eval(const Rational& x, const Rational& y) const {
    // Sum of coeffs[s] x^{d-s} y^{s}, powers built incrementally.
    Rational acc(0);
    Rational ypow(1);
    std::vector<Rational> xpow(static_cast<std::size_t>(degree_) + 1);
    xpow[0] = 1;
    for (int k = 1; k <= degree_; ++k) xpow[static_cast<std::size_t>(k)] = xpow[static_cast<std::size_t>(k - 1)] * x;
    for (int s = 0; s <= degree_; ++s) {
        acc += coeffs_[static_cast<std::size_t>(s)] * xpow[static_cast<std::size_t>(degree_ - s)] * ypow;
        ypow *= y;
    }
    return acc;
}

HomPoly2 HomPoly2::partial(Axis axis) const {
    if (degree_ == 0) throw DegreeZero();
    HomPoly2 out(degree_ - 1);
    for (int s = 0; s <= degree_ - 1; ++s) {
        if (axis == Axis::X) {
            // d/dx of coeff[s] x^{d-s} y^s -> (d-s) coeff[s] x^{d-1-s} y^s
            out.coeff(s) = Rational(degree_ - s) * coeffs_[static_cast<std::size_t>(s)];
        } else {
            // d/dy of coeff[s+1] x^{d-s-1} y^{s+1} -> (s+1) coeff[s+1] x^{d-1-s} y^s
            out.coeff(s) = Rational(s + 1) * coeffs_[static_cast<std::size_t>(s) + 1];
        }
    }
    return out;
}

UniPoly HomPoly2::dehomogenize() const {
    // p(z,1) = sum_s coeffs[s] z^{d-s}; ascending coefficient k is coeffs[d-k].
    std::vector<Rational> c(static_cast<std::size_t>(degree_) + 1);
    for (int k = 0; k <= degree_; ++k) c[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(degree_ - k)];
    return UniPoly(std::move(c));
}

HomPoly2 HomPoly2::operator+(const HomPoly2& rhs) const {
    if (degree_ != rhs.degree_) throw DimensionMismatch("degree mismatch in sum");
    HomPoly2 out(degree_);
    for (int s = 0; s <= degree_; ++s) out.coeff(s) = coeff(s) + rhs.coeff(s);
    return out;
}

HomPoly2 HomPoly2::operator-(const HomPoly2& rhs) const { return *this + rhs.scaled(Rational(-1)); }

HomPoly2 HomPoly2::operator*(const HomPoly2& rhs) const {
    HomPoly2 out(degree_ + rhs.degree_);
    for (int s = 0; s <= degree_; ++s) {
        if (fourstate::is_zero(coeff(s))) continue;
        for (int t = 0; t <= rhs.degree_; ++t) out.coeff(s + t) += coeff(s) * rhs.coeff(t);
    }
    return out;
}

HomPoly2 HomPoly2::scaled(const Rational& s) const {
    HomPoly2 out(degree_);
    for (int i = 0; i <= degree_; ++i) out.coeff(i) = coeff(i) * s;
    return out;
}

} // namespace fourstate
