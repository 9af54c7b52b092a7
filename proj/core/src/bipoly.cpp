#include "fourstate/bipoly.hpp"

namespace fourstate {

namespace {
const Rational kZero(0);
}

BiPoly::BiPoly(int max_degree)
    : max_deg_(max_degree),
      c_(static_cast<std::size_t>(max_degree + 1) * (max_degree + 1), Rational(0)) {
    if (max_degree < 0) throw MathError("negative degree bound");
}

int BiPoly::total_degree() const {
    int d = -1;
    for (int i = 0; i <= max_deg_; ++i)
        for (int j = 0; j <= max_deg_ - i; ++j)
            if (!fourstate::is_zero(c_[idx(i, j)]) && i + j > d) d = i + j;
    return d;
}

const Rational& BiPoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i > max_deg_ || j > max_deg_) return kZero;
    return c_[idx(i, j)];
}

void BiPoly::set_coeff(int i, int j, const Rational& c) {
    if (i < 0 || j < 0 || i + j > max_deg_) throw DimensionMismatch("monomial outside degree bound");
    c_[idx(i, j)] = c;
}

void BiPoly::add_coeff(int i, int j, const Rational& c) {
    if (i < 0 || j < 0 || i + j > max_deg_) throw DimensionMismatch("monomial outside degree bound");
    c_[idx(i, j)] += c;
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    std::vector<Rational> xpow(static_cast<std::size_t>(max_deg_) + 1), ypow(xpow);
    xpow[0] = 1;
    ypow[0] = 1;
    for (int k = 1; k <= max_deg_; ++k) {
        xpow[static_cast<std::size_t>(k)] = xpow[static_cast<std::size_t>(k - 1)] * x;
        ypow[static_cast<std::size_t>(k)] = ypow[static_cast<std::size_t>(k - 1)] * y;
    }
    Rational acc(0);
    for (int i = 0; i <= max_deg_; ++i)
        for (int j = 0; j <= max_deg_ - i; ++j) {
            const Rational& cij = c_[idx(i, j)];
            if (!fourstate::is_zero(cij)) acc += cij * xpow[static_cast<std::size_t>(i)] * ypow[static_cast<std::size_t>(j)];
        }
    return acc;
}

BiPoly BiPoly::operator+(const BiPoly& rhs) const {
    BiPoly out(std::max(max_deg_, rhs.max_deg_));
    for (int i = 0; i <= max_deg_; ++i)
        for (int j = 0; j <= max_deg_ - i; ++j)
            if (!fourstate::is_zero(coeff(i, j))) out.add_coeff(i, j, coeff(i, j));
    for (int i = 0; i <= rhs.max_deg_; ++i)
        for (int j = 0; j <= rhs.max_deg_ - i; ++j)
            if (!fourstate::is_zero(rhs.coeff(i, j))) out.add_coeff(i, j, rhs.coeff(i, j));
    return out;
}

BiPoly BiPoly::scaled(const Rational& s) const {
    BiPoly out(max_deg_);
    for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = c_[k] * s;
    return out;
}

bool BiPoly::operator==(const BiPoly& rhs) const {
    int d = std::max(max_deg_, rhs.max_deg_);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d - i; ++j)
            if (coeff(i, j) != rhs.coeff(i, j)) return false;
    return true;
}

bool BiPoly::is_zero() const {
    for (const auto& e : c_)
        if (!fourstate::is_zero(e)) return false;
    return true;
}

BiPoly BiPoly::compose_linear(const UniPoly& p, const Rational& alpha, const Rational& beta) {
    int d = std::max(p.degree(), 0);
    BiPoly out(d);
    // (alpha x + beta y)^k expanded by the binomial theorem, accumulated per power.
    for (int k = 0; k <= p.degree(); ++k) {
        const Rational& pk = p.coeff(k);
        if (fourstate::is_zero(pk)) continue;
        Rational binom(1);
        Rational apow(1);
        std::vector<Rational> bpow(static_cast<std::size_t>(k) + 1);
        bpow[0] = 1;
        for (int j = 1; j <= k; ++j) bpow[static_cast<std::size_t>(j)] = bpow[static_cast<std::size_t>(j - 1)] * beta;
        // term i: C(k,i) alpha^i beta^{k-i} x^i y^{k-i}
        for (int i = 0; i <= k; ++i) {
            out.add_coeff(i, k - i, pk * binom * apow * bpow[static_cast<std::size_t>(k - i)]);
            binom *= Rational(k - i);
            binom /= Rational(i + 1);
            apow *= alpha;
        }
    }
    return out;
}

} // namespace fourstate
