#include "fourstate/unipoly.hpp"

#include "fourstate/qmatrix.hpp"

namespace fourstate {

namespace {
const Rational kZero(0);

void trim(std::vector<Rational>& c) {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
}
} // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

UniPoly UniPoly::constant(const Rational& c) {
    if (fourstate::is_zero(c)) return UniPoly{};
    return UniPoly({c});
}

const Rational& UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& UniPoly::leading() const {
    if (coeffs_.empty()) throw MathError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational UniPoly::eval(const Rational& t) const {
    Rational v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
    return v;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly{};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    std::vector<Rational> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] += rhs.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const { return *this + rhs.scaled(Rational(-1)); }

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return UniPoly{};
    std::vector<Rational> c(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    if (fourstate::is_zero(s)) return UniPoly{};
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x *= s;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly{};
    return scaled(1 / leading());
}

UniPoly poly_mod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw MathError("division by zero polynomial");
    std::vector<Rational> r(a.coeffs());
    const int db = b.degree();
    const Rational& lb = b.leading();
    while (static_cast<int>(r.size()) - 1 >= db) {
        while (!r.empty() && is_zero(r.back())) r.pop_back();
        int dr = static_cast<int>(r.size()) - 1;
        if (dr < db) break;
        Rational q = r.back() / lb;
        for (int k = 0; k <= db; ++k) r[static_cast<std::size_t>(dr - db + k)] -= q * b.coeff(k);
        r.pop_back();
    }
    return UniPoly(std::move(r));
}

namespace {
// Rescale to integer coefficients with content 1 and positive leading coefficient.
UniPoly primitive_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    BigInt den_lcm(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    BigInt content(0);
    for (const auto& c : p.coeffs()) {
        Rational s = c * Rational(den_lcm);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), s.get_num().get_mpz_t());
    }
    Rational scale(den_lcm, content);
    scale.canonicalize();
    if (sgn(p.leading()) < 0) scale = -scale;
    return p.scaled(scale);
}
} // namespace

UniPoly gcd_uni(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero();
    UniPoly f = primitive_part(a);
    UniPoly g = primitive_part(b);
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        UniPoly r = primitive_part(poly_mod(f, g));
        f = g;
        g = r;
    }
    return f.monic();
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da < 1 || db < 1) throw DegreeTooLow();
    const int n = da + db;
    QMatrix S(n, n);
    // db rows of a's coefficients (descending), then da rows of b's.
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k) S(r, r + k) = a.coeff(da - k);
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k) S(db + r, r + k) = b.coeff(db - k);
    return determinant(S);
}

} // namespace fourstate
