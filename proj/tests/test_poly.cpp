#include <doctest.h>

#include <random>

#include "fourstate/bipoly.hpp"
#include "fourstate/hompoly.hpp"
#include "fourstate/unipoly.hpp"

using namespace fourstate;

namespace {

UniPoly from_roots(const std::vector<Rational>& roots) {
    UniPoly p = UniPoly::constant(Rational(1));
    for (const auto& r : roots) p = p * UniPoly({-r, Rational(1)});
    return p;
}

} // namespace

TEST_CASE("UniPoly canonical form and arithmetic") {
    UniPoly p({Rational(1), Rational(2), Rational(0)});
    CHECK(p.degree() == 1);
    CHECK(UniPoly({Rational(0)}).is_zero());
    UniPoly a({Rational(1), Rational(1)});        // 1 + t
    UniPoly b({Rational(-1), Rational(1)});       // -1 + t
    CHECK((a * b) == UniPoly({Rational(-1), Rational(0), Rational(1)}));
    CHECK((a - a).is_zero());
    CHECK(a.eval(Rational(3)) == Rational(4));
    CHECK(a.derivative() == UniPoly::constant(Rational(1)));
    CHECK(UniPoly({Rational(0), Rational(0), Rational(5, 2)}).monic() ==
          UniPoly({Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("poly_mod is the Euclidean remainder") {
    UniPoly a({Rational(1), Rational(0), Rational(1)}); // t^2 + 1
    UniPoly b({Rational(1), Rational(1)});              // t + 1
    CHECK(poly_mod(a, b) == UniPoly::constant(Rational(2)));
    CHECK_THROWS_AS(poly_mod(a, UniPoly{}), MathError);
}

TEST_CASE("gcd_uni recovers the common factor, monic") {
    UniPoly a = from_roots({Rational(1), Rational(-2)});
    UniPoly b = from_roots({Rational(1), Rational(3)});
    CHECK(gcd_uni(a, b) == from_roots({Rational(1)}));
    CHECK(gcd_uni(a.scaled(Rational(7, 3)), b.scaled(Rational(-2))) == from_roots({Rational(1)}));
    CHECK(gcd_uni(a, from_roots({Rational(5)})).is_constant());
    CHECK(gcd_uni(a, UniPoly{}) == a.monic());
    CHECK_THROWS_AS(gcd_uni(UniPoly{}, UniPoly{}), BothZero);
}

TEST_CASE("resultant of two linear factors is the root difference") {
    auto lin = [](const Rational& r) { return UniPoly({-r, Rational(1)}); };
    CHECK(resultant(lin(Rational(5)), lin(Rational(2))) == Rational(3));
    CHECK(resultant(lin(Rational(1, 2)), lin(Rational(1, 3))) == Rational(1, 6));
    CHECK_THROWS_AS(resultant(lin(Rational(1)), UniPoly::constant(Rational(2))), DegreeTooLow);
}

TEST_CASE("resultant vanishes exactly on shared roots") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 20; ++trial) {
        Rational shared = make_rational(d(rng), 1 + (trial % 3));
        UniPoly a = from_roots({shared, Rational(d(rng))});
        UniPoly b = from_roots({shared, Rational(d(rng)), Rational(d(rng))});
        CHECK(is_zero(resultant(a, b)));
        CHECK(!gcd_uni(a, b).is_constant());
        UniPoly c = from_roots({shared + 1, Rational(d(rng))});
        bool coprime = gcd_uni(a, c).is_constant();
        CHECK(coprime == !is_zero(resultant(a, c)));
    }
}

TEST_CASE("HomPoly2 evaluation, homogeneity and Euler identity") {
    // x^3 - 2 x^2 y + 5 y^3
    HomPoly2 p(3, {Rational(1), Rational(-2), Rational(0), Rational(5)});
    CHECK(p.eval(Rational(1), Rational(1)) == Rational(4));
    CHECK(p.eval(Rational(2), Rational(0)) == Rational(8));
    // p(t x, t y) = t^3 p(x, y)
    Rational t(3, 2), x(2), y(-1);
    CHECK(p.eval(t * x, t * y) == t * t * t * p.eval(x, y));
    // Euler: x p_x + y p_y = 3 p
    HomPoly2 px = p.partial(Axis::X), py = p.partial(Axis::Y);
    CHECK(x * px.eval(x, y) + y * py.eval(x, y) == Rational(3) * p.eval(x, y));
    CHECK_THROWS_AS(HomPoly2(0, {Rational(1)}).partial(Axis::X), DegreeZero);
}

TEST_CASE("HomPoly2 partials match the dehomogenized derivative") {
    HomPoly2 p(4, {Rational(2), Rational(-1), Rational(3), Rational(0), Rational(7)});
    // d/dz p(z,1) = (partial_x p)(z, 1)
    CHECK(p.dehomogenize().derivative() == p.partial(Axis::X).dehomogenize());
    // dehomogenize inverts the coefficient order
    CHECK(p.dehomogenize().coeff(4) == Rational(2));
    CHECK(p.dehomogenize().coeff(0) == Rational(7));
}

TEST_CASE("BiPoly storage, eval and compose_linear") {
    BiPoly p(3);
    p.set_coeff(2, 1, Rational(4));
    p.add_coeff(0, 0, Rational(-1));
    CHECK(p.total_degree() == 3);
    CHECK(p.eval(Rational(2), Rational(3)) == Rational(47));
    CHECK_THROWS_AS(p.set_coeff(3, 1, Rational(1)), MathError);

    UniPoly q({Rational(1), Rational(0), Rational(2)}); // 1 + 2 t^2
    Rational alpha(3, 2), beta(-1, 3);
    BiPoly comp = BiPoly::compose_linear(q, alpha, beta);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int i = 0; i < 10; ++i) {
        Rational x(d(rng)), y(d(rng));
        CHECK(comp.eval(x, y) == q.eval(alpha * x + beta * y));
    }
}

TEST_CASE("BiPoly addition widens to the larger degree") {
    BiPoly a(2), b(5);
    a.set_coeff(1, 1, Rational(1));
    b.set_coeff(4, 1, Rational(2));
    BiPoly s = a + b;
    CHECK(s.max_degree() == 5);
    CHECK(s.coeff(1, 1) == Rational(1));
    CHECK(s.coeff(4, 1) == Rational(2));
    CHECK(s.scaled(Rational(0)).is_zero());
}
