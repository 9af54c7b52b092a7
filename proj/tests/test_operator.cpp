#include <doctest.h>

#include <random>

#include "fourstate/dataset.hpp"
#include "fourstate/verify.hpp"

using namespace fourstate;

namespace {

const LargeT4Data& data() {
    static LargeT4Data d = reference_dataset();
    return d;
}

const OperatorFamily& family() {
    static OperatorFamily F = solve_coefficients(data());
    return F;
}

const CertifiedFamily& certified() {
    static CertifiedFamily CF = CertifiedFamily::certify(family());
    return CF;
}

} // namespace

TEST_CASE("operator family requires equal degrees") {
    HomPoly2 a(2), b(3);
    CHECK_THROWS_AS(OperatorFamily(a, a, b), DimensionMismatch);
}

TEST_CASE("symbol identities: A B = 0 and principal minors") {
    const OperatorFamily& F = family();
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-10, 10);
    for (int trial = 0; trial < 25; ++trial) {
        QVec2 xi{Rational(d(rng)), Rational(d(rng))};
        if (is_zero(xi[0]) && is_zero(xi[1])) continue;
        QVec3 B = symbol_B(F, xi);
        QMatrix A = symbol_A(F, xi);
        QMatrix Bcol(3, 1);
        for (int i = 0; i < 3; ++i) Bcol(i, 0) = B[static_cast<std::size_t>(i)];
        CHECK((A * Bcol).is_zero());
        CHECK(rank(A) == 2);
        // principal 2x2 minors are -q3^2, q2^2, -q1^2
        CHECK(A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0) == -B[2] * B[2]);
        CHECK(A(0, 0) * A(2, 2) - A(0, 2) * A(2, 0) == B[1] * B[1]);
        CHECK(A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1) == -B[0] * B[0]);
    }
}

TEST_CASE("constant-rank certificate passes for the solved family") {
    const CertifiedFamily& CF = certified();
    CHECK(CF.certified());
    CHECK(CF.certificate().find("symbolic_identity_AB_zero") != nullptr);
    CHECK_NOTHROW(CF.require_certified());
}

TEST_CASE("certificate fails on a degenerate family and gates queries") {
    // q1 = q2 breaks pairwise coprimality.
    OperatorFamily bad(family().q[0], family().q[0], family().q[2]);
    CertifiedFamily CF = CertifiedFamily::certify(bad);
    CHECK(!CF.certified());
    CHECK_THROWS_AS(CF.require_certified(), PreconditionUnverified);
    QVec3 v{Rational(1), Rational(0), Rational(0)};
    CHECK_THROWS_AS(wave_cone_member(CF, v), PreconditionUnverified);
}

TEST_CASE("wave cone membership of reference legs with witnesses") {
    const CertifiedFamily& CF = certified();

    WaveConeVerdict w1 = wave_cone_member(CF, data().configs[0].c[1]); // leg at node (19,-8)
    CHECK(w1.member);
    REQUIRE(w1.witness_direction.has_value());
    CHECK(vec2_to_string(*w1.witness_direction) == "(19, -8)");

    WaveConeVerdict w2 = wave_cone_member(CF, data().configs[1].c[2]); // leg at node (2,-17)
    CHECK(w2.member);
    REQUIRE(w2.witness_direction.has_value());
    CHECK(vec2_to_string(*w2.witness_direction) == "(2, -17)");

    // Scaling stays inside the cone.
    CHECK(wave_cone_member(CF, vec3_scale(Rational(-7, 3), data().configs[2].c[0])).member);
}

TEST_CASE("wave cone excludes state differences and includes zero") {
    const CertifiedFamily& CF = certified();
    CHECK(wave_cone_member(CF, QVec3{Rational(0), Rational(0), Rational(0)}).member);
    CHECK(!wave_cone_member(CF, QVec3{Rational(1), Rational(-1), Rational(0)}).member);
    CHECK(!wave_cone_member(CF, QVec3{Rational(1), Rational(0), Rational(0)}).member);
}

TEST_CASE("balancedness from sampled symbols") {
    std::vector<QVec2> nodes(data().nodes.begin(), data().nodes.end());
    CHECK(is_balanced(family(), nodes));
    CHECK(!is_balanced(family(), {nodes[0]}));
    CHECK_THROWS_AS(is_balanced(family(), {}), MathError);
}

TEST_CASE("node potential polynomials reproduce the symbol") {
    const OperatorFamily& F = family();
    for (int r = 0; r < 12; ++r) {
        const QVec2& xi = data().nodes[static_cast<std::size_t>(r)];
        BiPoly P = node_potential_polynomial(F.degree(), xi);
        QVec3 out = apply_B_to_poly(F, P);
        QVec3 expect = symbol_B(F, xi);
        CHECK(vec3_is_zero(vec3_sub(out, expect)));
    }
}

TEST_CASE("potential for a constant hits the requested value exactly") {
    const OperatorFamily& F = family();
    std::array<QVec2, 3> basis{data().nodes[0], data().nodes[1], data().nodes[2]};
    QVec3 e{Rational(2, 15), Rational(4, 15), Rational(8, 15)};
    BiPoly P = potential_polynomial_for_constant(F, e, basis);
    CHECK(vec3_is_zero(vec3_sub(apply_B_to_poly(F, P), e)));
}

TEST_CASE("dependent basis and degree violations are rejected") {
    const OperatorFamily& F = family();
    std::array<QVec2, 3> repeated{data().nodes[0], data().nodes[0], data().nodes[2]};
    QVec3 e{Rational(1), Rational(0), Rational(0)};
    CHECK_THROWS_AS(potential_polynomial_for_constant(F, e, repeated), DependentBasis);

    BiPoly toobig(F.degree() + 1);
    toobig.set_coeff(F.degree() + 1, 0, Rational(1));
    CHECK_THROWS_AS(apply_B_to_poly(F, toobig), DegreeTooHigh);
}

TEST_CASE("low-degree polynomials are annihilated") {
    const OperatorFamily& F = family();
    BiPoly low(3);
    low.set_coeff(2, 1, Rational(5));
    low.set_coeff(0, 0, Rational(-2));
    CHECK(vec3_is_zero(apply_B_to_poly(F, low)));
}
