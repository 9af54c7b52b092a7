#include <doctest.h>

#include <random>

#include "fourstate/dataset.hpp"
#include "fourstate/qmatrix.hpp"
#include "fourstate/verify.hpp"

using namespace fourstate;

namespace {

Rational rand_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return make_rational(num(rng), den(rng));
}

// Independent determinant oracle: cofactor expansion along the first row.
Rational cofactor_det(const QMatrix& M) {
    int n = M.rows();
    if (n == 1) return M(0, 0);
    Rational acc(0);
    int sign = 1;
    for (int j = 0; j < n; ++j) {
        QMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = M(r, c);
            }
        }
        acc += Rational(sign) * M(0, j) * cofactor_det(minor);
        sign = -sign;
    }
    return acc;
}

} // namespace

TEST_CASE("solve_linear solves a known system exactly") {
    QMatrix M(2, 2);
    M(0, 0) = 2; M(0, 1) = 1;
    M(1, 0) = 1; M(1, 1) = 3;
    QMatrix rhs(2, 1);
    rhs(0, 0) = 5;
    rhs(1, 0) = 10;
    QMatrix x = solve_linear(M, rhs);
    CHECK(x(0, 0) == Rational(1));
    CHECK(x(1, 0) == Rational(3));
}

TEST_CASE("solve_linear error paths") {
    QMatrix M(2, 3), rhs(2, 1);
    CHECK_THROWS_AS(solve_linear(M, rhs), NonSquare);
    QMatrix S(2, 2), r3(3, 1);
    CHECK_THROWS_AS(solve_linear(S, r3), DimensionMismatch);
    QMatrix sing(2, 2);
    sing(0, 0) = 1; sing(0, 1) = 2;
    sing(1, 0) = 2; sing(1, 1) = 4;
    QMatrix r2(2, 1);
    r2(0, 0) = 1;
    CHECK_THROWS_AS(solve_linear(sing, r2), SingularMatrix);
}

TEST_CASE("determinant matches the cofactor oracle on random matrices") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(trial % 5);
        QMatrix M(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M(i, j) = rand_rational(rng);
        CHECK(determinant(M) == cofactor_det(M));
    }
}

TEST_CASE("determinant basics") {
    CHECK(determinant(QMatrix::identity(4)) == Rational(1));
    QMatrix Z(3, 3);
    CHECK(determinant(Z) == Rational(0));
    QMatrix R(2, 3);
    CHECK_THROWS_AS(determinant(R), NonSquare);
    QMatrix M(2, 2);
    M(0, 0) = Rational(1, 2); M(0, 1) = Rational(1, 3);
    M(1, 0) = Rational(1, 5); M(1, 1) = Rational(1, 7);
    CHECK(determinant(M) == Rational(1, 14) - Rational(1, 15));
}

TEST_CASE("random invertible systems solve exactly") {
    std::mt19937_64 rng(901);
    int solved = 0;
    while (solved < 40) {
        int n = 2 + static_cast<int>(rng() % 7); // up to 8x8
        QMatrix M(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M(i, j) = rand_rational(rng);
        if (is_zero(determinant(M))) continue;
        QMatrix rhs(n, 1);
        for (int i = 0; i < n; ++i) rhs(i, 0) = rand_rational(rng);
        QMatrix x = solve_linear(M, rhs);
        CHECK((M * x - rhs).is_zero());
        ++solved;
    }
}

TEST_CASE("rank of structured matrices") {
    CHECK(rank(QMatrix::identity(5)) == 5);
    QMatrix M(3, 3);
    M(0, 0) = 1; M(0, 1) = 2; M(0, 2) = 3;
    M(1, 0) = 2; M(1, 1) = 4; M(1, 2) = 6;
    M(2, 0) = 0; M(2, 1) = 1; M(2, 2) = 1;
    CHECK(rank(M) == 2);
    QMatrix Z(4, 2);
    CHECK(rank(Z) == 0);
}

TEST_CASE("monomial interpolation matrix is invertible, det agrees with oracle scale") {
    InterpolationSystem sys = build_interpolation_system(reference_dataset());
    Rational det = determinant(sys.monomial_matrix);
    CHECK(!is_zero(det));
}
