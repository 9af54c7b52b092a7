#include <benchmark/benchmark.h>

#include "fourstate/dataset.hpp"
#include "fourstate/laminate.hpp"
#include "fourstate/verify.hpp"

using namespace fourstate;

static const LargeT4Data& data() {
    static LargeT4Data d = reference_dataset();
    return d;
}

static const OperatorFamily& family() {
    static OperatorFamily F = solve_coefficients(data());
    return F;
}

static void BM_MonomialDeterminant(benchmark::State& state) {
    InterpolationSystem sys = build_interpolation_system(data());
    for (auto _ : state) benchmark::DoNotOptimize(determinant(sys.monomial_matrix));
}
BENCHMARK(BM_MonomialDeterminant);

static void BM_SolveCoefficients(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve_coefficients(data()));
}
BENCHMARK(BM_SolveCoefficients);

static void BM_PolyGcd(benchmark::State& state) {
    const OperatorFamily& F = family();
    UniPoly a = F.q[0].dehomogenize();
    UniPoly b = F.q[1].dehomogenize();
    for (auto _ : state) benchmark::DoNotOptimize(gcd_uni(a, b));
}
BENCHMARK(BM_PolyGcd);

static void BM_WaveConeQuery(benchmark::State& state) {
    static CertifiedFamily CF = CertifiedFamily::certify(family());
    const QVec3& v = data().configs[0].c[0];
    for (auto _ : state) benchmark::DoNotOptimize(wave_cone_member(CF, v));
}
BENCHMARK(BM_WaveConeQuery);

static void BM_SimpleLaminate(benchmark::State& state) {
    const OperatorFamily& F = family();
    const LargeT4Data& d = data();
    std::array<QVec2, 3> basis{d.nodes[0], d.nodes[1], d.nodes[2]};
    QVec3 a{Rational(0), Rational(0), Rational(0)};
    QVec3 b = d.configs[0].c[0];
    Rect omega(Rational(0), Rational(0), Rational(1), Rational(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(simple_laminate_field(F, a, b, Rational(1, 2), d.nodes[0],
                                                       Rational(1, 10), omega, basis));
}
BENCHMARK(BM_SimpleLaminate);

BENCHMARK_MAIN();
