#include <doctest.h>

#include <random>

#include "fourstate/dataset.hpp"
#include "fourstate/laminate.hpp"
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

std::array<QVec2, 3> basis() { return {data().nodes[0], data().nodes[1], data().nodes[2]}; }

Rational rand_rational(std::mt19937_64& rng, int lo, int hi, int den_max) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, den_max);
    return make_rational(num(rng), den(rng));
}

// Independent oracle via the iterated-integral formula
// H(t) = int_0^t (t-s)^{k-1}/(k-1)! h(s) ds, summed over constancy intervals.
Rational cauchy_H(const Profile& P, int k, const Rational& t) {
    Rational kfact(1);
    for (int i = 2; i <= k; ++i) kfact *= Rational(i);
    auto pw = [](Rational base, int e) {
        Rational r(1);
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };

    // collect breakpoints strictly inside (min(0,t), max(0,t))
    Rational lo = t < 0 ? t : Rational(0);
    Rational hi = t < 0 ? Rational(0) : t;
    std::vector<Rational> cuts{lo};
    Rational m = rational_floor(lo);
    while (m <= hi + 1) {
        for (Rational cand : {Rational(m), Rational(m + 1 - P.lambda)})
            if (cand > lo && cand < hi) cuts.push_back(cand);
        m += 1;
    }
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());

    Rational acc(0);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational& u = cuts[i];
        const Rational& v = cuts[i + 1];
        if (u == v) continue;
        Rational mid = (u + v) / 2;
        Rational hv = profile_h(P, mid);
        acc += hv / kfact * (pw(t - u, k) - pw(t - v, k));
    }
    // the sum runs forward over [t, 0] when t < 0, i.e. it computes -H(t)
    if (t < 0) return Rational(-acc);
    return acc;
}

} // namespace

TEST_CASE("profile values and periodicity") {
    Profile P(Rational(1, 3));
    CHECK(profile_h(P, Rational(1, 2)) == Rational(1, 3));
    CHECK(profile_h(P, Rational(3, 4)) == Rational(-2, 3));
    CHECK(profile_h(P, Rational(0)) == Rational(1, 3));
    CHECK(profile_h(P, Rational(2, 3)) == Rational(-2, 3));
    std::mt19937_64 rng(42);
    for (int i = 0; i < 20; ++i) {
        Rational t = rand_rational(rng, -50, 50, 12);
        CHECK(profile_h(P, t + 1) == profile_h(P, t));
        CHECK(profile_h(P, t - 3) == profile_h(P, t));
    }
    CHECK_THROWS_AS(Profile(Rational(1)), MathError);
    CHECK_THROWS_AS(Profile(Rational(0)), MathError);
}

TEST_CASE("antiderivative matches hand values") {
    Profile P(Rational(1, 3));
    CHECK(antiderivative_H(P, 1, Rational(0)) == Rational(0));
    CHECK(antiderivative_H(P, 1, Rational(2, 3)) == Rational(2, 9));
    CHECK(antiderivative_H(P, 1, Rational(1)) == Rational(0));
    CHECK(antiderivative_H(P, 2, Rational(0)) == Rational(0));
}

TEST_CASE("antiderivative agrees with the iterated-integral oracle") {
    std::mt19937_64 rng(7);
    for (const auto& lambda : {Rational(1, 2), Rational(1, 3), Rational(3, 7)}) {
        Profile P(lambda);
        for (int k : {1, 2, 3}) {
            for (int i = 0; i < 12; ++i) {
                Rational t = rand_rational(rng, -18, 18, 6);
                CHECK(antiderivative_H(P, k, t) == cauchy_H(P, k, t));
            }
            CHECK(antiderivative_H(P, k, Rational(5, 4)) == cauchy_H(P, k, Rational(5, 4)));
            CHECK(antiderivative_H(P, k, Rational(-5, 4)) == cauchy_H(P, k, Rational(-5, 4)));
        }
    }
}

TEST_CASE("piece table is C^{k'-1} at the breakpoints") {
    Profile P(Rational(2, 5));
    auto pieces = antiderivative_pieces(P, 3, Rational(-2), Rational(2));
    REQUIRE(pieces.size() >= 2);
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        CHECK(pieces[i].hi == pieces[i + 1].lo);
        UniPoly a = pieces[i].poly, b = pieces[i + 1].poly;
        const Rational& x = pieces[i].hi;
        for (int l = 0; l < 3; ++l) {
            CHECK(a.eval(x) == b.eval(x));
            a = a.derivative();
            b = b.derivative();
        }
    }
}

TEST_CASE("polygon clipping and areas") {
    Rect unit(Rational(0), Rational(0), Rational(1), Rational(1));
    // vertical strip x in [1/4, 3/4]
    auto poly = clip_rect_to_strip(unit, QVec2{Rational(1), Rational(0)}, Rational(1),
                                   Rational(1, 4), Rational(3, 4));
    CHECK(polygon_area(poly) == Rational(1, 2));
    // strip that misses the square
    auto empty = clip_rect_to_strip(unit, QVec2{Rational(1), Rational(0)}, Rational(1),
                                    Rational(2), Rational(3));
    CHECK(polygon_area(empty) == Rational(0));
    // strip that contains the square
    auto all = clip_rect_to_strip(unit, QVec2{Rational(1), Rational(1)}, Rational(1),
                                  Rational(-5), Rational(5));
    CHECK(polygon_area(all) == Rational(1));
    // diagonal half: x + y <= 1
    auto tri = clip_rect_to_strip(unit, QVec2{Rational(1), Rational(1)}, Rational(1),
                                  Rational(-5), Rational(1));
    CHECK(polygon_area(tri) == Rational(1, 2));
    CHECK_THROWS_AS(Rect(Rational(1), Rational(0), Rational(0), Rational(1)), MathError);
}

TEST_CASE("axis-aligned laminate has exactly equal fractions") {
    QVec2 xi0{Rational(1), Rational(0)};
    QVec3 a{Rational(0), Rational(0), Rational(0)};
    QVec3 b = symbol_B(family(), xi0);
    Rect unit(Rational(0), Rational(0), Rational(1), Rational(1));
    auto field = simple_laminate_field(family(), a, b, Rational(1, 2), xi0, Rational(1, 4), unit,
                                       basis());
    auto fractions = volume_fractions(field);
    CHECK(fractions.at(vec3_to_string(a)) == Rational(1, 2));
    CHECK(fractions.at(vec3_to_string(b)) == Rational(1, 2));
}

TEST_CASE("laminate slabs carry exact potentials: B(V) equals the stored value") {
    QVec2 xi0{Rational(-14), Rational(5)};
    QVec3 a{Rational(0), Rational(0), Rational(0)};
    QVec3 b = data().configs[0].c[0];
    Rect unit(Rational(0), Rational(0), Rational(1), Rational(1));
    auto field = simple_laminate_field(family(), a, b, Rational(1, 3), xi0, Rational(1, 4), unit,
                                       basis());
    REQUIRE(!field.slabs.empty());
    Rational total(0);
    for (const Slab& s : field.slabs) {
        bool is_a = vec3_is_zero(vec3_sub(s.value, a));
        bool is_b = vec3_is_zero(vec3_sub(s.value, b));
        CHECK((is_a || is_b));
        CHECK(vec3_is_zero(vec3_sub(apply_B_to_poly(family(), s.V), s.value)));
        total += polygon_area(clip_rect_to_strip(unit, xi0, field.eps, s.t_lo, s.t_hi));
    }
    CHECK(total == Rational(1)); // volume conservation
    // field_value agrees with the slab structure at sample points
    QVec3 v = field_value(field, Rational(1, 7), Rational(2, 7));
    CHECK((vec3_is_zero(vec3_sub(v, a)) || vec3_is_zero(vec3_sub(v, b))));
}

TEST_CASE("non-witness directions are rejected") {
    QVec3 a{Rational(0), Rational(0), Rational(0)};
    QVec3 b = data().configs[0].c[0];
    Rect unit(Rational(0), Rational(0), Rational(1), Rational(1));
    CHECK_THROWS_AS(simple_laminate_field(family(), a, b, Rational(1, 2),
                                          QVec2{Rational(1), Rational(1)}, Rational(1, 10), unit,
                                          basis()),
                    NotAWaveDirection);
    CHECK_THROWS_AS(simple_laminate_field(family(), a, a, Rational(1, 2),
                                          QVec2{Rational(-14), Rational(5)}, Rational(1, 10), unit,
                                          basis()),
                    NotAWaveDirection);
}

TEST_CASE("elementary splitting follows the reference staircase") {
    QVec3 P1 = vec3_add(data().configs[0].p, data().configs[0].c[0]);
    LaminateTree tree = LaminateTree::dirac(P1);
    CHECK(vec3_is_zero(vec3_sub(tree.barycenter(), P1)));

    QVec3 a1 = data().states[0];
    QVec3 p = data().configs[0].p;
    LaminateTree after = split(tree, P1, a1, p, Rational(1, 2), Rational(1), certified());
    REQUIRE(after.leaves.size() == 2);
    for (const auto& leaf : after.leaves) CHECK(leaf.weight == Rational(1, 2));
    CHECK(vec3_is_zero(vec3_sub(after.barycenter(), P1)));
}

TEST_CASE("illegal splits are rejected") {
    QVec3 P1 = vec3_add(data().configs[0].p, data().configs[0].c[0]);
    LaminateTree tree = LaminateTree::dirac(P1);

    // direction a2 - a3 is excluded from the wave cone
    QVec3 d23 = vec3_sub(data().states[1], data().states[2]);
    QVec3 b = vec3_add(P1, vec3_scale(Rational(1, 2), d23));
    QVec3 c = vec3_sub(P1, vec3_scale(Rational(1, 2), d23));
    CHECK_THROWS_AS(split(tree, P1, b, c, Rational(1, 2), Rational(1), certified()), IllegalSplit);

    // coincident endpoints
    CHECK_THROWS_AS(split(tree, P1, P1, P1, Rational(1, 2), Rational(1), certified()), IllegalSplit);

    // barycenter violated
    QVec3 leg = data().configs[0].c[1];
    CHECK_THROWS_AS(split(tree, P1, vec3_add(P1, leg), vec3_sub(P1, leg), Rational(1, 3),
                          Rational(1), certified()),
                    IllegalSplit);

    // unknown leaf
    CHECK_THROWS_AS(split(tree, data().states[3], vec3_add(data().states[3], leg),
                          vec3_sub(data().states[3], leg), Rational(1, 2), Rational(1), certified()),
                    UnknownLeaf);

    // bad mass fraction
    CHECK_THROWS_AS(split(tree, P1, vec3_add(P1, leg), vec3_sub(P1, leg), Rational(1, 2),
                          Rational(0), certified()),
                    IllegalSplit);
}

TEST_CASE("rebalance implements the stated formulas") {
    RebalanceResult r = rebalance(Rational(1, 2), Rational(2, 5), Rational(3, 5), Rational(1, 5));
    CHECK(r.t == Rational(1, 2));
    CHECK(r.mu == Rational(5, 8));
    CHECK(r.a_shift == Rational(1, 5));

    CHECK_THROWS_AS(rebalance(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 5)),
                    InfeasibleFractions);
    CHECK_THROWS_AS(rebalance(Rational(1, 2), Rational(2, 5), Rational(3, 5), Rational(3, 5)),
                    InfeasibleFractions);

    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 50) {
        Rational lambda = rand_rational(rng, 1, 11, 12);
        Rational f1 = rand_rational(rng, 0, 11, 12);
        Rational f2 = rand_rational(rng, 1, 12, 12);
        Rational s = rand_rational(rng, 1, 11, 12);
        if (!(lambda > 0 && lambda < 1 && f1 >= 0 && f1 < lambda && lambda <= f2 && f2 <= 1))
            continue;
        if (!(s > 0 && s < 1 - lambda)) continue;
        RebalanceResult rr = rebalance(lambda, f1, f2, s);
        CHECK(rr.t * f1 + (1 - rr.t) * f2 == lambda); // exact identity
        CHECK(rr.mu > 0);
        CHECK(rr.mu < 1);
        ++done;
    }
}

TEST_CASE("refine_field honors the defect budget and re-laminates exactly") {
    QVec2 xi0{Rational(-14), Rational(5)};
    QVec3 a{Rational(0), Rational(0), Rational(0)};
    QVec3 b = data().configs[0].c[0];
    Rect unit(Rational(0), Rational(0), Rational(1), Rational(1));
    auto field = simple_laminate_field(family(), a, b, Rational(1, 2), xi0, Rational(1), unit,
                                       basis());

    QVec3 leg = data().configs[0].c[1];
    QVec3 bp = vec3_add(b, leg);
    QVec3 bm = vec3_sub(b, leg);
    Rational alpha(1, 2);
    RefineResult r = refine_field(field, b, bp, bm, Rational(1, 2), alpha, certified(),
                                  data().nodes[1], Rational(1, 5), basis());

    Rational target_area(0);
    for (const Slab& s : field.slabs)
        if (vec3_is_zero(vec3_sub(s.value, b)))
            target_area += polygon_area(clip_rect_to_strip(unit, xi0, field.eps, s.t_lo, s.t_hi));
    CHECK(r.defect_area <= alpha * target_area);

    auto fractions = volume_fractions(r.field);
    Rational total(0);
    for (const auto& [key, area] : fractions) total += area;
    CHECK(total == Rational(1));
    CHECK(fractions.count(vec3_to_string(bp)) == 1);
    CHECK(fractions.count(vec3_to_string(bm)) == 1);
    // untouched a-slabs keep their area
    CHECK(fractions.at(vec3_to_string(a)) >= Rational(1, 3));

    // sub-fields keep the exactness invariant
    bool checked = false;
    for (const Slab& s : r.field.slabs)
        for (const auto& patch : s.patches) {
            for (const Slab& sub : patch.field->slabs)
                CHECK(vec3_is_zero(vec3_sub(apply_B_to_poly(family(), sub.V), sub.value)));
            checked = true;
            break;
        }
    CHECK(checked);

    // splitting along an excluded direction is illegal here too
    QVec3 d23 = vec3_sub(data().states[1], data().states[2]);
    CHECK_THROWS_AS(refine_field(field, b, vec3_add(b, d23), vec3_sub(b, d23), Rational(1, 2),
                                 alpha, certified(), data().nodes[1], Rational(1, 5), basis()),
                    IllegalSplit);
}
