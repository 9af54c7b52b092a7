#include "fourstate/dataset.hpp"

namespace fourstate {

namespace {

QVec3 v3(long a, long b, long c, long den) {
    QVec3 v{Rational(a, den), Rational(b, den), Rational(c, den)};
    for (auto& r : v) r.canonicalize();
    return v;
}

QVec2 v2(long a, long b) { return {Rational(a), Rational(b)}; }

} // namespace

LargeT4Data reference_dataset() {
    LargeT4Data d;
    d.states = {v3(0, 0, 0, 1), v3(1, 0, 0, 1), v3(0, 1, 0, 1), v3(0, 0, 1, 1)};
    d.perms = {{{1, 2, 3, 4}, {4, 1, 2, 3}, {3, 4, 1, 2}}};

    std::array<QVec3, 3> p = {v3(2, 4, 8, 15), v3(18, 27, 8, 65), v3(64, 27, 36, 175)};
    std::array<std::array<QVec3, 4>, 3> c = {{
        {v3(-1, -2, -4, 15), v3(7, -1, -2, 15), v3(-4, 7, -1, 15), v3(-2, -4, 7, 15)},
        {v3(-6, -9, 19, 65), v3(-4, -6, -9, 65), v3(19, -4, -6, 65), v3(-9, 19, -4, 65)},
        {v3(-16, 37, -9, 175), v3(-12, -16, 37, 175), v3(-9, -12, -16, 175), v3(37, -9, -12, 175)},
    }};

    for (int i = 0; i < 3; ++i) {
        T4Config& cfg = d.configs[static_cast<std::size_t>(i)];
        for (int l = 0; l < 4; ++l) {
            int state = d.perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] - 1;
            cfg.points[static_cast<std::size_t>(l)] = d.states[static_cast<std::size_t>(state)];
            cfg.k[static_cast<std::size_t>(l)] = Rational(i + 2);
        }
        cfg.p = p[static_cast<std::size_t>(i)];
        cfg.c = c[static_cast<std::size_t>(i)];
    }

    d.nodes = {v2(-14, 5),  v2(19, -8), v2(11, -14), v2(-4, -17),
               v2(-7, -3),  v2(6, 16),  v2(2, -17),  v2(-18, 2),
               v2(-7, -14), v2(-9, 19), v2(6, 18),   v2(-20, -9)};
    return d;
}

} // namespace fourstate
