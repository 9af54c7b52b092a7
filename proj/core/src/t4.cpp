#include "fourstate/t4.hpp"

namespace fourstate {

namespace {

// Left-hand side of chain row l: p + c_1 + ... + c_{l-1} + k_l c_l.
QVec3 chain_value(const T4Config& cfg, int l) {
    QVec3 acc = cfg.p;
    for (int j = 0; j < l; ++j) acc = vec3_add(acc, cfg.c[static_cast<std::size_t>(j)]);
    return vec3_add(acc, vec3_scale(cfg.k[static_cast<std::size_t>(l)], cfg.c[static_cast<std::size_t>(l)]));
}

} // namespace

ChainVerdict verify_t4_chain(const T4Config& cfg) {
    ChainVerdict v;
    for (const auto& ki : cfg.k)
        if (!(ki > 1)) return v;
    for (int l = 0; l < 4; ++l)
        if (!vec3_is_zero(vec3_sub(chain_value(cfg, l), cfg.points[static_cast<std::size_t>(l)]))) return v;
    QVec3 closure = vec3_add(vec3_add(cfg.c[0], cfg.c[1]), vec3_add(cfg.c[2], cfg.c[3]));
    if (!vec3_is_zero(closure)) return v;
    v.ok = true;
    for (const auto& ci : cfg.c)
        if (vec3_is_zero(ci)) v.degenerate = true;
    return v;
}

std::pair<QVec3, std::array<QVec3, 4>> solve_t4(const std::array<QVec3, 4>& points,
                                                const std::array<Rational, 4>& k) {
    for (const auto& ki : k)
        if (!(ki > 1)) throw MathError("overshoot factors must exceed 1");

    // Unknown ordering (p, c1, c2, c3, c4), each a 3-vector; 15 equations:
    // four chain rows plus closure, componentwise.
    QMatrix M(15, 15);
    QMatrix rhs(15, 1);
    auto var = [](int block, int comp) { return block * 3 + comp; };
    for (int l = 0; l < 4; ++l) {
        for (int comp = 0; comp < 3; ++comp) {
            int row = l * 3 + comp;
            M(row, var(0, comp)) = 1;
            for (int j = 0; j < l; ++j) M(row, var(1 + j, comp)) = 1;
            M(row, var(1 + l, comp)) = k[static_cast<std::size_t>(l)];
            rhs(row, 0) = points[static_cast<std::size_t>(l)][static_cast<std::size_t>(comp)];
        }
    }
    for (int comp = 0; comp < 3; ++comp) {
        int row = 12 + comp;
        for (int j = 0; j < 4; ++j) M(row, var(1 + j, comp)) = 1;
    }

    QMatrix X(15, 1);
    try {
        X = solve_linear(M, rhs);
    } catch (const SingularMatrix&) {
        throw SingularSystem();
    }

    QVec3 p{X(0, 0), X(1, 0), X(2, 0)};
    std::array<QVec3, 4> c;
    for (int j = 0; j < 4; ++j)
        for (int comp = 0; comp < 3; ++comp)
            c[static_cast<std::size_t>(j)][static_cast<std::size_t>(comp)] = X(3 + j * 3 + comp, 0);
    return {p, c};
}

namespace {

std::array<int, 4> inverse_perm(const std::array<int, 4>& perm) {
    std::array<int, 4> inv{};
    for (int i = 0; i < 4; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)] = i + 1;
    return inv;
}

} // namespace

Report verify_large_t4(const LargeT4Data& data, const CertifiedFamily& CF) {
    CF.require_certified();
    Report rep("large staircase verification");

    // (a) chain equations per permutation, with point consistency against states.
    for (int i = 0; i < 3; ++i) {
        const T4Config& cfg = data.configs[static_cast<std::size_t>(i)];
        bool points_match = true;
        for (int l = 0; l < 4; ++l) {
            int state = data.perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] - 1;
            if (!vec3_is_zero(vec3_sub(cfg.points[static_cast<std::size_t>(l)],
                                       data.states[static_cast<std::size_t>(state)])))
                points_match = false;
        }
        ChainVerdict cv = verify_t4_chain(cfg);
        rep.add("chain_sigma" + std::to_string(i + 1), points_match && cv.ok && !cv.degenerate);
    }

    // (b) per-state leg independence across the three orderings.
    for (int l = 0; l < 4; ++l) {
        QMatrix M(3, 3);
        bool zero_leg = false;
        for (int i = 0; i < 3; ++i) {
            auto inv = inverse_perm(data.perms[static_cast<std::size_t>(i)]);
            int leg = inv[static_cast<std::size_t>(l)] - 1;
            const QVec3& c = data.configs[static_cast<std::size_t>(i)].c[static_cast<std::size_t>(leg)];
            if (vec3_is_zero(c)) zero_leg = true;
            for (int comp = 0; comp < 3; ++comp) M(comp, i) = c[static_cast<std::size_t>(comp)];
        }
        Rational det = determinant(M);
        rep.add("leg_independence_det_state" + std::to_string(l + 1), !zero_leg && !is_zero(det),
                {to_string(det)});
    }

    // (c) all 12 legs lie in the wave cone.
    for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 4; ++l) {
            const QVec3& c = data.configs[static_cast<std::size_t>(i)].c[static_cast<std::size_t>(l)];
            WaveConeVerdict wv = wave_cone_member(CF, c);
            bool ok = wv.member && !vec3_is_zero(c);
            rep.add("leg_in_cone_sigma" + std::to_string(i + 1) + "_l" + std::to_string(l + 1), ok,
                    {wv.certificate});
        }

    // (d) node consistency: the symbol at each node equals its leg.
    for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 4; ++l) {
            const QVec2& xi = data.nodes[static_cast<std::size_t>(node_index(i, l))];
            QVec3 b = symbol_B(CF.family(), xi);
            const QVec3& c = data.configs[static_cast<std::size_t>(i)].c[static_cast<std::size_t>(l)];
            rep.add("node_consistency_sigma" + std::to_string(i + 1) + "_l" + std::to_string(l + 1),
                    vec3_is_zero(vec3_sub(b, c)), {vec2_to_string(xi), vec3_to_string(b)});
        }

    return rep;
}

} // namespace fourstate
