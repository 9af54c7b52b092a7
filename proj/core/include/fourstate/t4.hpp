#pragma once

#include <array>
#include <utility>

#include "fourstate/operator_family.hpp"
#include "fourstate/rational.hpp"
#include "fourstate/report.hpp"

namespace fourstate {

// Four points on a closed staircase of legs c_1..c_4 with overshoot factors
// k_i > 1 and closing condition c_1+c_2+c_3+c_4 = 0.
struct T4Config {
    std::array<QVec3, 4> points; // a_1..a_4 in chain order
    QVec3 p;
    std::array<QVec3, 4> c;
    std::array<Rational, 4> k;
};

struct ChainVerdict {
    bool ok = false;
    bool degenerate = false; // some leg c_i is zero; the equations may still hold
};

// True iff the four chain equations, the closure row and k_i > 1 all hold
// exactly. Degenerate (zero-leg) configurations satisfy the equations and are
// flagged instead of rejected.
ChainVerdict verify_t4_chain(const T4Config& cfg);

// Solves the 15x15 linear system in (p, c_1..c_4) for fixed points and k.
// Throws SingularSystem; requires each k_i > 1.
std::pair<QVec3, std::array<QVec3, 4>> solve_t4(const std::array<QVec3, 4>& points,
                                                const std::array<Rational, 4>& k);

// A four-point set that is a staircase configuration for three orderings at
// once, with per-state legs independent across orderings, plus the frequency
// nodes realizing each leg as a symbol value.
struct LargeT4Data {
    std::array<QVec3, 4> states;
    std::array<std::array<int, 4>, 3> perms; // values in 1..4
    std::array<T4Config, 3> configs;         // configs[i].points = states permuted by perms[i]
    std::array<QVec2, 12> nodes;             // ordered (perm-major, leg-minor)
};

// Index of the node realizing leg l (0-based) of permutation i (0-based).
inline int node_index(int perm, int leg) { return perm * 4 + leg; }

// Full structural verification: chains per permutation, leg-independence
// determinants, wave-cone membership of all 12 legs, node consistency.
// Throws PreconditionUnverified when the certificate failed.
Report verify_large_t4(const LargeT4Data& data, const CertifiedFamily& F);

} // namespace fourstate
