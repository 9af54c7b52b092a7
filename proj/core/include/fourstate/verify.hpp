#pragma once

#include "fourstate/operator_family.hpp"
#include "fourstate/t4.hpp"

namespace fourstate {

// The 12x12 node/monomial system whose three right-hand-side columns are the
// leg components; row r is the degree-11 monomial vector of node r.
struct InterpolationSystem {
    std::array<QVec2, 12> nodes;
    QMatrix monomial_matrix; // (r,s) = x_r^{11-s} y_r^s
    QMatrix rhs;             // 12x3, column j = component j of the legs

    InterpolationSystem() : monomial_matrix(12, 12), rhs(12, 3) {}
};

InterpolationSystem build_interpolation_system(const LargeT4Data& data);

// The unique degree-11 triple whose symbol matches every leg at its node.
// Throws SingularInterpolation (e.g. duplicated nodes); the result is
// re-checked against all 36 scalar equations before being returned.
OperatorFamily solve_coefficients(const LargeT4Data& data);

// Structural certificate: chain equations, leg-independence determinants,
// nonzero x^d coefficients of q_i and q_i + q_j, pairwise coprimality of the
// dehomogenized q_i and of q_k with r_k = q_i + q_j (each GCD verdict
// cross-validated by a resultant), node consistency.
Report check_proposition_computer(const OperatorFamily& F, const LargeT4Data& data);

// For each pair i < j: a_i - a_j must lie outside the wave cone. A zero
// difference (equal states) is reported EXPECTED-MEMBER, not FAIL.
// Throws PreconditionUnverified.
Report check_states_excluded(const CertifiedFamily& F, const std::array<QVec3, 4>& states);

// Implicit-function-theorem certificates per permutation: the 3x3 dependency
// Jacobian and the full 12x12 Jacobian in (p, k, xi_1..xi_5) both have nonzero
// determinant. Throws SingularDependency when the 3x3 block is singular.
Report imt_certificates(const OperatorFamily& F, const LargeT4Data& data);

// End-to-end pipeline: solve, certify constant rank and balancedness, run all
// structural and exclusion checks and the Jacobian certificates.
Report run_full_verification(const LargeT4Data& data);

} // namespace fourstate
