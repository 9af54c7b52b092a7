#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fourstate/bipoly.hpp"
#include "fourstate/hompoly.hpp"
#include "fourstate/qmatrix.hpp"
#include "fourstate/report.hpp"

namespace fourstate {

// The triple (q1,q2,q3) of equal-degree homogeneous bivariate polynomials
// that defines the first-order symbol column B(xi) and the 3x3 annihilator
// symbol A(xi).
struct OperatorFamily {
    std::array<HomPoly2, 3> q;

    OperatorFamily(HomPoly2 q1, HomPoly2 q2, HomPoly2 q3);
    int degree() const { return q[0].degree(); }
};

struct WaveConeVerdict {
    bool member = false;
    std::optional<QVec2> witness_direction; // best-effort rational point on a common zero line
    std::string certificate;                // deciding GCD / leading-coefficient facts
};

QVec3 symbol_B(const OperatorFamily& F, const QVec2& xi);
QMatrix symbol_A(const OperatorFamily& F, const QVec2& xi);

// PASS iff the symbolic identity A(xi)B(xi) = 0 holds coefficientwise, every
// q_i has nonzero leading x^d coefficient, and the dehomogenized pairs are
// coprime; together these force rank A(xi) = 2 and Ker A = Im B off the origin.
Report constant_rank_certificate(const OperatorFamily& F);

// Operator family together with its established constant-rank certificate.
// Wave-cone queries require the certificate to have passed.
class CertifiedFamily {
public:
    static CertifiedFamily certify(const OperatorFamily& F);

    const OperatorFamily& family() const { return F_; }
    const Report& certificate() const { return cert_; }
    bool certified() const { return cert_.overall_pass(); }
    void require_certified() const;

private:
    CertifiedFamily(OperatorFamily F, Report cert) : F_(std::move(F)), cert_(std::move(cert)) {}
    OperatorFamily F_;
    Report cert_;
};

// Decides whether v lies in the union of symbol kernels, via the cross
// polynomials q_i v_j - q_j v_i. Throws PreconditionUnverified when the
// certificate failed.
WaveConeVerdict wave_cone_member(const CertifiedFamily& F, const QVec3& v);

// Sufficient certificate: the sampled symbol values span R^3.
bool is_balanced(const OperatorFamily& F, const std::vector<QVec2>& samples);

// The constant vector obtained by applying the order-d operator with symbol B
// to a bivariate polynomial of total degree <= d. Throws DegreeTooHigh.
QVec3 apply_B_to_poly(const OperatorFamily& F, const BiPoly& P);

// Basis polynomial with apply_B(p_xi * a) = B(xi) a: factorially normalized
// monomial bundle for the node xi.
BiPoly node_potential_polynomial(int degree, const QVec2& xi);

// Exact degree-d polynomial P with apply_B_to_poly(F, P) = e, built on three
// nodes with independent symbol values. Throws DependentBasis.
BiPoly potential_polynomial_for_constant(const OperatorFamily& F, const QVec3& e,
                                         const std::array<QVec2, 3>& basis);

} // namespace fourstate
