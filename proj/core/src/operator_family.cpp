#include "fourstate/operator_family.hpp"

namespace fourstate {

OperatorFamily::OperatorFamily(HomPoly2 q1, HomPoly2 q2, HomPoly2 q3)
    : q{std::move(q1), std::move(q2), std::move(q3)} {
    if (q[0].degree() != q[1].degree() || q[0].degree() != q[2].degree())
        throw DimensionMismatch("operator family needs equal degrees");
}

QVec3 symbol_B(const OperatorFamily& F, const QVec2& xi) {
    return {F.q[0].eval(xi), F.q[1].eval(xi), F.q[2].eval(xi)};
}

QMatrix symbol_A(const OperatorFamily& F, const QVec2& xi) {
    Rational v1 = F.q[0].eval(xi);
    Rational v2 = F.q[1].eval(xi);
    Rational v3 = F.q[2].eval(xi);
    QMatrix A(3, 3);
    A(0, 1) = -v3; A(0, 2) = v2;
    A(1, 0) = -v3; A(1, 2) = v1;
    A(2, 0) = -v2; A(2, 1) = v1;
    return A;
}

Report constant_rank_certificate(const OperatorFamily& F) {
    Report rep("constant-rank certificate");
    const auto& q = F.q;

    // Entries of A(xi)B(xi): -q3 q2 + q2 q3, -q3 q1 + q1 q3, -q2 q1 + q1 q2.
    bool identity = (q[2] * q[1] - q[1] * q[2]).is_zero() &&
                    (q[2] * q[0] - q[0] * q[2]).is_zero() &&
                    (q[1] * q[0] - q[0] * q[1]).is_zero();
    rep.add("symbolic_identity_AB_zero", identity);

    for (int i = 0; i < 3; ++i) {
        bool nz = !is_zero(q[i].coeff(0));
        rep.add("leading_coeff_q" + std::to_string(i + 1) + "_nonzero", nz,
                {to_string(q[i].coeff(0))});
    }

    std::array<UniPoly, 3> Q{q[0].dehomogenize(), q[1].dehomogenize(), q[2].dehomogenize()};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            std::string name =
                "gcd_Q" + std::to_string(i + 1) + "_Q" + std::to_string(j + 1) + "_constant";
            if (Q[i].is_zero() && Q[j].is_zero()) {
                rep.add(name, false, {"both zero"});
                continue;
            }
            UniPoly g = gcd_uni(Q[i], Q[j]);
            rep.add(name, g.is_constant(), {"deg " + std::to_string(g.degree())});
        }
    return rep;
}

CertifiedFamily CertifiedFamily::certify(const OperatorFamily& F) {
    return CertifiedFamily(F, constant_rank_certificate(F));
}

void CertifiedFamily::require_certified() const {
    if (!certified()) throw PreconditionUnverified();
}

namespace {

// q_i v_j - q_j v_i for (i,j) in {(1,2),(1,3),(2,3)}.
std::array<HomPoly2, 3> cross_polynomials(const OperatorFamily& F, const QVec3& v) {
    return {F.q[0].scaled(v[1]) - F.q[1].scaled(v[0]),
            F.q[0].scaled(v[2]) - F.q[2].scaled(v[0]),
            F.q[1].scaled(v[2]) - F.q[2].scaled(v[1])};
}

// Primitive integer direction with positive first nonzero coordinate.
QVec2 normalize_direction(const Rational& x, const Rational& y) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
    Rational sx = x * Rational(l);
    Rational sy = y * Rational(l);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), sx.get_num().get_mpz_t(), sy.get_num().get_mpz_t());
    if (sgn(g) != 0) {
        sx /= Rational(g);
        sy /= Rational(g);
    }
    Rational lead = !is_zero(sx) ? sx : sy;
    if (sgn(lead) < 0) {
        sx = -sx;
        sy = -sy;
    }
    return {sx, sy};
}

} // namespace

WaveConeVerdict wave_cone_member(const CertifiedFamily& CF, const QVec3& v) {
    CF.require_certified();
    const OperatorFamily& F = CF.family();

    if (vec3_is_zero(v))
        return {true, std::nullopt, "zero vector lies in every symbol kernel"};

    auto cross = cross_polynomials(F, v);
    static const char* names[3] = {"g12", "g13", "g23"};

    std::vector<UniPoly> G;
    std::string used;
    bool all_leading_zero = true;
    for (int k = 0; k < 3; ++k) {
        if (cross[static_cast<std::size_t>(k)].is_zero()) continue;
        if (!is_zero(cross[static_cast<std::size_t>(k)].coeff(0))) all_leading_zero = false;
        G.push_back(cross[static_cast<std::size_t>(k)].dehomogenize());
        if (!used.empty()) used += ",";
        used += names[k];
    }

    if (G.empty())
        return {true, std::nullopt, "all cross polynomials vanish identically (v parallel everywhere)"};

    if (all_leading_zero) {
        // Common zero in the y = 0 direction.
        return {true, QVec2{Rational(1), Rational(0)},
                "all nonzero cross polynomials have zero x^d coefficient"};
    }

    UniPoly g = G[0];
    for (std::size_t k = 1; k < G.size() && !g.is_constant(); ++k) g = gcd_uni(g, G[k]);

    if (g.is_constant())
        return {false, std::nullopt,
                "gcd of dehomogenized cross polynomials {" + used +
                    "} is constant and their x^d coefficients do not all vanish"};

    WaveConeVerdict verdict;
    verdict.member = true;
    verdict.certificate =
        "gcd of dehomogenized cross polynomials {" + used + "} has degree " +
        std::to_string(g.degree());
    if (g.degree() == 1) {
        // monic z + c: root -c, direction (-c, 1).
        verdict.witness_direction = normalize_direction(-g.coeff(0) / g.coeff(1), Rational(1));
    }
    return verdict;
}

bool is_balanced(const OperatorFamily& F, const std::vector<QVec2>& samples) {
    if (samples.empty()) throw MathError("balancedness check needs samples");
    QMatrix S(3, static_cast<int>(samples.size()));
    for (std::size_t j = 0; j < samples.size(); ++j) {
        QVec3 b = symbol_B(F, samples[j]);
        for (int i = 0; i < 3; ++i) S(i, static_cast<int>(j)) = b[static_cast<std::size_t>(i)];
    }
    return rank(S) == 3;
}

namespace {
Rational factorial(int n) {
    Rational f(1);
    for (int k = 2; k <= n; ++k) f *= Rational(k);
    return f;
}
} // namespace

QVec3 apply_B_to_poly(const OperatorFamily& F, const BiPoly& P) {
    const int d = F.degree();
    if (P.total_degree() > d) throw DegreeTooHigh();
    // Only the top-degree coefficients survive order-d differentiation:
    // result_j = sum_s q_j[s] * (d-s)! s! * [P]_{x^{d-s} y^s}.
    QVec3 out{Rational(0), Rational(0), Rational(0)};
    for (int s = 0; s <= d; ++s) {
        const Rational& p = P.coeff(d - s, s);
        if (is_zero(p)) continue;
        Rational w = factorial(d - s) * factorial(s) * p;
        for (int j = 0; j < 3; ++j) out[static_cast<std::size_t>(j)] += F.q[static_cast<std::size_t>(j)].coeff(s) * w;
    }
    return out;
}

BiPoly node_potential_polynomial(int degree, const QVec2& xi) {
    BiPoly P(degree);
    Rational xpow(1);
    std::vector<Rational> ypow(static_cast<std::size_t>(degree) + 1);
    ypow[0] = 1;
    for (int k = 1; k <= degree; ++k) ypow[static_cast<std::size_t>(k)] = ypow[static_cast<std::size_t>(k - 1)] * xi[1];
    std::vector<Rational> xp(static_cast<std::size_t>(degree) + 1);
    xp[0] = 1;
    for (int k = 1; k <= degree; ++k) xp[static_cast<std::size_t>(k)] = xp[static_cast<std::size_t>(k - 1)] * xi[0];
    for (int s = 0; s <= degree; ++s) {
        // coefficient of x^{d-s} y^s: xi1^{d-s} xi2^s / ((d-s)! s!)
        P.set_coeff(degree - s, s,
                    xp[static_cast<std::size_t>(degree - s)] * ypow[static_cast<std::size_t>(s)] /
                        (factorial(degree - s) * factorial(s)));
    }
    return P;
}

BiPoly potential_polynomial_for_constant(const OperatorFamily& F, const QVec3& e,
                                         const std::array<QVec2, 3>& basis) {
    const int d = F.degree();
    QMatrix M(3, 3);
    for (int j = 0; j < 3; ++j) {
        QVec3 b = symbol_B(F, basis[static_cast<std::size_t>(j)]);
        for (int i = 0; i < 3; ++i) M(i, j) = b[static_cast<std::size_t>(i)];
    }
    QMatrix rhs(3, 1);
    for (int i = 0; i < 3; ++i) rhs(i, 0) = e[static_cast<std::size_t>(i)];
    QMatrix t(3, 1);
    try {
        t = solve_linear(M, rhs);
    } catch (const SingularMatrix&) {
        throw DependentBasis();
    }
    BiPoly P(d);
    for (int j = 0; j < 3; ++j) {
        if (is_zero(t(j, 0))) continue;
        P = P + node_potential_polynomial(d, basis[static_cast<std::size_t>(j)]).scaled(t(j, 0));
    }
    return P;
}

} // namespace fourstate
