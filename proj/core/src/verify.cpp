#include "fourstate/verify.hpp"

#include "fourstate/errors.hpp"

namespace fourstate {

namespace {

constexpr int kDegree = 11;

const QVec3& leg_for_row(const LargeT4Data& data, int r) {
    return data.configs[static_cast<std::size_t>(r / 4)].c[static_cast<std::size_t>(r % 4)];
}

} // namespace

InterpolationSystem build_interpolation_system(const LargeT4Data& data) {
    InterpolationSystem sys;
    sys.nodes = data.nodes;
    for (int r = 0; r < 12; ++r) {
        const QVec2& n = data.nodes[static_cast<std::size_t>(r)];
        std::vector<Rational> xp(kDegree + 1), yp(kDegree + 1);
        xp[0] = 1;
        yp[0] = 1;
        for (int k = 1; k <= kDegree; ++k) {
            xp[static_cast<std::size_t>(k)] = xp[static_cast<std::size_t>(k - 1)] * n[0];
            yp[static_cast<std::size_t>(k)] = yp[static_cast<std::size_t>(k - 1)] * n[1];
        }
        for (int s = 0; s <= kDegree; ++s)
            sys.monomial_matrix(r, s) =
                xp[static_cast<std::size_t>(kDegree - s)] * yp[static_cast<std::size_t>(s)];
        const QVec3& c = leg_for_row(data, r);
        for (int j = 0; j < 3; ++j) sys.rhs(r, j) = c[static_cast<std::size_t>(j)];
    }
    return sys;
}

OperatorFamily solve_coefficients(const LargeT4Data& data) {
    InterpolationSystem sys = build_interpolation_system(data);
    QMatrix C(12, 3);
    try {
        C = solve_linear(sys.monomial_matrix, sys.rhs);
    } catch (const SingularMatrix&) {
        throw SingularInterpolation();
    }
    std::array<std::vector<Rational>, 3> coeffs;
    for (int j = 0; j < 3; ++j) {
        coeffs[static_cast<std::size_t>(j)].resize(kDegree + 1);
        for (int s = 0; s <= kDegree; ++s) coeffs[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] = C(s, j);
    }
    OperatorFamily F(HomPoly2(kDegree, coeffs[0]), HomPoly2(kDegree, coeffs[1]),
                     HomPoly2(kDegree, coeffs[2]));
    // All 36 scalar equations must hold with zero residual.
    for (int r = 0; r < 12; ++r) {
        QVec3 b = symbol_B(F, data.nodes[static_cast<std::size_t>(r)]);
        if (!vec3_is_zero(vec3_sub(b, leg_for_row(data, r))))
            throw MathError("interpolation residual nonzero");
    }
    return F;
}

namespace {

std::array<int, 4> inverse_perm(const std::array<int, 4>& perm) {
    std::array<int, 4> inv{};
    for (int i = 0; i < 4; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)] = i + 1;
    return inv;
}

// Coprimality of two dehomogenized polynomials, with the GCD verdict
// cross-validated by the Sylvester resultant.
void add_coprime_check(Report& rep, const std::string& name, const UniPoly& A, const UniPoly& B) {
    if (A.is_zero() || B.is_zero()) {
        rep.add(name, false, {"zero polynomial"});
        return;
    }
    UniPoly g = gcd_uni(A, B);
    bool coprime = g.is_constant();
    if (A.degree() < 1 || B.degree() < 1) {
        // Constant nonzero polynomial: trivially coprime, no resultant defined.
        rep.add(name, coprime, {"deg(gcd)=" + std::to_string(g.degree()), "constant input"});
        return;
    }
    Rational res = resultant(A, B);
    bool agree = coprime == !is_zero(res);
    rep.add(name, coprime && agree,
            {"deg(gcd)=" + std::to_string(g.degree()), "resultant=" + to_string(res)});
}

} // namespace

Report check_proposition_computer(const OperatorFamily& F, const LargeT4Data& data) {
    Report rep("structural certificate");

    // (1) chain equations per permutation.
    for (int i = 0; i < 3; ++i) {
        ChainVerdict cv = verify_t4_chain(data.configs[static_cast<std::size_t>(i)]);
        rep.add("chain_sigma" + std::to_string(i + 1), cv.ok && !cv.degenerate);
    }

    // (2) per-state leg independence.
    for (int l = 0; l < 4; ++l) {
        QMatrix M(3, 3);
        for (int i = 0; i < 3; ++i) {
            auto inv = inverse_perm(data.perms[static_cast<std::size_t>(i)]);
            const QVec3& c =
                data.configs[static_cast<std::size_t>(i)].c[static_cast<std::size_t>(inv[static_cast<std::size_t>(l)] - 1)];
            for (int comp = 0; comp < 3; ++comp) M(comp, i) = c[static_cast<std::size_t>(comp)];
        }
        Rational det = determinant(M);
        rep.add("independence_det_state" + std::to_string(l + 1), !is_zero(det), {to_string(det)});
    }

    // (coeff) leading x^d coefficients of q_i and q_i + q_j.
    for (int i = 0; i < 3; ++i)
        rep.add("leading_coeff_q" + std::to_string(i + 1), !is_zero(F.q[static_cast<std::size_t>(i)].coeff(0)),
                {to_string(F.q[static_cast<std::size_t>(i)].coeff(0))});
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Rational lead = F.q[static_cast<std::size_t>(i)].coeff(0) + F.q[static_cast<std::size_t>(j)].coeff(0);
            rep.add("leading_coeff_q" + std::to_string(i + 1) + "_plus_q" + std::to_string(j + 1),
                    !is_zero(lead), {to_string(lead)});
        }

    std::array<UniPoly, 3> Q{F.q[0].dehomogenize(), F.q[1].dehomogenize(), F.q[2].dehomogenize()};

    // (3) pairwise coprimality of the Q_i.
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            add_coprime_check(rep, "coprime_Q" + std::to_string(i + 1) + "_Q" + std::to_string(j + 1),
                              Q[static_cast<std::size_t>(i)], Q[static_cast<std::size_t>(j)]);

    // (4) q_k coprime with r_k = q_i + q_j ({i,j,k} = {1,2,3}).
    for (int k = 0; k < 3; ++k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        UniPoly R = (F.q[static_cast<std::size_t>(i)] + F.q[static_cast<std::size_t>(j)]).dehomogenize();
        add_coprime_check(rep, "coprime_Q" + std::to_string(k + 1) + "_R" + std::to_string(k + 1),
                          Q[static_cast<std::size_t>(k)], R);
    }

    // Node consistency of the interpolation equations.
    for (int r = 0; r < 12; ++r) {
        QVec3 b = symbol_B(F, data.nodes[static_cast<std::size_t>(r)]);
        rep.add("node_consistency_" + std::to_string(r + 1),
                vec3_is_zero(vec3_sub(b, leg_for_row(data, r))), {vec3_to_string(b)});
    }

    return rep;
}

Report check_states_excluded(const CertifiedFamily& CF, const std::array<QVec3, 4>& states) {
    CF.require_certified();
    Report rep("state-difference exclusion");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            QVec3 diff = vec3_sub(states[static_cast<std::size_t>(i)], states[static_cast<std::size_t>(j)]);
            WaveConeVerdict wv = wave_cone_member(CF, diff);
            std::string name = "excluded_a" + std::to_string(i + 1) + "_a" + std::to_string(j + 1);
            if (wv.member && vec3_is_zero(diff))
                rep.add_status(name, CheckStatus::ExpectedMember, {wv.certificate});
            else
                rep.add(name, !wv.member, {vec3_to_string(diff), wv.certificate});
        }
    return rep;
}

namespace {

// Columns of componentwise partial derivatives of the symbol.
QVec3 partial_symbol(const std::array<HomPoly2, 3>& dq, const QVec2& xi) {
    return {dq[0].eval(xi), dq[1].eval(xi), dq[2].eval(xi)};
}

void set_column(QMatrix& M, int col, const QVec3& v) {
    for (int i = 0; i < 3; ++i) M(i, col) = v[static_cast<std::size_t>(i)];
}

} // namespace

Report imt_certificates(const OperatorFamily& F, const LargeT4Data& data) {
    Report rep("implicit-function-theorem certificates");
    rep.set_header("v interpreted as the symbol column (q1,q2,q3)");

    std::array<HomPoly2, 3> dx{F.q[0].partial(Axis::X), F.q[1].partial(Axis::X), F.q[2].partial(Axis::X)};
    std::array<HomPoly2, 3> dy{F.q[0].partial(Axis::Y), F.q[1].partial(Axis::Y), F.q[2].partial(Axis::Y)};

    for (int i = 0; i < 3; ++i) {
        std::array<QVec2, 4> n;
        for (int l = 0; l < 4; ++l) n[static_cast<std::size_t>(l)] = data.nodes[static_cast<std::size_t>(node_index(i, l))];
        std::array<QVec3, 4> d1, d2, v;
        for (int l = 0; l < 4; ++l) {
            d1[static_cast<std::size_t>(l)] = partial_symbol(dx, n[static_cast<std::size_t>(l)]);
            d2[static_cast<std::size_t>(l)] = partial_symbol(dy, n[static_cast<std::size_t>(l)]);
            v[static_cast<std::size_t>(l)] = symbol_B(F, n[static_cast<std::size_t>(l)]);
        }

        // Dependency block in the variables (xi6, xi7, xi8).
        QMatrix J_dep(3, 3);
        set_column(J_dep, 0, d2[2]);
        set_column(J_dep, 1, d1[3]);
        set_column(J_dep, 2, d2[3]);
        Rational det_dep = determinant(J_dep);
        if (is_zero(det_dep)) throw SingularDependency();
        rep.add("J_dep_det_sigma" + std::to_string(i + 1), true, {to_string(det_dep)});

        QMatrix J_ind(3, 5);
        set_column(J_ind, 0, d1[0]);
        set_column(J_ind, 1, d2[0]);
        set_column(J_ind, 2, d1[1]);
        set_column(J_ind, 3, d2[1]);
        set_column(J_ind, 4, d1[2]);

        // M(row, j) = d(xi6, xi7, xi8)/d(xibar_j), xibar = (xi1..xi5).
        QMatrix M = solve_linear(J_dep, J_ind);
        for (int r = 0; r < 3; ++r)
            for (int cidx = 0; cidx < 5; ++cidx) M(r, cidx) = -M(r, cidx);

        const auto& k = data.configs[static_cast<std::size_t>(i)].k;

        // Total derivatives of each leg with respect to xibar_j.
        auto leg_derivative = [&](int l, int j) -> QVec3 {
            QVec3 out{Rational(0), Rational(0), Rational(0)};
            switch (l) {
                case 0:
                    if (j == 0) out = d1[0];
                    if (j == 1) out = d2[0];
                    break;
                case 1:
                    if (j == 2) out = d1[1];
                    if (j == 3) out = d2[1];
                    break;
                case 2:
                    if (j == 4) out = d1[2];
                    out = vec3_add(out, vec3_scale(M(0, j), d2[2]));
                    break;
                case 3:
                    out = vec3_add(vec3_scale(M(1, j), d1[3]), vec3_scale(M(2, j), d2[3]));
                    break;
            }
            return out;
        };

        // Unknown ordering (p1,p2,p3, k1..k4, xibar1..xibar5).
        QMatrix DF(12, 12);
        for (int l = 0; l < 4; ++l) {
            for (int comp = 0; comp < 3; ++comp) {
                int row = l * 3 + comp;
                DF(row, comp) = 1; // dF_l/dp
                DF(row, 3 + l) = v[static_cast<std::size_t>(l)][static_cast<std::size_t>(comp)]; // dF_l/dk_l
                for (int j = 0; j < 5; ++j) {
                    QVec3 acc{Rational(0), Rational(0), Rational(0)};
                    for (int m = 0; m < l; ++m) acc = vec3_add(acc, leg_derivative(m, j));
                    acc = vec3_add(acc, vec3_scale(k[static_cast<std::size_t>(l)], leg_derivative(l, j)));
                    DF(row, 7 + j) = acc[static_cast<std::size_t>(comp)];
                }
            }
        }
        Rational det_DF = determinant(DF);
        rep.add("DF_det_sigma" + std::to_string(i + 1), !is_zero(det_DF), {to_string(det_DF)});
    }
    return rep;
}

Report run_full_verification(const LargeT4Data& data) {
    Report rep("full verification");
    rep.set_header("v interpreted as the symbol column (q1,q2,q3)");

    OperatorFamily F = solve_coefficients(data);
    InterpolationSystem sys = build_interpolation_system(data);
    Rational det = determinant(sys.monomial_matrix);
    rep.add("monomial_matrix_det_nonzero", !is_zero(det), {to_string(det)});

    CertifiedFamily CF = CertifiedFamily::certify(F);
    rep.absorb(CF.certificate(), "rank/");
    rep.add("balanced", is_balanced(F, std::vector<QVec2>(data.nodes.begin(), data.nodes.end())));
    rep.absorb(check_proposition_computer(F, data), "structure/");
    rep.absorb(check_states_excluded(CF, data.states), "exclusion/");
    rep.absorb(verify_large_t4(data, CF), "staircase/");
    rep.absorb(imt_certificates(F, data), "imt/");
    return rep;
}

} // namespace fourstate
