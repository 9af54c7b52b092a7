#include "fourstate/laminate.hpp"

#include <algorithm>

namespace fourstate {

Profile::Profile(Rational l) : lambda(std::move(l)) {
    if (!(lambda > 0 && lambda < 1)) throw MathError("profile fraction must lie in (0,1)");
}

Rational profile_h(const Profile& P, const Rational& t) {
    Rational f = t - rational_floor(t); // in [0,1)
    Rational low(1 - P.lambda);
    if (f < low) return P.lambda;
    return Rational(-low);
}

namespace {

Rational factorial(int n) {
    Rational f(1);
    for (int k = 2; k <= n; ++k) f *= Rational(k);
    return f;
}

// Breakpoints of h form the lattice {m, m + 1 - lambda : m integer}.
Rational next_breakpoint(const Rational& t, const Rational& lambda) {
    Rational fl = rational_floor(t);
    Rational f = t - fl;
    if (f < 1 - lambda) return Rational(fl + 1 - lambda);
    return Rational(fl + 1);
}

Rational prev_breakpoint(const Rational& t, const Rational& lambda) {
    Rational fl = rational_floor(t);
    Rational f = t - fl;
    if (f > 1 - lambda) return fl + 1 - lambda;
    if (sgn(f) > 0) return fl;
    return fl - lambda; // t is an integer; previous breakpoint is (t-1) + 1 - lambda
}

// Polynomial with derivatives `state` at x (orders 0..k'-1) and constant k'-th
// derivative hv, expanded in the absolute variable.
UniPoly taylor_piece(const std::vector<Rational>& state, const Rational& hv, const Rational& x,
                     int kprime) {
    std::vector<Rational> a(static_cast<std::size_t>(kprime) + 1);
    for (int l = 0; l < kprime; ++l) a[static_cast<std::size_t>(l)] = state[static_cast<std::size_t>(l)] / factorial(l);
    a[static_cast<std::size_t>(kprime)] = hv / factorial(kprime);
    UniPoly base({-x, Rational(1)});
    UniPoly r = UniPoly::constant(a[static_cast<std::size_t>(kprime)]);
    for (int m = kprime - 1; m >= 0; --m) r = r * base + UniPoly::constant(a[static_cast<std::size_t>(m)]);
    return r;
}

std::vector<Rational> derivatives_at(const UniPoly& p, const Rational& x, int kprime) {
    std::vector<Rational> out(static_cast<std::size_t>(kprime));
    UniPoly d = p;
    for (int l = 0; l < kprime; ++l) {
        out[static_cast<std::size_t>(l)] = d.eval(x);
        d = d.derivative();
    }
    return out;
}

} // namespace

namespace {

std::vector<HPiece> compute_pieces(const Profile& P, int kprime, const Rational& t_lo,
                                   const Rational& t_hi) {
    const Rational& lambda = P.lambda;

    std::vector<HPiece> backward, forward;
    std::vector<Rational> state(static_cast<std::size_t>(kprime), Rational(0));

    Rational x(0);
    Rational end = t_hi > 0 ? t_hi : Rational(0);
    while (x < end) {
        Rational nb = next_breakpoint(x, lambda);
        Rational hv = profile_h(P, x);
        UniPoly piece = taylor_piece(state, hv, x, kprime);
        forward.push_back({x, nb, piece, hv});
        state = derivatives_at(piece, nb, kprime);
        x = nb;
    }

    state.assign(static_cast<std::size_t>(kprime), Rational(0));
    x = 0;
    Rational start = t_lo < 0 ? t_lo : Rational(0);
    while (x > start) {
        Rational pb = prev_breakpoint(x, lambda);
        Rational hv = profile_h(P, pb);
        UniPoly piece = taylor_piece(state, hv, x, kprime);
        backward.push_back({pb, x, piece, hv});
        state = derivatives_at(piece, pb, kprime);
        x = pb;
    }

    std::vector<HPiece> out;
    out.reserve(backward.size() + forward.size());
    for (auto it = backward.rbegin(); it != backward.rend(); ++it) out.push_back(*it);
    for (auto& p : forward) out.push_back(std::move(p));
    return out;
}

// Refinement re-laminates thousands of tiny rectangles against the same
// profile, and every piece walk is anchored at t = 0; memoize the computed
// table per (order, lambda) and grow it geometrically.
struct PieceCache {
    Rational lo, hi;
    std::vector<HPiece> pieces;
};

std::map<std::pair<int, std::string>, PieceCache>& piece_cache() {
    static std::map<std::pair<int, std::string>, PieceCache> cache;
    return cache;
}

} // namespace

std::vector<HPiece> antiderivative_pieces(const Profile& P, int kprime, const Rational& t_lo,
                                          const Rational& t_hi) {
    if (kprime < 1) throw MathError("antiderivative order must be >= 1");
    if (t_lo > t_hi) throw MathError("empty interval");

    PieceCache& entry = piece_cache()[{kprime, to_string(P.lambda)}];
    if (entry.pieces.empty() || entry.lo > t_lo || entry.hi < t_hi) {
        Rational lo = rational_floor(std::min(t_lo, entry.pieces.empty() ? t_lo : entry.lo)) - 1;
        Rational hi = -rational_floor(-std::max(t_hi, entry.pieces.empty() ? t_hi : entry.hi)) + 1;
        entry.pieces = compute_pieces(P, kprime, lo, hi);
        entry.lo = lo;
        entry.hi = hi;
    }

    auto first = std::lower_bound(entry.pieces.begin(), entry.pieces.end(), t_lo,
                                  [](const HPiece& p, const Rational& v) { return p.hi < v; });
    std::vector<HPiece> kept;
    for (auto it = first; it != entry.pieces.end() && it->lo <= t_hi; ++it) kept.push_back(*it);
    return kept;
}

Rational antiderivative_H(const Profile& P, int kprime, const Rational& t) {
    auto pieces = antiderivative_pieces(P, kprime, std::min(t, Rational(0)), std::max(t, Rational(0)));
    for (const auto& p : pieces)
        if (t >= p.lo && t <= p.hi) return p.poly.eval(t);
    if (pieces.empty() && is_zero(t)) return Rational(0);
    throw MathError("antiderivative evaluation outside generated pieces");
}

Rect::Rect(Rational ax0, Rational ay0, Rational ax1, Rational ay1)
    : x0(std::move(ax0)), y0(std::move(ay0)), x1(std::move(ax1)), y1(std::move(ay1)) {
    if (!(x0 < x1 && y0 < y1)) throw MathError("empty rectangle");
}

namespace {

// Keep the part of a convex polygon with a*x + b*y + c >= 0.
std::vector<QVec2> clip_half_plane(const std::vector<QVec2>& poly, const Rational& a,
                                   const Rational& b, const Rational& c) {
    std::vector<QVec2> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const QVec2& cur = poly[i];
        const QVec2& nxt = poly[(i + 1) % n];
        Rational gc = a * cur[0] + b * cur[1] + c;
        Rational gn = a * nxt[0] + b * nxt[1] + c;
        bool in_c = sgn(gc) >= 0, in_n = sgn(gn) >= 0;
        if (in_c) out.push_back(cur);
        if (in_c != in_n) {
            Rational t = gc / (gc - gn);
            out.push_back({cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])});
        }
    }
    return out;
}

} // namespace

std::vector<QVec2> clip_rect_to_strip(const Rect& r, const QVec2& xi0, const Rational& eps,
                                      const Rational& t_lo, const Rational& t_hi) {
    std::vector<QVec2> poly{{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}};
    // (x, xi0) - eps*t_lo >= 0 and eps*t_hi - (x, xi0) >= 0.
    poly = clip_half_plane(poly, xi0[0], xi0[1], -eps * t_lo);
    if (poly.empty()) return poly;
    poly = clip_half_plane(poly, -xi0[0], -xi0[1], eps * t_hi);
    return poly;
}

Rational polygon_area(const std::vector<QVec2>& poly) {
    if (poly.size() < 3) return Rational(0);
    Rational twice(0);
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const QVec2& p = poly[i];
        const QVec2& q = poly[(i + 1) % n];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    if (sgn(twice) < 0) twice = -twice;
    return twice / 2;
}

namespace {

Rational pow_rational(const Rational& base, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Scalar c' with symbol_B(F, xi0) * c' = d componentwise.
Rational wave_multiplier(const QVec3& B, const QVec3& d) {
    if (vec3_is_zero(d)) throw NotAWaveDirection();
    int pivot = -1;
    for (int i = 0; i < 3; ++i)
        if (!is_zero(B[static_cast<std::size_t>(i)])) { pivot = i; break; }
    if (pivot < 0) throw NotAWaveDirection();
    Rational cp = d[static_cast<std::size_t>(pivot)] / B[static_cast<std::size_t>(pivot)];
    for (int i = 0; i < 3; ++i)
        if (B[static_cast<std::size_t>(i)] * cp != d[static_cast<std::size_t>(i)]) throw NotAWaveDirection();
    if (is_zero(cp)) throw NotAWaveDirection();
    return cp;
}

} // namespace

PiecewisePolyField simple_laminate_field(const OperatorFamily& F, const QVec3& a, const QVec3& b,
                                         const Rational& lambda, const QVec2& xi0,
                                         const Rational& eps, const Rect& omega,
                                         const std::array<QVec2, 3>& basis) {
    if (!(eps > 0)) throw MathError("scale must be positive");
    Profile P(lambda);
    QVec3 Bxi = symbol_B(F, xi0);
    Rational cprime = wave_multiplier(Bxi, vec3_sub(b, a));

    QVec3 e = vec3_add(vec3_scale(lambda, a), vec3_scale(1 - lambda, b));
    BiPoly q_e = potential_polynomial_for_constant(F, e, basis);

    // Range of t = (x, xi0)/eps over the rectangle corners.
    std::array<Rational, 4> corner_t = {
        (xi0[0] * omega.x0 + xi0[1] * omega.y0) / eps,
        (xi0[0] * omega.x1 + xi0[1] * omega.y0) / eps,
        (xi0[0] * omega.x1 + xi0[1] * omega.y1) / eps,
        (xi0[0] * omega.x0 + xi0[1] * omega.y1) / eps,
    };
    Rational t_min = *std::min_element(corner_t.begin(), corner_t.end());
    Rational t_max = *std::max_element(corner_t.begin(), corner_t.end());

    const int d = F.degree();
    Rational scale = pow_rational(eps, d) * cprime;

    PiecewisePolyField field{omega, xi0, eps, lambda, a, b, {}};
    for (auto& piece : antiderivative_pieces(P, d, t_min, t_max)) {
        BiPoly V = q_e + BiPoly::compose_linear(piece.poly, xi0[0] / eps, xi0[1] / eps).scaled(scale);
        QVec3 value = piece.h_value == lambda ? b : a;
        field.slabs.emplace_back(piece.lo, piece.hi, value, std::move(V));
    }
    return field;
}

QVec3 field_value(const PiecewisePolyField& field, const Rational& x, const Rational& y) {
    Rational t = (field.xi0[0] * x + field.xi0[1] * y) / field.eps;
    for (std::size_t i = 0; i < field.slabs.size(); ++i) {
        const Slab& s = field.slabs[i];
        bool last = i + 1 == field.slabs.size();
        if (t >= s.t_lo && (t < s.t_hi || (last && t <= s.t_hi))) {
            for (const auto& patch : s.patches)
                if (patch.rect.contains(x, y)) return field_value(*patch.field, x, y);
            return s.value;
        }
    }
    throw MathError("point outside field");
}

std::map<std::string, Rational> volume_fractions(const PiecewisePolyField& field) {
    std::map<std::string, Rational> out;
    for (const Slab& s : field.slabs) {
        Rational area = polygon_area(clip_rect_to_strip(field.omega, field.xi0, field.eps, s.t_lo, s.t_hi));
        Rational covered(0);
        for (const auto& patch : s.patches) {
            for (const auto& [key, sub_area] : volume_fractions(*patch.field)) out[key] += sub_area;
            covered += patch.rect.area();
        }
        Rational remnant = area - covered;
        if (!is_zero(remnant)) out[vec3_to_string(s.value)] += remnant;
    }
    return out;
}

LaminateTree LaminateTree::dirac(const QVec3& value) {
    LaminateTree t;
    t.root = value;
    t.leaves.push_back({value, Rational(1)});
    return t;
}

QVec3 LaminateTree::barycenter() const {
    QVec3 b{Rational(0), Rational(0), Rational(0)};
    for (const auto& leaf : leaves) b = vec3_add(b, vec3_scale(leaf.weight, leaf.value));
    return b;
}

namespace {

void require_legal_split(const CertifiedFamily& F, const QVec3& parent, const QVec3& b,
                         const QVec3& c, const Rational& s) {
    if (!(s > 0 && s < 1)) throw IllegalSplit("split parameter outside (0,1)");
    QVec3 dir = vec3_sub(b, c);
    if (vec3_is_zero(dir)) throw IllegalSplit("endpoints coincide");
    QVec3 combo = vec3_add(vec3_scale(s, b), vec3_scale(1 - s, c));
    if (!vec3_is_zero(vec3_sub(combo, parent))) throw IllegalSplit("parent not on the segment");
    if (!wave_cone_member(F, dir).member) throw IllegalSplit("direction outside the wave cone");
}

void add_mass(std::vector<LaminateLeaf>& leaves, const QVec3& value, const Rational& w) {
    for (auto& leaf : leaves)
        if (leaf.value == value) {
            leaf.weight += w;
            return;
        }
    leaves.push_back({value, w});
}

} // namespace

LaminateTree split(const LaminateTree& tree, const QVec3& leaf_value, const QVec3& b,
                   const QVec3& c, const Rational& s, const Rational& lambda_split,
                   const CertifiedFamily& F) {
    if (!(lambda_split > 0 && lambda_split <= 1)) throw IllegalSplit("mass fraction outside (0,1]");
    require_legal_split(F, leaf_value, b, c, s);

    LaminateTree out = tree;
    LaminateLeaf* target = nullptr;
    for (auto& leaf : out.leaves)
        if (leaf.value == leaf_value) { target = &leaf; break; }
    if (!target) throw UnknownLeaf();

    Rational moved = lambda_split * target->weight;
    target->weight -= moved;
    add_mass(out.leaves, b, moved * s);
    add_mass(out.leaves, c, moved * (1 - s));
    std::erase_if(out.leaves, [](const LaminateLeaf& l) { return is_zero(l.weight); });
    out.splits.push_back({leaf_value, b, c, s, lambda_split});
    return out;
}

RebalanceResult rebalance(const Rational& lambda, const Rational& f1, const Rational& f2,
                          const Rational& s) {
    if (!(f1 < lambda && lambda <= f2 && f1 != f2)) throw InfeasibleFractions();
    if (!(s > 0 && s < 1 - lambda)) throw InfeasibleFractions();
    RebalanceResult r;
    r.a_shift = s;
    r.mu = lambda / (1 - s);
    r.t = (f2 - lambda) / (f2 - f1);
    return r;
}

namespace {

// [y_lo, y_hi] admissible at abscissa x inside both the rectangle and the
// strip eps*t_lo <= xi0.x <= eps*t_hi; false when empty.
bool y_range_at(const Rect& omega, const QVec2& xi0, const Rational& eps, const Rational& t_lo,
                const Rational& t_hi, const Rational& x, Rational& y_lo, Rational& y_hi) {
    y_lo = omega.y0;
    y_hi = omega.y1;
    Rational lin = xi0[0] * x;
    if (is_zero(xi0[1])) return lin >= eps * t_lo && lin <= eps * t_hi;
    Rational lo = (eps * t_lo - lin) / xi0[1];
    Rational hi = (eps * t_hi - lin) / xi0[1];
    if (sgn(xi0[1]) < 0) std::swap(lo, hi);
    y_lo = std::max(y_lo, lo);
    y_hi = std::min(y_hi, hi);
    return y_lo < y_hi;
}

} // namespace

RefineResult refine_field(const PiecewisePolyField& field, const QVec3& target_value,
                          const QVec3& b, const QVec3& c, const Rational& s,
                          const Rational& alpha, const CertifiedFamily& F, const QVec2& xi0p,
                          const Rational& epsp, const std::array<QVec2, 3>& basis) {
    if (!(alpha > 0 && alpha < 1)) throw MathError("coverage budget must lie in (0,1)");
    require_legal_split(F, target_value, b, c, s);

    RefineResult result{field, Rational(0)};
    for (Slab& slab : result.field.slabs) {
        if (!vec3_is_zero(vec3_sub(slab.value, target_value))) continue;
        auto poly = clip_rect_to_strip(field.omega, field.xi0, field.eps, slab.t_lo, slab.t_hi);
        Rational slab_area = polygon_area(poly);
        if (is_zero(slab_area)) continue;

        Rational xmin = poly[0][0], xmax = poly[0][0];
        for (const auto& v : poly) {
            xmin = std::min(xmin, v[0]);
            xmax = std::max(xmax, v[0]);
        }

        // Per-column inner rectangles; halve the column width until the cover
        // captures at least (1-alpha) of the slab.
        std::vector<Rect> rects;
        Rational covered(0);
        int ncols = 2;
        for (int attempt = 0; attempt < 30; ++attempt) {
            rects.clear();
            covered = 0;
            Rational w = (xmax - xmin) / ncols;
            for (int i = 0; i < ncols; ++i) {
                Rational cx0 = xmin + w * i;
                Rational cx1 = cx0 + w;
                Rational lo0, hi0, lo1, hi1;
                if (!y_range_at(field.omega, field.xi0, field.eps, slab.t_lo, slab.t_hi, cx0, lo0, hi0))
                    continue;
                if (!y_range_at(field.omega, field.xi0, field.eps, slab.t_lo, slab.t_hi, cx1, lo1, hi1))
                    continue;
                Rational y_lo = std::max(lo0, lo1);
                Rational y_hi = std::min(hi0, hi1);
                if (!(y_lo < y_hi)) continue;
                rects.emplace_back(cx0, y_lo, cx1, y_hi);
                covered += rects.back().area();
            }
            if (covered >= (1 - alpha) * slab_area) break;
            ncols *= 2;
        }
        if (covered < (1 - alpha) * slab_area) throw MathError("coverage budget not reached");

        for (const Rect& r : rects) {
            auto sub = std::make_shared<PiecewisePolyField>(
                simple_laminate_field(F.family(), b, c, s, xi0p, epsp, r, basis));
            slab.patches.push_back({r, std::move(sub)});
        }
        result.defect_area += slab_area - covered;
    }
    return result;
}

} // namespace fourstate
