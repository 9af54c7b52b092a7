#pragma once

#include <map>
#include <memory>
#include <vector>

#include "fourstate/operator_family.hpp"

namespace fourstate {

// Mean-zero 1-periodic two-valued profile: lambda on [0, 1-lambda),
// -(1-lambda) on [1-lambda, 1).
struct Profile {
    Rational lambda;
    explicit Profile(Rational l);
};

Rational profile_h(const Profile& P, const Rational& t);

// One polynomial piece of the k'-fold antiderivative H, valid on [lo, hi).
struct HPiece {
    Rational lo, hi;
    UniPoly poly;     // H restricted to [lo, hi), in the absolute variable t
    Rational h_value; // value of h on the piece
};

// Exact pieces of the unique H with H^(k') = h and H^(l)(0) = 0 for l < k',
// covering [t_lo, t_hi] (either sign). Requires kprime >= 1.
std::vector<HPiece> antiderivative_pieces(const Profile& P, int kprime, const Rational& t_lo,
                                          const Rational& t_hi);

Rational antiderivative_H(const Profile& P, int kprime, const Rational& t);

// Axis-aligned rational rectangle [x0,x1) x [y0,y1).
struct Rect {
    Rational x0, y0, x1, y1;
    Rect(Rational ax0, Rational ay0, Rational ax1, Rational ay1);
    Rational width() const { return x1 - x0; }
    Rational height() const { return y1 - y0; }
    Rational area() const { return width() * height(); }
    bool contains(const Rational& x, const Rational& y) const {
        return x >= x0 && x < x1 && y >= y0 && y < y1;
    }
};

struct PiecewisePolyField;

// A sub-rectangle of a slab re-laminated at a finer scale.
struct RefinedPatch {
    Rect rect;
    std::shared_ptr<const PiecewisePolyField> field;
};

// Strip {eps*t_lo <= (x, xi0) < eps*t_hi} carrying a constant field value and
// the polynomial potential piece realizing it.
struct Slab {
    Rational t_lo, t_hi;
    QVec3 value;
    BiPoly V;
    std::vector<RefinedPatch> patches;

    Slab(Rational lo, Rational hi, QVec3 v, BiPoly piece)
        : t_lo(std::move(lo)), t_hi(std::move(hi)), value(std::move(v)), V(std::move(piece)) {}
};

struct PiecewisePolyField {
    Rect omega;
    QVec2 xi0;
    Rational eps;
    Rational lambda;
    QVec3 value_a, value_b;
    std::vector<Slab> slabs;
};

// Exact one-directional oscillation between a and b at scale eps inside omega.
// Throws NotAWaveDirection unless symbol_B(F, xi0) is a nonzero multiple of
// b - a; q_e is built on the three basis nodes (DependentBasis otherwise).
PiecewisePolyField simple_laminate_field(const OperatorFamily& F, const QVec3& a, const QVec3& b,
                                         const Rational& lambda, const QVec2& xi0,
                                         const Rational& eps, const Rect& omega,
                                         const std::array<QVec2, 3>& basis);

// Field value at a point of omega (descends into refined patches).
QVec3 field_value(const PiecewisePolyField& field, const Rational& x, const Rational& y);

// Exact area per field value, keyed by the value's string rendering.
// Areas sum to |omega|.
std::map<std::string, Rational> volume_fractions(const PiecewisePolyField& field);

// Convex polygon clipping helpers (exact).
std::vector<QVec2> clip_rect_to_strip(const Rect& r, const QVec2& xi0, const Rational& eps,
                                      const Rational& t_lo, const Rational& t_hi);
Rational polygon_area(const std::vector<QVec2>& poly);

// Finite-order laminate: leaf masses obtained from a Dirac mass by elementary
// splittings along wave-cone segments.
struct LaminateLeaf {
    QVec3 value;
    Rational weight;
};

struct SplitRecord {
    QVec3 parent, b, c;
    Rational s, lambda_split;
};

struct LaminateTree {
    QVec3 root;
    std::vector<LaminateLeaf> leaves;
    std::vector<SplitRecord> splits;

    static LaminateTree dirac(const QVec3& value);
    QVec3 barycenter() const;
};

// Moves mass lambda_split * weight(a_i) from the leaf at a_i to b and c in
// proportions s : 1-s. Requires a_i = s b + (1-s) c, b != c, b - c in the
// wave cone, s in (0,1), lambda_split in (0,1]. Throws IllegalSplit /
// UnknownLeaf / PreconditionUnverified.
LaminateTree split(const LaminateTree& tree, const QVec3& leaf_value, const QVec3& b,
                   const QVec3& c, const Rational& s, const Rational& lambda_split,
                   const CertifiedFamily& F);

struct RebalanceResult {
    Rational a_shift; // the coefficient s in a' = a + s(b-a)
    Rational mu;      // lambda/(1-s)
    Rational t;       // solves t f1 + (1-t) f2 = lambda
};

// Fraction surgery: given achieved fractions f1 < lambda <= f2 and a shift
// s in (0, 1-lambda), returns the adjusted parameters. Throws
// InfeasibleFractions.
RebalanceResult rebalance(const Rational& lambda, const Rational& f1, const Rational& f2,
                          const Rational& s);

struct RefineResult {
    PiecewisePolyField field;
    Rational defect_area; // uncovered margin left at the old value
};

// Re-laminates the slabs carrying target_value: each is covered by inner
// rectangles of total area >= (1-alpha) * slab area, each re-laminated between
// b and c (fractions s : 1-s) in direction xi0p at scale epsp; the uncovered
// margin keeps the old value and is charged to defect_area. Requires split
// legality for (target_value, b, c, s). Throws IllegalSplit.
RefineResult refine_field(const PiecewisePolyField& field, const QVec3& target_value,
                          const QVec3& b, const QVec3& c, const Rational& s,
                          const Rational& alpha, const CertifiedFamily& F, const QVec2& xi0p,
                          const Rational& epsp, const std::array<QVec2, 3>& basis);

} // namespace fourstate
