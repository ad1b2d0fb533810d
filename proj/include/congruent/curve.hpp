#pragma once

// The congruent-number curve Y^2 = X^3 - N^2 X, its 2-isogenous partner
// V^2 = U^3 + 4 N^2 U, chord/tangent geometry, the maps between triangles
// and points, the (d, u, v, w) integer representation, and height estimates.

#include <optional>
#include <stdexcept>

#include "congruent/numth.hpp"
#include "congruent/qsearch.hpp"
#include "congruent/triangle.hpp"

namespace congruent {

enum class CurveKind { congruent, isogeny };

// y^2 = x^3 + A x with A = -n^2 (congruent) or A = 4 n^2 (isogeny).
struct Curve {
    CurveKind kind;
    Integer n;

    static Curve congruent_curve(const Integer& n) { return make(CurveKind::congruent, n); }
    static Curve isogeny_curve(const Integer& n) { return make(CurveKind::isogeny, n); }

    Integer coeff_a() const {
        return kind == CurveKind::congruent ? Integer(-n * n) : Integer(4 * n * n);
    }

    bool operator==(const Curve&) const = default;

  private:
    static Curve make(CurveKind kind, const Integer& n) {
        if (n < 1 || !is_squarefree(n))
            throw std::domain_error("curve: n must be positive and squarefree");
        return {kind, n};
    }
};

struct CurvePoint {
    Curve curve;
    bool infinity = false;
    Rational x, y;

    static CurvePoint at_infinity(const Curve& c) { return {c, true, Rational(0), Rational(0)}; }
    static CurvePoint affine(const Curve& c, Rational px, Rational py) {
        return {c, false, std::move(px), std::move(py)};
    }

    bool operator==(const CurvePoint&) const = default;
};

inline bool on_curve(const CurvePoint& pt) {
    if (pt.infinity) return true;
    return pt.y * pt.y == pt.x * pt.x * pt.x + Rational(pt.curve.coeff_a()) * pt.x;
}

// X = N b / (h - a), Y = 2 N^2 / (h - a); h > a so the map is total.
inline CurvePoint triangle_to_point(const Triangle& t) {
    Rational tt = t.h - t.a;
    if (tt <= 0) throw std::invalid_argument("triangle_to_point: need h > a");
    Rational n(t.area_n);
    return CurvePoint::affine(Curve::congruent_curve(t.area_n), n * t.b / tt,
                              2 * n * n / tt);
}

// a = |y/x|, b = 2N/a, h = |(x^2 + N^2)/y|.
inline Triangle point_to_triangle(const CurvePoint& pt) {
    if (pt.infinity || pt.curve.kind != CurveKind::congruent)
        throw std::invalid_argument("point_to_triangle: need an affine congruent-curve point");
    const Integer& n = pt.curve.n;
    if (pt.x == 0 || pt.y == 0 || pt.x == Rational(n) || pt.x == Rational(-n))
        throw std::invalid_argument("point_to_triangle: 2-torsion point has no triangle");
    Rational a = abs(pt.y / pt.x);
    Rational b = 2 * Rational(n) / a;
    Rational h = abs((pt.x * pt.x + Rational(n * n)) / pt.y);
    return {a, b, h, n};
}

inline CurvePoint negate(const CurvePoint& p) {
    if (p.infinity) return p;
    return CurvePoint::affine(p.curve, p.x, -p.y);
}

// Secant construction joining the mirror of p1 to p2: the line through
// (x1, -y1) and (x2, y2) meets the curve at one further point, which is
// returned un-negated. From (12,36) on N=6 this reproduces the classical
// worked values (-3,-9), (-2,-8), (18,-72).
inline CurvePoint chord(const CurvePoint& p1, const CurvePoint& p2) {
    if (p1.infinity || p2.infinity)
        throw std::invalid_argument("chord: affine points required");
    if (p1.curve != p2.curve) throw std::invalid_argument("chord: points on different curves");
    if (p1.x == p2.x) throw std::domain_error("chord: vertical line, third point at infinity");
    Rational lambda = (p2.y + p1.y) / (p2.x - p1.x);
    Rational x3 = lambda * lambda - p1.x - p2.x;
    Rational y3 = lambda * (x3 - p1.x) - p1.y;
    return CurvePoint::affine(p1.curve, x3, y3);
}

// Second intersection of the tangent line at p; on the congruent curve its
// x-coordinate is ((x^2 + N^2) / 2y)^2, always a rational square.
inline CurvePoint tangent(const CurvePoint& p) {
    if (p.infinity) throw std::invalid_argument("tangent: affine point required");
    if (p.y == 0) throw std::domain_error("tangent: vertical tangent at 2-torsion");
    Rational a(p.curve.coeff_a());
    Rational lambda = (3 * p.x * p.x + a) / (2 * p.y);
    Rational x3 = lambda * lambda - 2 * p.x;
    Rational y3 = p.y + lambda * (x3 - p.x);
    return CurvePoint::affine(p.curve, x3, y3);
}

// (P, Q) with P, Q != 0 maps to U = Q^2/P^2, V = Q (P^2 + N^2) / P^2.
inline CurvePoint to_isogeny(const CurvePoint& p) {
    if (p.infinity || p.curve.kind != CurveKind::congruent)
        throw std::invalid_argument("to_isogeny: need an affine congruent-curve point");
    if (p.x == 0 || p.y == 0) throw std::domain_error("to_isogeny: torsion point");
    Rational p2 = p.x * p.x;
    Rational u = p.y * p.y / p2;
    Rational v = p.y * (p2 + Rational(p.curve.n * p.curve.n)) / p2;
    return CurvePoint::affine(Curve::isogeny_curve(p.curve.n), u, v);
}

// (U, V) with U != 0 maps to X = V^2/(4U^2), Y = V (U^2 - 4N^2) / (8U^2).
inline CurvePoint from_isogeny(const CurvePoint& p) {
    if (p.infinity || p.curve.kind != CurveKind::isogeny)
        throw std::invalid_argument("from_isogeny: need an affine isogeny-curve point");
    if (p.x == 0) throw std::domain_error("from_isogeny: torsion point");
    Rational u2 = p.x * p.x;
    Rational x = p.y * p.y / (4 * u2);
    Rational y = p.y * (u2 - Rational(4 * p.curve.n * p.curve.n)) / (8 * u2);
    return CurvePoint::affine(Curve::congruent_curve(p.curve.n), x, y);
}

// (P^2 + N^2)^2 - 4 X P (P - N)(P + N) as an integer quartic in P; its
// rational roots are the x-coordinates of points whose tangent lands on X.
inline QuarticCurve tangent_preimage_quartic(const Rational& x_target, const Curve& curve) {
    if (curve.kind != CurveKind::congruent)
        throw std::invalid_argument("tangent_preimage_quartic: congruent curve expected");
    Integer n2 = curve.n * curve.n;
    Integer xn = numerator(x_target), xd = denominator(x_target);
    // xd * (P^2 + N^2)^2 - 4 xn (P^3 - N^2 P)
    QuarticCurve q{xd, -4 * xn, 2 * n2 * xd, 4 * xn * n2, n2 * n2 * xd};
    return q.primitive_part();
}

// X = d u^2 / v^2, Y = d u w / v^3 with d squarefree, u > 0, d | N and the
// coprimality conditions of the integer model.
struct UvwRep {
    Integer d, u, v, w;
};

inline UvwRep uvw_decompose(const CurvePoint& p) {
    if (p.infinity || p.curve.kind != CurveKind::congruent)
        throw std::invalid_argument("uvw_decompose: need an affine congruent-curve point");
    if (p.x == 0 || p.y == 0)
        throw std::invalid_argument("uvw_decompose: torsion point has no decomposition");
    Integer xd = denominator(p.x);
    auto v = is_perfect_square(xd);
    if (!v) throw std::invalid_argument("uvw_decompose: denominator is not a square");
    auto [d, u] = squarefree_decompose(numerator(p.x));
    // w from Y = d u w / v^3
    Rational wr = p.y * Rational(*v * *v * *v) / Rational(d * u);
    if (denominator(wr) != 1)
        throw std::invalid_argument("uvw_decompose: point has no integral w");
    UvwRep rep{d, u, *v, numerator(wr)};
    // invariant check: d^2 w^2 = d^3 u^4 - N^2 d v^4
    Integer lhs = rep.d * rep.d * rep.w * rep.w;
    Integer rhs = rep.d * rep.d * rep.d * rep.u * rep.u * rep.u * rep.u -
                  p.curve.n * p.curve.n * rep.d * rep.v * rep.v * rep.v * rep.v;
    if (lhs != rhs) throw std::logic_error("uvw_decompose: identity violated");
    return rep;
}

// ln max(|num X|, den X); the usual crude size measure for a point.
inline double naive_height(const CurvePoint& p) {
    if (p.infinity) throw std::invalid_argument("naive_height: undefined at infinity");
    Integer num = abs(numerator(p.x)), den = denominator(p.x);
    return ln_integer(num > den ? num : den);
}

}  // namespace congruent
