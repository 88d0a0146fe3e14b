#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "orbirad/types.hpp"

namespace orbirad::hypgeom {

struct Sides {
    double a, b, c;  // opposite alpha, beta, gamma
};

// cosh of the side opposite `opp`, adjacent angles `adj1`, `adj2`.
// Valid for opp = 0 (cusp behind the side); the adjacent angles must be > 0.
inline double side_opposite(double opp, double adj1, double adj2) {
    if (!(adj1 > 0.0) || !(adj2 > 0.0))
        fail("IdealVertex", "side adjacent to a cusp has infinite length");
    double ch = (std::cos(opp) + std::cos(adj1) * std::cos(adj2)) /
                (std::sin(adj1) * std::sin(adj2));
    if (ch < 1.0) {
        if (ch < 1.0 - 1e-9) fail("InvalidTriangle", "law of cosines gives cosh < 1");
        ch = 1.0;
    }
    return std::acosh(ch);
}

// Hyperbolic law of cosines for angles. All three angles must be positive.
inline Sides triangle_sides_from_angles(const TriangleAngles& t) {
    if (t.has_cusp()) fail("IdealVertex", "triangle has an ideal vertex");
    return {side_opposite(t.alpha, t.beta, t.gamma),
            side_opposite(t.beta, t.gamma, t.alpha),
            side_opposite(t.gamma, t.alpha, t.beta)};
}

// Inradius of the triangle with one zero angle, in the closed form
// arctanh[(cos t1 + cos t2) / (2 sqrt((1+cos t1)(1+cos t2)))].
inline double inscribed_radius_cusp(double t1, double t2) {
    double c1 = std::cos(t1), c2 = std::cos(t2);
    return std::atanh((c1 + c2) / (2.0 * std::sqrt((1.0 + c1) * (1.0 + c2))));
}

// Inradius for any admissible angle triple (angles may be zero).
inline double inscribed_radius(double t0, double t1, double t2) {
    for (double v : {t0, t1, t2})
        if (!std::isfinite(v) || v < 0.0) fail("InvalidTriangle", "negative angle");
    if (t0 + t1 + t2 >= kPi) fail("InvalidTriangle", "angle sum >= pi");
    if (t0 == 0.0) return inscribed_radius_cusp(t1, t2);
    if (t1 == 0.0) return inscribed_radius_cusp(t0, t2);
    if (t2 == 0.0) return inscribed_radius_cusp(t0, t1);
    double c0 = std::cos(t0), c1 = std::cos(t1), c2 = std::cos(t2);
    double num = c0 * c0 + c1 * c1 + c2 * c2 + 2.0 * c0 * c1 * c2 - 1.0;
    double den = 2.0 * (1.0 + c0) * (1.0 + c1) * (1.0 + c2);
    return std::atanh(std::sqrt(std::max(num, 0.0) / den));
}

// Length of the embedded horocycle at the cusp of a triangular surface whose
// other two singular points have total angles 2*t1 and 2*t2.
inline double horocycle_embedded_length(double t1, double t2) {
    for (double v : {t1, t2})
        if (!std::isfinite(v) || v < 0.0 || v > kPi / 2 + 1e-15)
            fail("InvalidTriangle", "horocycle angle outside [0, pi/2]");
    return 4.0 / std::sqrt(1.0 + 1.0 / inscribed_radius_cusp(t1, t2));
}

// Half the collar width of a closed geodesic of length L.
inline double collar_half_width(double L) {
    if (!(L > 0.0)) fail("NonPositiveLength", "collar needs a positive length");
    return std::asinh(1.0 / std::sinh(L / 2.0));
}

inline bool on_model(const HPoint& p, double tol = 1e-9) {
    return p.x0 > 0.0 && std::fabs(mink(p, p) - 1.0) <= tol;
}

inline HPoint normalized(HPoint p) {
    double s = std::sqrt(mink(p, p));
    return {p.x0 / s, p.x1 / s, p.x2 / s};
}

inline double hyp_distance(const HPoint& p, const HPoint& q) {
    if (!on_model(p) || !on_model(q)) fail("OffModel", "point off the hyperboloid");
    // sinh^2(d/2) = -<p-q, p-q>/4; stable for nearby points, unlike acosh(<p,q>).
    double d0 = p.x0 - q.x0, d1 = p.x1 - q.x1, d2 = p.x2 - q.x2;
    double s = d1 * d1 + d2 * d2 - d0 * d0;
    return 2.0 * std::asinh(0.5 * std::sqrt(std::max(s, 0.0)));
}

// Half-angle form: sin^2(A/2) = (cosh a - cosh(b-c)) / (2 sinh b sinh c).
inline double half_angle_sine(double a, double b, double c) {
    double num = std::cosh(a) - std::cosh(b - c);
    double den = 2.0 * std::sinh(b) * std::sinh(c);
    return std::sqrt(std::clamp(num / den, 0.0, 1.0));
}

// Angle opposite side a, from the law of cosines for sides. Cosine values
// drifting past [-1, 1] by at most 1e-9 are clamped; further means the sides
// do not form a triangle.
inline double angle_from_sides(double a, double b, double c) {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        fail("DegenerateTriangle", "sides must be positive");
    double cosA = (std::cosh(b) * std::cosh(c) - std::cosh(a)) /
                  (std::sinh(b) * std::sinh(c));
    if (std::fabs(cosA) > 1.0) {
        if (std::fabs(cosA) > 1.0 + 1e-9)
            fail("DegenerateTriangle", "sides violate the triangle inequality");
        cosA = std::clamp(cosA, -1.0, 1.0);
    }
    return std::acos(cosA);
}

// ---------------------------------------------------------------------------
// Explicit model of the doubled triangle, for the geometric oracle.

struct ModelVertex {
    bool ideal = false;
    HPoint pos;              // on the hyperboloid, or a null vector if ideal
    double ku = 0, kv = 0;   // Klein coordinates (on the unit circle if ideal)
    CornerSpec corner;
    double horo_len = 0;     // embedded horocycle length h(S) (cusps only)
    double horo_logcal = 0;  // log of the calibrated horocycle level (cusps only)
};

struct SurfaceModel {
    TriangleAngles angles;
    std::array<ModelVertex, 3> v;
    double orientation = 1.0;  // sign of the Klein triangle's doubled area

    // Signed distance used by the loop-length laws: hyperbolic distance for a
    // cone corner, signed horocycle distance (positive outside the horoball)
    // for a cusp.
    double corner_dist(int i, const HPoint& p) const {
        const ModelVertex& c = v[static_cast<size_t>(i)];
        if (!c.ideal) return hyp_distance(c.pos, p);
        return std::log(mink(p, c.pos)) - c.horo_logcal;
    }

    // Klein half-plane test against each side; tol in Klein units.
    bool contains(const HPoint& p, double tol = 1e-12) const {
        double u = p.x1 / p.x0, w = p.x2 / p.x0;
        for (int i = 0; i < 3; ++i) {
            const ModelVertex& s = v[static_cast<size_t>(i)];
            const ModelVertex& e = v[static_cast<size_t>((i + 1) % 3)];
            double cr = (e.ku - s.ku) * (w - s.kv) - (e.kv - s.kv) * (u - s.ku);
            if (orientation * cr < -tol) return false;
        }
        return true;
    }
};

namespace detail {

// Unit tangent at finite P pointing toward Q (finite or null); <u,u> = -1.
inline HPoint tangent_toward(const HPoint& P, const HPoint& Q, bool q_ideal) {
    if (q_ideal) {
        double s = mink(P, Q);
        return {Q.x0 / s - P.x0, Q.x1 / s - P.x1, Q.x2 / s - P.x2};
    }
    double ch = mink(P, Q);
    double sh = std::sqrt(ch * ch - 1.0);
    return {(Q.x0 - ch * P.x0) / sh, (Q.x1 - ch * P.x1) / sh, (Q.x2 - ch * P.x2) / sh};
}

// Point on the geodesic from V (finite) toward ideal N where <x, N> = level.
inline HPoint horo_hit_from_finite(const HPoint& V, const HPoint& N, double level) {
    double vn = mink(V, N);
    HPoint u = tangent_toward(V, N, true);  // <u, N> = -vn
    double t = std::log(vn / level);
    return {std::cosh(t) * V.x0 + std::sinh(t) * u.x0,
            std::cosh(t) * V.x1 + std::sinh(t) * u.x1,
            std::cosh(t) * V.x2 + std::sinh(t) * u.x2};
}

// Same for the geodesic joining ideal M to ideal N.
inline HPoint horo_hit_from_ideal(const HPoint& M, const HPoint& N, double level) {
    double nm = mink(N, M);
    double k = std::sqrt(nm / 2.0);
    // x(t) = (e^t N + e^-t M) / (2k); <x, N> = e^-t nm / (2k) = e^-t k
    double t = std::log(k / level);
    double a = std::exp(t) / (2.0 * k), b = std::exp(-t) / (2.0 * k);
    return {a * N.x0 + b * M.x0, a * N.x1 + b * M.x1, a * N.x2 + b * M.x2};
}

}  // namespace detail

// Build the SurfaceModel: explicit hyperboloid coordinates for the finite
// vertices, null vectors plus calibrated reference horocycles for the ideal
// ones. The reference horocycle of cusp i carries arc length h(S)/2 inside
// the triangle, matching the doubled surface's embedded horocycle.
inline SurfaceModel place_double_triangle(const TriangleAngles& t) {
    std::array<double, 3> ang = {t.alpha, t.beta, t.gamma};
    std::array<int, 3> perm{};  // finite vertices first
    int n = 0;
    for (int i = 0; i < 3; ++i)
        if (ang[static_cast<size_t>(i)] > 0.0) perm[static_cast<size_t>(n++)] = i;
    int n_finite = n;
    for (int i = 0; i < 3; ++i)
        if (ang[static_cast<size_t>(i)] == 0.0) perm[static_cast<size_t>(n++)] = i;

    auto A = [&](int slot) { return ang[static_cast<size_t>(perm[static_cast<size_t>(slot)])]; };

    std::array<HPoint, 3> pos;
    std::array<bool, 3> ideal = {false, false, false};
    switch (n_finite) {
        case 3: {
            double s01 = side_opposite(A(2), A(0), A(1));
            double s02 = side_opposite(A(1), A(2), A(0));
            pos[0] = {1, 0, 0};
            pos[1] = {std::cosh(s01), std::sinh(s01), 0};
            pos[2] = {std::cosh(s02), std::sinh(s02) * std::cos(A(0)),
                      std::sinh(s02) * std::sin(A(0))};
            break;
        }
        case 2: {
            double s01 = side_opposite(0.0, A(0), A(1));
            pos[0] = {1, 0, 0};
            pos[1] = {std::cosh(s01), std::sinh(s01), 0};
            pos[2] = {1, std::cos(A(0)), std::sin(A(0))};
            ideal[2] = true;
            break;
        }
        case 1: {
            pos[0] = {1, 0, 0};
            pos[1] = {1, 1, 0};
            pos[2] = {1, std::cos(A(0)), std::sin(A(0))};
            ideal[1] = ideal[2] = true;
            break;
        }
        default: {  // ideal triangle
            for (int s = 0; s < 3; ++s) {
                double phi = 2.0 * kPi * s / 3.0;
                pos[static_cast<size_t>(s)] = {1, std::cos(phi), std::sin(phi)};
                ideal[static_cast<size_t>(s)] = true;
            }
            break;
        }
    }

    SurfaceModel m{t, {}, 1.0};
    for (int slot = 0; slot < 3; ++slot) {
        int i = perm[static_cast<size_t>(slot)];
        ModelVertex& mv = m.v[static_cast<size_t>(i)];
        mv.ideal = ideal[static_cast<size_t>(slot)];
        mv.pos = pos[static_cast<size_t>(slot)];
        mv.ku = mv.pos.x1 / mv.pos.x0;
        mv.kv = mv.pos.x2 / mv.pos.x0;
        double a = ang[static_cast<size_t>(i)];
        mv.corner = (a == 0.0) ? CornerSpec::cusp() : CornerSpec::cone_angle(a);
    }

    double area2 = (m.v[1].ku - m.v[0].ku) * (m.v[2].kv - m.v[0].kv) -
                   (m.v[1].kv - m.v[0].kv) * (m.v[2].ku - m.v[0].ku);
    m.orientation = (area2 >= 0.0) ? 1.0 : -1.0;

    // Calibrate each cusp's reference horocycle to arc length h(S)/2.
    for (int i = 0; i < 3; ++i) {
        ModelVertex& mv = m.v[static_cast<size_t>(i)];
        if (!mv.ideal) continue;
        double o1 = ang[static_cast<size_t>((i + 1) % 3)];
        double o2 = ang[static_cast<size_t>((i + 2) % 3)];
        mv.horo_len = horocycle_embedded_length(o1, o2);

        std::array<HPoint, 2> hit;
        for (int k = 0; k < 2; ++k) {
            const ModelVertex& other = m.v[static_cast<size_t>((i + 1 + k) % 3)];
            hit[static_cast<size_t>(k)] =
                other.ideal ? detail::horo_hit_from_ideal(other.pos, mv.pos, 1.0)
                            : detail::horo_hit_from_finite(other.pos, mv.pos, 1.0);
        }
        double chord = hyp_distance(normalized(hit[0]), normalized(hit[1]));
        double arc_at_level1 = 2.0 * std::sinh(chord / 2.0);
        // arc(level) = level * arc(1)
        mv.horo_logcal = std::log((mv.horo_len / 2.0) / arc_at_level1);
    }
    return m;
}

}  // namespace orbirad::hypgeom
