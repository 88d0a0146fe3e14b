#pragma once

#include <cmath>
#include <string>

#include "orbirad/error.hpp"

namespace orbirad {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Angle triple of the doubled triangle. Angles in [0, pi/2], zero meaning a
// cusp; the sum must stay below pi with a 1e-9 margin (the surface degenerates
// at the boundary of the moduli space).
struct TriangleAngles {
    double alpha, beta, gamma;

    TriangleAngles(double a, double b, double g) : alpha(a), beta(b), gamma(g) {
        for (double v : {a, b, g}) {
            if (!std::isfinite(v) || v < 0.0 || v > kPi / 2 + 1e-15)
                fail("InvalidTriangle", "angle outside [0, pi/2]: " + std::to_string(v));
        }
        if (a + b + g >= kPi - 1e-9)
            fail("InvalidTriangle", "angle sum too close to pi: " + std::to_string(a + b + g));
    }

    bool has_cusp() const { return alpha == 0.0 || beta == 0.0 || gamma == 0.0; }
};

// Hyperboloid-model point: x0^2 - x1^2 - x2^2 = 1, x0 > 0.
struct HPoint {
    double x0 = 1.0, x1 = 0.0, x2 = 0.0;
};

inline double mink(const HPoint& p, const HPoint& q) {
    return p.x0 * q.x0 - p.x1 * q.x1 - p.x2 * q.x2;
}

// One corner of a pair of pants / triangular surface.
struct CornerSpec {
    enum class Kind { ConeOrder, ConeAngle, Cusp, Boundary };

    Kind kind = Kind::Cusp;
    long order = 0;      // ConeOrder only, >= 2
    double value = 0.0;  // ConeAngle: angle in (0, pi/2]; Boundary: length > 0

    static CornerSpec cone_order(long k) {
        if (k < 2) fail("InvalidTriangle", "cone order must be >= 2");
        CornerSpec c;
        c.kind = Kind::ConeOrder;
        c.order = k;
        c.value = kPi / static_cast<double>(k);
        return c;
    }
    static CornerSpec cone_angle(double a) {
        if (!(a > 0.0) || a > kPi / 2 + 1e-15)
            fail("InvalidTriangle", "cone angle outside (0, pi/2]");
        CornerSpec c;
        c.kind = Kind::ConeAngle;
        c.value = a;
        return c;
    }
    static CornerSpec cusp() { return CornerSpec{}; }
    static CornerSpec boundary(double len) {
        if (!(len > 0.0)) fail("NonPositiveLength", "boundary length must be positive");
        CornerSpec c;
        c.kind = Kind::Boundary;
        c.value = len;
        return c;
    }

    bool is_boundary() const { return kind == Kind::Boundary; }
    bool is_cusp() const { return kind == Kind::Cusp; }

    // Cone angle; 0 for a cusp. Not defined for boundary corners.
    double angle() const {
        switch (kind) {
            case Kind::ConeOrder:
            case Kind::ConeAngle: return value;
            case Kind::Cusp: return 0.0;
            case Kind::Boundary: fail("DomainError", "boundary corner has no cone angle");
        }
        return 0.0;
    }

    // Constant on the left of the system's sine equation:
    // cos(angle) for cone corners, 1 for a cusp, cosh(L/2) for boundary.
    double weight() const {
        switch (kind) {
            case Kind::ConeOrder:
            case Kind::ConeAngle: return std::cos(value);
            case Kind::Cusp: return 1.0;
            case Kind::Boundary: return std::cosh(value / 2.0);
        }
        return 1.0;
    }

    std::string describe() const {
        switch (kind) {
            case Kind::ConeOrder: return "order " + std::to_string(order);
            case Kind::ConeAngle: return "angle " + std::to_string(value);
            case Kind::Cusp: return "cusp";
            case Kind::Boundary: return "boundary " + std::to_string(value);
        }
        return {};
    }
};

}  // namespace orbirad
