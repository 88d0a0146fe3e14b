#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "orbirad/types.hpp"

namespace orbirad::solver {

// Corner weights of the sine system: cos(angle) for cone corners, 1 for a
// cusp, cosh(L/2) for a geodesic boundary of length L. The w3 slot plays the
// distinguished role in f (the eliminated angle).
struct CornerWeights {
    std::array<double, 3> w{1.0, 1.0, 1.0};
    bool generalized = false;  // any boundary corner (weight > 1)

    static CornerWeights from_corners(const CornerSpec& c1, const CornerSpec& c2,
                                      const CornerSpec& c3) {
        CornerWeights cw;
        const CornerSpec* cs[3] = {&c1, &c2, &c3};
        double angle_sum = 0.0;
        bool all_cone = true;
        for (int i = 0; i < 3; ++i) {
            cw.w[static_cast<size_t>(i)] = cs[i]->weight();
            if (cs[i]->is_boundary()) {
                all_cone = false;
                cw.generalized = true;
            } else {
                angle_sum += cs[i]->angle();
            }
        }
        if (all_cone && angle_sum >= kPi - 1e-9)
            fail("InvalidTriangle", "corner angles sum to " + std::to_string(angle_sum) +
                                        ", surface degenerates");
        return cw;
    }

    static CornerWeights from_angles(const TriangleAngles& t) {
        CornerWeights cw;
        cw.w = {std::cos(t.alpha), std::cos(t.beta), std::cos(t.gamma)};
        return cw;
    }

    static CornerWeights from_values(double w1, double w2, double w3) {
        CornerWeights cw;
        cw.w = {w1, w2, w3};
        for (double v : cw.w) {
            if (!(v > 0.0) || !std::isfinite(v))
                fail("InvalidTriangle", "corner weight must be positive and finite");
            if (v > 1.0) cw.generalized = true;
        }
        if (!cw.generalized) {
            // admissibility: f(1) = 2(w3 + w1 w2 - sqrt(1-w1^2) sqrt(1-w2^2)) > 0
            double f1 = w3 + w1 * w2 -
                        std::sqrt((1.0 - w1 * w1) * (1.0 - w2 * w2));
            if (f1 <= 5e-10)
                fail("InvalidTriangle", "weights at or beyond the degenerate locus");
        }
        return cw;
    }

    double max_weight() const { return std::max({w[0], w[1], w[2]}); }
};

// The explicit polynomial-with-radicals f; its positive root (in x = cosh r)
// locates the maximum injectivity radius.
inline double f_eval(const CornerWeights& cw, double x) {
    double w1 = cw.w[0], w2 = cw.w[1], w3 = cw.w[2];
    double floor_x = std::max({1.0, w1, w2});
    if (x < floor_x - 1e-12)
        fail("DomainError", "f requires x >= max(1, w1, w2), got " + std::to_string(x));
    x = std::max(x, floor_x);
    double s1 = std::sqrt(std::max(x * x - w1 * w1, 0.0));
    double s2 = std::sqrt(std::max(x * x - w2 * w2, 0.0));
    double x2 = x * x;
    return 2.0 * w3 * x2 * x2 - (3.0 * x2 - 1.0) * (s1 * s2 - w1 * w2) -
           (x2 - 1.0) * std::sqrt(4.0 * x2 - 1.0) * (w1 * s2 + w2 * s1);
}

inline double F_eval(const CornerWeights& cw, double r) {
    if (r < 0.0) fail("DomainError", "F is defined for r >= 0");
    return f_eval(cw, std::cosh(r));
}

namespace detail {

// Weights with the largest moved to the distinguished slot, so the radicals
// stay real from the bracket's low end.
inline CornerWeights canonical(const CornerWeights& cw) {
    CornerWeights c = cw;
    int imax = 0;
    for (int i = 1; i < 3; ++i)
        if (c.w[static_cast<size_t>(i)] > c.w[static_cast<size_t>(imax)]) imax = i;
    std::swap(c.w[static_cast<size_t>(imax)], c.w[2]);
    return c;
}

struct RootResult {
    double r = 0;
    int iterations = 0;
};

inline RootResult find_root(const CornerWeights& cw, double bracket_hi) {
    CornerWeights c = canonical(cw);
    double r_lo = std::acosh(std::max({1.0, c.w[0], c.w[1]}));
    double hi = bracket_hi;
    if (!(hi == hi)) {  // NaN -> default
        hi = c.generalized ? std::acosh(2.0 * (1.0 + c.max_weight()))
                           : std::acosh(2.0);
    }
    if (!(hi > r_lo)) fail("NoSignChange", "bracket is empty");

    double lo = r_lo;
    int iters = 0;
    if (c.generalized) {
        // Uniqueness is only proven for cone/cusp weights; scan and refuse to
        // guess between multiple candidate roots.
        const int n = 10000;
        double prev_r = r_lo, prev_f = f_eval(c, std::cosh(r_lo));
        int changes = 0;
        double blo = 0, bhi = 0;
        for (int i = 1; i <= n; ++i) {
            double r = r_lo + (hi - r_lo) * i / n;
            double f = F_eval(c, r);
            if ((f > 0 && prev_f < 0) || (f < 0 && prev_f > 0)) {
                ++changes;
                blo = prev_r;
                bhi = r;
            }
            if (f != 0.0) {
                prev_f = f;
                prev_r = r;
            }
            ++iters;
        }
        if (changes == 0) fail("NoSignChange", "F has no sign change on the bracket");
        if (changes > 1)
            fail("MultipleRoots", "F changes sign " + std::to_string(changes) +
                                      " times; outside the proven regime");
        lo = blo;
        hi = bhi;
    } else {
        if (!(F_eval(c, lo) > 0.0))
            fail("NoSignChange", "F(0) = f(1) <= 0; triple not admissible");
        if (!(F_eval(c, hi) < 0.0))
            fail("NoSignChange", "F positive at the bracket top");
    }

    double flo = F_eval(c, lo);
    while (hi - lo > 1e-13) {
        double mid = 0.5 * (lo + hi);
        double fm = F_eval(c, mid);
        ++iters;
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }

    // Newton polish with a centered finite-difference derivative.
    double r = 0.5 * (lo + hi);
    double fr = F_eval(c, r);
    const double h = 1e-7;
    for (int k = 0; k < 4 && std::fabs(fr) > 0.0; ++k) {
        double rp = r + h, rm = std::max(r - h, r_lo);
        double d = (F_eval(c, rp) - F_eval(c, rm)) / (rp - rm);
        if (d == 0.0) break;
        double rn = r - fr / d;
        if (!(rn > r_lo) || !std::isfinite(rn)) break;
        double fn = F_eval(c, rn);
        ++iters;
        if (std::fabs(fn) >= std::fabs(fr)) break;
        r = rn;
        fr = fn;
    }
    return {r, iters};
}

}  // namespace detail

// Unique positive root of F (maximum injectivity radius for cone/cusp
// weights). bracket_hi defaults to arccosh(2) for cone/cusp weights (area
// bound) and arccosh(2(1 + max weight)) for boundary weights.
inline double max_disk_radius(const CornerWeights& cw,
                              double bracket_hi = std::numeric_limits<double>::quiet_NaN()) {
    return detail::find_root(cw, bracket_hi).r;
}

// Full solution (r, loop angles, equilateral angle) of the system, with the
// residuals of all five equations.
struct MaxDiskSolution {
    double r = 0;
    double alpha_tilde = 0, beta_tilde = 0, gamma_tilde = 0;  // input corner order
    double theta = 0;
    double residual_max = 0;
    int iterations = 0;
};

inline MaxDiskSolution solve_full(const CornerWeights& cw,
                                  double bracket_hi = std::numeric_limits<double>::quiet_NaN()) {
    detail::RootResult root = detail::find_root(cw, bracket_hi);
    double x = std::cosh(root.r);

    // back-substitute in the canonical slot order (largest weight eliminated)
    int imax = 0;
    for (int i = 1; i < 3; ++i)
        if (cw.w[static_cast<size_t>(i)] > cw.w[static_cast<size_t>(imax)]) imax = i;
    std::array<double, 3> tilde{};
    double theta = std::acos(1.0 - 1.0 / (2.0 * x * x));
    double partial = 0.0;
    for (int i = 0; i < 3; ++i) {
        if (i == imax) continue;
        double s = cw.w[static_cast<size_t>(i)] / x;
        if (s > 1.0) fail("InconsistentSolution", "loop half-angle sine above 1");
        tilde[static_cast<size_t>(i)] = 2.0 * std::asin(s);
        partial += tilde[static_cast<size_t>(i)];
    }
    double last = 2.0 * kPi - partial - 3.0 * theta;
    if (last < -1e-9 || last >= 2.0 * kPi)
        fail("InconsistentSolution", "eliminated loop angle outside [0, 2pi)");
    last = std::max(last, 0.0);
    tilde[static_cast<size_t>(imax)] = last;
    double cross = std::fabs(std::sin(last / 2.0) - cw.w[static_cast<size_t>(imax)] / x);
    if (cross > 1e-9)
        fail("InconsistentSolution",
             "sine cross-check residual " + std::to_string(cross) +
                 "; weights outside the system's validity");

    MaxDiskSolution sol;
    sol.r = root.r;
    sol.iterations = root.iterations;
    sol.theta = theta;
    sol.alpha_tilde = tilde[0];
    sol.beta_tilde = tilde[1];
    sol.gamma_tilde = tilde[2];

    double res = 0.0;
    for (int i = 0; i < 3; ++i)
        res = std::max(res, std::fabs(cw.w[static_cast<size_t>(i)] -
                                      x * std::sin(tilde[static_cast<size_t>(i)] / 2.0)));
    res = std::max(res, std::fabs(x - std::sqrt(1.0 / (2.0 * (1.0 - std::cos(theta))))));
    res = std::max(res, std::fabs(tilde[0] + tilde[1] + tilde[2] + 3.0 * theta - 2.0 * kPi));
    sol.residual_max = res;
    return sol;
}

// Real root of (4 - cos^2(pi/7)) t^3 - 5 t^2 + 2 t - 1/4 on [1, 2].
inline double rho_T_t0() {
    auto cubic = [](double t) {
        double c = std::cos(kPi / 7.0);
        return (4.0 - c * c) * t * t * t - 5.0 * t * t + 2.0 * t - 0.25;
    };
    double lo = 1.0, hi = 2.0;
    double flo = cubic(lo);
    while (hi - lo > 1e-15) {
        double mid = 0.5 * (lo + hi);
        double fm = cubic(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline double rho_T() { return std::acosh(std::sqrt(rho_T_t0())); }

// Loop length around a corner at the given signed distance. Cone corner:
// l = 2 arcsinh(sin(a) sinh(d)), doubling to l = 2d at a = pi/2. Cusp:
// l = 2 arcsinh((h/2) e^d) where d is the signed horocycle distance and h the
// reference horocycle length (must be supplied, the corner alone does not
// determine it). Boundary of length L: l = 2 arcsinh(cosh(d) sinh(L/2)).
inline double loop_length(const CornerSpec& corner, double dist,
                          double cusp_ref_len = std::numeric_limits<double>::quiet_NaN()) {
    switch (corner.kind) {
        case CornerSpec::Kind::ConeOrder:
        case CornerSpec::Kind::ConeAngle: {
            if (dist < 0.0) fail("NegativeDistance", "cone corner distance must be >= 0");
            double a = corner.angle();
            if (a == kPi / 2) return 2.0 * dist;
            return 2.0 * std::asinh(std::sin(a) * std::sinh(dist));
        }
        case CornerSpec::Kind::Cusp: {
            if (!(cusp_ref_len > 0.0))
                fail("DomainError", "cusp loop length needs the reference horocycle length");
            return 2.0 * std::asinh(0.5 * cusp_ref_len * std::exp(dist));
        }
        case CornerSpec::Kind::Boundary: {
            if (dist < 0.0) fail("NegativeDistance", "boundary distance must be >= 0");
            return 2.0 * std::asinh(std::cosh(dist) * std::sinh(corner.value / 2.0));
        }
    }
    return 0.0;
}

}  // namespace orbirad::solver
