#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "orbirad/hypgeom.hpp"
#include "orbirad/parallel.hpp"
#include "orbirad/solver.hpp"

namespace orbirad::oracle {

using hypgeom::SurfaceModel;

// Ideal corners are sampled only down to this depth inside the reference
// horoball; loops there are far shorter than any interior maximum.
inline constexpr double kCuspTruncationDepth = 3.0;

namespace detail {

inline double loop_at(const SurfaceModel& m, int i, const HPoint& p) {
    const hypgeom::ModelVertex& mv = m.v[static_cast<size_t>(i)];
    return solver::loop_length(mv.corner, m.corner_dist(i, p), mv.horo_len);
}

inline double min_loop(const SurfaceModel& m, const HPoint& p) {
    double l = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) l = std::min(l, loop_at(m, i, p));
    return l;
}

inline bool klein_point(double u, double v, HPoint& out) {
    double s = 1.0 - u * u - v * v;
    if (s <= 1e-14) return false;
    double x0 = 1.0 / std::sqrt(s);
    out = {x0, u * x0, v * x0};
    return true;
}

inline bool admissible(const SurfaceModel& m, double u, double v, HPoint& p) {
    if (!klein_point(u, v, p)) return false;
    if (!m.contains(p, 1e-12)) return false;
    for (int i = 0; i < 3; ++i)
        if (m.v[static_cast<size_t>(i)].ideal &&
            m.corner_dist(i, p) < -kCuspTruncationDepth)
            return false;
    return true;
}

// min loop / 2, or -inf outside the sampled domain
inline double value_at(const SurfaceModel& m, double u, double v) {
    HPoint p;
    if (!admissible(m, u, v, p)) return -std::numeric_limits<double>::infinity();
    return 0.5 * min_loop(m, p);
}

struct GoldenResult {
    double x;
    int evals;
};

template <class F>
GoldenResult golden_max(F&& fn, double a, double b, double tol) {
    const double gr = 0.6180339887498949;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = fn(c), fd = fn(d);
    int evals = 2;
    while (b - a > tol) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = fn(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = fn(c);
        }
        ++evals;
    }
    return {fc > fd ? c : d, evals};
}

}  // namespace detail

// Injectivity radius at p from first principles: half the minimum of the
// three loop lengths.
inline double inj_radius_at(const SurfaceModel& m, const HPoint& p) {
    if (!hypgeom::on_model(p)) fail("OffModel", "point off the hyperboloid");
    if (!m.contains(p, 1e-9)) fail("OutsideTriangle", "point not in the closed triangle");
    return 0.5 * detail::min_loop(m, p);
}

struct GridResult {
    double r = 0;
    HPoint argmax;
    int refinement_steps = 0;
};

// Barycentric grid scan over one closed triangle (Klein coordinates, where
// geodesics are straight), then golden-section refinement along three cell
// directions, then a Newton polish on the two loop-length equalities. The
// polish stays purely geometric; it never consults the implicit equation.
inline GridResult grid_max(const SurfaceModel& m, int resolution) {
    if (resolution < 16) fail("DomainError", "resolution must be >= 16");
    const double au = m.v[0].ku, av = m.v[0].kv;
    const double bu = m.v[1].ku, bv = m.v[1].kv;
    const double cu = m.v[2].ku, cv = m.v[2].kv;

    struct Best {
        double val = -std::numeric_limits<double>::infinity();
        double u = 0, v = 0;
    };
    std::vector<Best> rows(static_cast<size_t>(resolution) + 1);
    parallel_for(static_cast<size_t>(resolution) + 1, [&](std::size_t i) {
        Best b;
        double s = static_cast<double>(i) / resolution;
        for (int j = 0; j + static_cast<int>(i) <= resolution; ++j) {
            double t = static_cast<double>(j) / resolution;
            double u = au + s * (bu - au) + t * (cu - au);
            double v = av + s * (bv - av) + t * (cv - av);
            double val = detail::value_at(m, u, v);
            if (val > b.val) {
                b = {val, u, v};
            }
        }
        rows[i] = b;
    });
    Best best;
    for (const Best& b : rows)
        if (b.val > best.val) best = b;
    if (!std::isfinite(best.val)) fail("DomainError", "no admissible sample point");

    // cell-scale directions
    const double d1u = (bu - au) / resolution, d1v = (bv - av) / resolution;
    const double d2u = (cu - au) / resolution, d2v = (cv - av) / resolution;
    const std::array<std::array<double, 2>, 3> dirs = {
        {{d1u, d1v}, {d2u, d2v}, {d1u - d2u, d1v - d2v}}};

    int steps = 0;
    double w = 1.5;  // in cell units
    for (int round = 0; round < 120; ++round) {
        for (const auto& d : dirs) {
            auto line = [&](double x) {
                return detail::value_at(m, best.u + x * d[0], best.v + x * d[1]);
            };
            detail::GoldenResult g = detail::golden_max(line, -w, w, w / 64.0);
            double val = line(g.x);
            steps += g.evals;
            if (val > best.val) {
                best.u += g.x * d[0];
                best.v += g.x * d[1];
                best.val = val;
            }
        }
        // hyperbolic diameter of the remaining cell
        double diam = 0.0;
        for (const auto& d : dirs) {
            HPoint p1, p2;
            if (detail::klein_point(best.u - w * d[0], best.v - w * d[1], p1) &&
                detail::klein_point(best.u + w * d[0], best.v + w * d[1], p2))
                diam = std::max(diam, hypgeom::hyp_distance(p1, p2));
        }
        if (diam < 1e-8) break;
        w *= 0.5;
    }

    // Equal-loop polish: solve l0 = l2, l1 = l2 in Klein coordinates.
    {
        auto gfun = [&](double u, double v, double g[2]) {
            HPoint p;
            if (!detail::admissible(m, u, v, p)) return false;
            double l0 = detail::loop_at(m, 0, p);
            double l1 = detail::loop_at(m, 1, p);
            double l2 = detail::loop_at(m, 2, p);
            g[0] = l0 - l2;
            g[1] = l1 - l2;
            return true;
        };
        double u = best.u, v = best.v;
        double g[2];
        if (gfun(u, v, g)) {
            const double h = 1e-7;
            for (int it = 0; it < 15; ++it) {
                double gn = std::max(std::fabs(g[0]), std::fabs(g[1]));
                if (gn < 1e-12) break;
                double gu[2], gv[2];
                if (!gfun(u + h, v, gu) || !gfun(u, v + h, gv)) break;
                double j00 = (gu[0] - g[0]) / h, j01 = (gv[0] - g[0]) / h;
                double j10 = (gu[1] - g[1]) / h, j11 = (gv[1] - g[1]) / h;
                double det = j00 * j11 - j01 * j10;
                if (std::fabs(det) < 1e-30) break;
                double du = -(j11 * g[0] - j01 * g[1]) / det;
                double dv = -(-j10 * g[0] + j00 * g[1]) / det;
                bool moved = false;
                for (int bt = 0; bt < 8; ++bt) {
                    double nu = u + du, nv = v + dv, ng[2];
                    if (gfun(nu, nv, ng) &&
                        std::max(std::fabs(ng[0]), std::fabs(ng[1])) < gn) {
                        u = nu;
                        v = nv;
                        g[0] = ng[0];
                        g[1] = ng[1];
                        moved = true;
                        break;
                    }
                    du *= 0.5;
                    dv *= 0.5;
                }
                ++steps;
                if (!moved) break;
            }
            double val = detail::value_at(m, u, v);
            if (val >= best.val - 1e-10) {
                best.u = u;
                best.v = v;
                best.val = std::max(val, best.val);
            }
        }
    }

    HPoint p;
    detail::klein_point(best.u, best.v, p);
    return {best.val, p, steps};
}

struct OracleReport {
    double r_oracle = 0;
    HPoint argmax;
    double r_solver = 0;
    double abs_diff = 0;
    int grid = 0;
    int refinement_steps = 0;
    double tol = 0;
    bool pass = false;
};

// Both routes on one surface: analytic root vs geometric maximization.
inline OracleReport crosscheck(const TriangleAngles& t, int resolution, double tol) {
    SurfaceModel m = hypgeom::place_double_triangle(t);
    GridResult g = grid_max(m, resolution);
    double rs = solver::max_disk_radius(solver::CornerWeights::from_angles(t));
    OracleReport rep;
    rep.r_oracle = g.r;
    rep.argmax = g.argmax;
    rep.r_solver = rs;
    rep.abs_diff = std::fabs(g.r - rs);
    rep.grid = resolution;
    rep.refinement_steps = g.refinement_steps;
    rep.tol = tol;
    rep.pass = rep.abs_diff <= tol;
    return rep;
}

}  // namespace orbirad::oracle
