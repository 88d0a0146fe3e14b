#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "orbirad/checks.hpp"
#include "orbirad/hypgeom.hpp"
#include "orbirad/solver.hpp"

namespace orbirad::certify {

inline constexpr long kCuspOrder = -1;  // stands for an order-infinity point

// Genus plus singular-point orders (integers >= 2, or kCuspOrder for cusps).
struct OrbifoldSignature {
    int genus = 0;
    std::vector<long> orders;

    OrbifoldSignature(int g, std::vector<long> ord) : genus(g), orders(std::move(ord)) {
        if (genus < 0) fail("NonHyperbolic", "negative genus");
        for (long p : orders)
            if (p != kCuspOrder && p < 2)
                fail("NonHyperbolic", "cone order must be >= 2 or a cusp");
        std::sort(orders.begin(), orders.end(), order_less);
    }

    static bool order_less(long a, long b) {
        if (a == kCuspOrder) return false;  // cusps sort last
        if (b == kCuspOrder) return true;
        return a < b;
    }

    double inv_order_sum() const {
        double s = 0;
        for (long p : orders)
            if (p != kCuspOrder) s += 1.0 / static_cast<double>(p);
        return s;
    }

    int n() const { return static_cast<int>(orders.size()); }

    bool hyperbolic() const {
        return 2.0 * genus - 2.0 + n() - inv_order_sum() > 0.0;
    }
};

inline double orbifold_area(const OrbifoldSignature& s) {
    double area = 2.0 * kPi * (2.0 * s.genus - 2.0 + s.n() - s.inv_order_sum());
    if (!(area > 0.0)) fail("NonHyperbolic", "signature has non-positive area");
    return area;
}

enum class Branch {
    Triangular,
    YPiece,
    Averaging,
    ExceptionalCut5,
    ExceptionalCut4,
    SpecialCase2223,
    TorusPentagon,
};

inline const char* branch_name(Branch b) {
    switch (b) {
        case Branch::Triangular: return "triangular";
        case Branch::YPiece: return "y_piece";
        case Branch::Averaging: return "averaging";
        case Branch::ExceptionalCut5: return "exceptional_cut5";
        case Branch::ExceptionalCut4: return "exceptional_cut4";
        case Branch::SpecialCase2223: return "special_case_2223";
        case Branch::TorusPentagon: return "torus_pentagon";
    }
    return "";
}

enum class Verdict { EqualsRhoT, GreaterThanRhoT };

inline const char* verdict_name(Verdict v) {
    return v == Verdict::EqualsRhoT ? "equals_rho_T" : "greater_than_rho_T";
}

struct Certificate {
    Branch branch = Branch::Triangular;
    std::vector<Check> checks;
    Verdict verdict = Verdict::GreaterThanRhoT;
    bool pass = false;
};

// The four radii of the extremality proof, ordered rho_T < rho_P < rho_Y < rho_S.
struct Constants {
    double rho_T, t0, rho_Y, rho_P, rho_S;
};

inline const Constants& constants() {
    static const Constants c = [] {
        Constants k{};
        k.t0 = solver::rho_T_t0();
        k.rho_T = solver::rho_T();
        k.rho_Y = std::log(3.0) / 2.0;
        k.rho_P = 0.5 * std::log((9.0 + 4.0 * std::sqrt(2.0)) / 7.0);
        k.rho_S = std::asinh(2.0 / std::sqrt(3.0));
        if (!(k.rho_T < k.rho_P && k.rho_P < k.rho_Y && k.rho_Y < k.rho_S))
            fail("InconsistentSolution", "constant ordering rho_T < rho_P < rho_Y < rho_S failed");
        return k;
    }();
    return c;
}

// F_{pi/2, pi/3, pi/7}
inline double F_237(double r) {
    static const solver::CornerWeights w =
        solver::CornerWeights::from_values(std::cos(kPi / 2), std::cos(kPi / 3),
                                           std::cos(kPi / 7));
    return solver::F_eval(w, r);
}

inline Branch classify(const OrbifoldSignature& s) {
    if (!s.hyperbolic()) fail("NonHyperbolic", "signature is not hyperbolic");
    int g = s.genus, n = s.n();
    if (g == 0 && n == 3) return Branch::Triangular;
    if ((g > 0 && 3 * g + n >= 5) || (g == 0 && n >= 6)) return Branch::YPiece;
    if (g == 1 && n == 1) return Branch::TorusPentagon;
    // left with spheres with 4 or 5 singular points
    if (s.orders == std::vector<long>{2, 2, 2, 3}) return Branch::SpecialCase2223;
    double generic_avg = kPi * (1.0 - s.inv_order_sum() / (n - 2));
    if (generic_avg >= kPi / 4.0) return Branch::Averaging;
    return n == 5 ? Branch::ExceptionalCut5 : Branch::ExceptionalCut4;
}

// Guaranteed lower bound on the area of some triangle of the cut.
inline double averaging_bound(const OrbifoldSignature& s) {
    if (s.genus != 0 || (s.n() != 4 && s.n() != 5))
        fail("WrongSignature", "averaging bounds apply to spheres with 4 or 5 points");
    switch (classify(s)) {
        case Branch::Averaging:
            return orbifold_area(s) / (2.0 * (s.n() - 2));
        case Branch::ExceptionalCut5:
            return orbifold_area(s) / 4.0;
        case Branch::ExceptionalCut4:
        case Branch::SpecialCase2223: {
            auto inv = [](long p) {
                return p == kCuspOrder ? 0.0 : 1.0 / static_cast<double>(p);
            };
            return kPi * (1.0 - inv(s.orders[2]) - inv(s.orders[3]));
        }
        default:
            fail("WrongSignature", "unexpected branch");
    }
    return 0;
}

// Inradius lower bound of a triangle from its area: arctanh((1/2) sin(area/2)).
inline double disk_radius_from_area(double area) {
    if (!(area > 0.0) || !(area < 2.0 * kPi))
        fail("DomainError", "triangle area must lie in (0, 2pi)");
    return std::atanh(0.5 * std::sin(area / 2.0));
}

// Universal certificate for the sphere with cone orders (2,2,2,3), built from
// the quadrilateral relations tanh(lambda) tanh(mu) = 1/2, tanh(lambda) < 1.
inline Certificate special_case_2223_certificate() {
    const Constants& k = constants();
    hypgeom::Sides s237 =
        hypgeom::triangle_sides_from_angles(TriangleAngles(kPi / 2, kPi / 3, kPi / 7));
    double a = s237.a, c = s237.c;
    double log3_2 = std::log(3.0) / 2.0;
    double at = std::atanh(1.0 / std::sqrt(2.0));

    Certificate cert;
    cert.branch = Branch::SpecialCase2223;
    cert.verdict = Verdict::GreaterThanRhoT;
    // tanh(mu) = 1/(2 tanh(lambda)) > 1/2 = tanh(log3/2), so mu > log3/2;
    // with lambda >= mu, tanh^2(lambda) >= 1/2.
    cert.checks.push_back(check_close("tanh(log(3)/2) equals 1/2",
                                      std::tanh(log3_2), 0.5, 1e-15));
    cert.checks.push_back(check_close("tanh(arctanh(1/sqrt(2)))^2 equals 1/2",
                                      std::pow(std::tanh(at), 2), 0.5, 1e-15));
    cert.checks.push_back(check_gt("log(3)/2 > c", log3_2, c));
    cert.checks.push_back(check_gt("arctanh(1/sqrt(2)) > a", at, a));
    cert.checks.push_back(check_lt("F_{2,3,7}(log(3)/2 - c) < 0", F_237(log3_2 - c), 0.0));
    cert.checks.push_back(
        check_lt("F_{2,3,7}(arctanh(1/sqrt(2)) - a) < 0", F_237(at - a), 0.0));
    // embedding margins stay above rho_T
    cert.checks.push_back(check_gt("log(3)/2 - c > rho_T", log3_2 - c, k.rho_T));
    cert.checks.push_back(check_gt("arctanh(1/sqrt(2)) - a > rho_T", at - a, k.rho_T));
    cert.pass = all_pass(cert.checks);
    return cert;
}

namespace detail {

inline CornerSpec corner_from_order(long p) {
    return p == kCuspOrder ? CornerSpec::cusp() : CornerSpec::cone_order(p);
}

}  // namespace detail

// Main-theorem pipeline: classify and emit the inequality certificate for
// r(S) > rho_T (equality exactly at genus 0, orders (2,3,7)).
inline Certificate certify(const OrbifoldSignature& s) {
    const Constants& k = constants();
    Branch br = classify(s);
    Certificate cert;
    cert.branch = br;
    cert.verdict = Verdict::GreaterThanRhoT;
    switch (br) {
        case Branch::Triangular: {
            solver::CornerWeights w = solver::CornerWeights::from_corners(
                detail::corner_from_order(s.orders[0]), detail::corner_from_order(s.orders[1]),
                detail::corner_from_order(s.orders[2]));
            double r = solver::max_disk_radius(w);
            if (s.orders == std::vector<long>{2, 3, 7}) {
                cert.verdict = Verdict::EqualsRhoT;
                cert.checks.push_back(check_close("r equals rho_T", r, k.rho_T, 1e-9));
            } else {
                cert.checks.push_back(check_gt("r > rho_T", r, k.rho_T));
                cert.checks.push_back(check_lt("F_{2,3,7}(r) < 0", F_237(r), 0.0));
            }
            break;
        }
        case Branch::YPiece:
            cert.checks.push_back(check_lt("F_{2,3,7}(rho_Y) < 0", F_237(k.rho_Y), 0.0));
            cert.checks.push_back(check_gt("rho_Y > rho_T", k.rho_Y, k.rho_T));
            break;
        case Branch::TorusPentagon:
            cert.checks.push_back(check_lt("F_{2,3,7}(rho_P) < 0", F_237(k.rho_P), 0.0));
            cert.checks.push_back(check_gt("rho_P > rho_T", k.rho_P, k.rho_T));
            break;
        case Branch::SpecialCase2223:
            return special_case_2223_certificate();
        default: {  // Averaging / ExceptionalCut4 / ExceptionalCut5
            double bound = averaging_bound(s);
            cert.checks.push_back(check_ge("triangle area bound >= pi/4", bound, kPi / 4));
            double rt = disk_radius_from_area(bound);
            cert.checks.push_back(
                check_lt("F_{2,3,7}(disk radius from area) < 0", F_237(rt), 0.0));
            break;
        }
    }
    cert.pass = all_pass(cert.checks);
    return cert;
}

}  // namespace orbirad::certify
