// orbirad: maximum injectivity radius of hyperbolic triangular surfaces and
// orbifolds. Subcommands: constants, solve, certify, scan, oracle, yamada, plot.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbirad/certify.hpp"
#include "orbirad/hypgeom.hpp"
#include "orbirad/oracle.hpp"
#include "orbirad/parallel.hpp"
#include "orbirad/solver.hpp"
#include "orbirad/yamada.hpp"

using json = nlohmann::ordered_json;
using namespace orbirad;

namespace {

std::string fmt_g(double v, int digits = 17) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

double round_digits(double v, int digits) {
    return std::strtod(fmt_g(v, digits).c_str(), nullptr);
}

CornerSpec parse_corner(const std::string& tok) {
    if (tok == "cusp") return CornerSpec::cusp();
    if (tok.rfind("angle:", 0) == 0)
        return CornerSpec::cone_angle(std::stod(tok.substr(6)));
    if (tok.rfind("boundary:", 0) == 0)
        return CornerSpec::boundary(std::stod(tok.substr(9)));
    size_t used = 0;
    long k = std::stol(tok, &used);
    if (used != tok.size()) throw CLI::ValidationError("--corners", "bad corner '" + tok + "'");
    return CornerSpec::cone_order(k);
}

std::array<CornerSpec, 3> parse_corners(const std::string& spec) {
    std::array<CornerSpec, 3> out;
    std::stringstream ss(spec);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 3) throw CLI::ValidationError("--corners", "expected exactly three corners");
        out[static_cast<size_t>(i++)] = parse_corner(tok);
    }
    if (i != 3) throw CLI::ValidationError("--corners", "expected exactly three corners");
    return out;
}

TriangleAngles corners_to_angles(const std::array<CornerSpec, 3>& cs) {
    return TriangleAngles(cs[0].angle(), cs[1].angle(), cs[2].angle());
}

json check_json(const Check& c) {
    return {{"name", c.name}, {"lhs", c.lhs}, {"relation", c.relation},
            {"rhs", c.rhs}, {"pass", c.pass}};
}

json checks_json(const std::vector<Check>& cs) {
    json arr = json::array();
    for (const Check& c : cs) arr.push_back(check_json(c));
    return arr;
}

json report_json(const yamada::CheckReport& r) {
    return {{"title", r.title}, {"checks", checks_json(r.checks)},
            {"informational", checks_json(r.info)}, {"notes", r.notes}, {"pass", r.pass}};
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        f << j.dump(2) << "\n";
    }
}

std::vector<long> parse_orders(const std::string& spec) {
    std::vector<long> orders;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "inf" || tok == "cusp")
            orders.push_back(certify::kCuspOrder);
        else
            orders.push_back(std::stol(tok));
    }
    return orders;
}

std::string order_str(long p) {
    return p == certify::kCuspOrder ? "inf" : std::to_string(p);
}

// ---------------------------------------------------------------------------
// subcommand bodies

int run_constants(int digits, const std::string& out) {
    const certify::Constants& k = certify::constants();
    json j = {{"rho_T", round_digits(k.rho_T, digits)},
              {"t0", round_digits(k.t0, digits)},
              {"rho_Y", round_digits(k.rho_Y, digits)},
              {"rho_P", round_digits(k.rho_P, digits)},
              {"rho_S", round_digits(k.rho_S, digits)}};
    emit(j, out);
    return 0;
}

int run_solve(const std::string& corners, double bracket, const std::string& out) {
    auto cs = parse_corners(corners);
    auto cw = solver::CornerWeights::from_corners(cs[0], cs[1], cs[2]);
    solver::MaxDiskSolution sol = solver::solve_full(
        cw, bracket > 0 ? bracket : std::numeric_limits<double>::quiet_NaN());
    json j = {{"corners", {cs[0].describe(), cs[1].describe(), cs[2].describe()}},
              {"weights", {cw.w[0], cw.w[1], cw.w[2]}},
              {"r", sol.r},
              {"alpha_tilde", sol.alpha_tilde},
              {"beta_tilde", sol.beta_tilde},
              {"gamma_tilde", sol.gamma_tilde},
              {"theta", sol.theta},
              {"residual_max", sol.residual_max},
              {"iterations", sol.iterations}};
    emit(j, out);
    return 0;
}

int run_certify(int genus, const std::string& orders, const std::string& out) {
    certify::OrbifoldSignature sig(genus, parse_orders(orders));
    certify::Certificate cert = certify::certify(sig);
    json ord = json::array();
    for (long p : sig.orders) ord.push_back(order_str(p));
    json j = {{"genus", sig.genus},
              {"orders", ord},
              {"branch", certify::branch_name(cert.branch)},
              {"verdict", certify::verdict_name(cert.verdict)},
              {"checks", checks_json(cert.checks)},
              {"pass", cert.pass}};
    emit(j, out);
    return 0;
}

int run_scan(long grid, const std::string& out) {
    std::vector<long> values;
    for (long p = 2; p <= grid; ++p) values.push_back(p);
    values.push_back(certify::kCuspOrder);

    struct Row {
        long p, q, r;
    };
    std::vector<Row> rows;
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = i; j < values.size(); ++j)
            for (size_t k = j; k < values.size(); ++k) {
                certify::OrbifoldSignature sig(0, {values[i], values[j], values[k]});
                if (sig.hyperbolic()) rows.push_back({values[i], values[j], values[k]});
            }

    std::vector<std::string> lines(rows.size());
    parallel_for(rows.size(), [&](size_t i) {
        const Row& row = rows[i];
        certify::OrbifoldSignature sig(0, {row.p, row.q, row.r});
        certify::Certificate cert = certify::certify(sig);
        double radius = solver::max_disk_radius(solver::CornerWeights::from_corners(
            certify::detail::corner_from_order(row.p), certify::detail::corner_from_order(row.q),
            certify::detail::corner_from_order(row.r)));
        lines[i] = order_str(row.p) + "," + order_str(row.q) + "," + order_str(row.r) + "," +
                   fmt_g(radius, 12) + "," + certify::branch_name(cert.branch) + "," +
                   certify::verdict_name(cert.verdict);
    });

    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!out.empty()) {
        f.open(out);
        os = &f;
    }
    *os << "p,q,r,radius,branch,verdict\n";
    for (const std::string& l : lines) *os << l << "\n";
    return 0;
}

int run_oracle(const std::string& corners, int grid, double tol, const std::string& out) {
    auto cs = parse_corners(corners);
    for (const CornerSpec& c : cs)
        if (c.is_boundary())
            fail("DomainError", "the oracle handles cone and cusp corners only");
    oracle::OracleReport rep = oracle::crosscheck(corners_to_angles(cs), grid, tol);
    json j = {{"corners", {cs[0].describe(), cs[1].describe(), cs[2].describe()}},
              {"r_oracle", rep.r_oracle},
              {"argmax", {{"x0", rep.argmax.x0}, {"x1", rep.argmax.x1}, {"x2", rep.argmax.x2}}},
              {"r_solver", rep.r_solver},
              {"abs_diff", rep.abs_diff},
              {"grid", rep.grid},
              {"refinement_steps", rep.refinement_steps},
              {"tol", rep.tol},
              {"pass", rep.pass}};
    emit(j, out);
    return 0;
}

int run_yamada(const std::string& out) {
    std::vector<yamada::CheckReport> reports;
    reports.push_back(yamada::case_a_pants_check(yamada::rho_S()));
    reports.push_back(yamada::case_a_quad_check(yamada::rho_S()));
    reports.push_back(yamada::torus_boundary_bounds());
    reports.push_back(yamada::case_b_length_checks());
    bool pass = true;
    json arr = json::array();
    for (const auto& r : reports) {
        arr.push_back(report_json(r));
        pass = pass && r.pass;
    }
    json j = {{"rho_S", yamada::rho_S()}, {"reports", arr}, {"pass", pass}};
    emit(j, out);
    return 0;
}

// ---------------------------------------------------------------------------
// plot: Poincare-disk picture of the doubled triangle with the maximal disk,
// plus the cut-piece layout around the maximum point.

struct P2 {
    double x = 0, y = 0;
};

P2 to_poincare(const HPoint& h) { return {h.x1 / (1.0 + h.x0), h.x2 / (1.0 + h.x0)}; }

P2 ideal_to_poincare(const HPoint& n) { return {n.x1 / n.x0, n.x2 / n.x0}; }

std::string svg_num(double v) { return fmt_g(v, 8); }

// geodesic arc between two Poincare points as an SVG path segment
std::string geodesic_path(P2 z1, P2 z2) {
    double cross = z1.x * z2.y - z1.y * z2.x;
    std::string move = "M " + svg_num(z1.x) + " " + svg_num(z1.y) + " ";
    if (std::fabs(cross) < 1e-9)  // through the origin: straight chord
        return move + "L " + svg_num(z2.x) + " " + svg_num(z2.y);
    // circle orthogonal to the unit circle: 2 c.z = |z|^2 + 1 for both points
    double b1 = z1.x * z1.x + z1.y * z1.y + 1.0, b2 = z2.x * z2.x + z2.y * z2.y + 1.0;
    double det = 2.0 * (z1.x * z2.y - z1.y * z2.x);
    double cx = (b1 * z2.y - b2 * z1.y) / det;
    double cy = (z1.x * b2 - z2.x * b1) / det;
    double R = std::sqrt(cx * cx + cy * cy - 1.0);
    double sweep = ((z1.x - cx) * (z2.y - cy) - (z1.y - cy) * (z2.x - cx)) > 0 ? 1 : 0;
    return move + "A " + svg_num(R) + " " + svg_num(R) + " 0 0 " + std::to_string(sweep) +
           " " + svg_num(z2.x) + " " + svg_num(z2.y);
}

P2 vertex_point(const hypgeom::ModelVertex& v) {
    return v.ideal ? ideal_to_poincare(v.pos) : to_poincare(v.pos);
}

// Euclidean circle of the hyperbolic disk B_r(p)
void hyp_circle(const HPoint& p, double r, P2& center, double& radius) {
    P2 z = to_poincare(p);
    double d = std::sqrt(z.x * z.x + z.y * z.y);
    double rho = 2.0 * std::atanh(d);
    double tp = std::tanh((rho + r) / 2.0), tm = std::tanh((rho - r) / 2.0);
    double ex = d > 1e-15 ? z.x / d : 1.0, ey = d > 1e-15 ? z.y / d : 0.0;
    center = {(tp + tm) / 2.0 * ex, (tp + tm) / 2.0 * ey};
    radius = (tp - tm) / 2.0;
}

HPoint reflect_across(const HPoint& u, const HPoint& v, const HPoint& x) {
    // Minkowski normal of the plane through u, v
    double n0 = u.x1 * v.x2 - u.x2 * v.x1;
    double n1 = -(u.x0 * v.x2 - u.x2 * v.x0);
    double n2 = u.x0 * v.x1 - u.x1 * v.x0;
    HPoint n{n0, -n1, -n2};  // lower the index
    double nn = mink(n, n);  // negative (spacelike)
    double s = 2.0 * mink(x, n) / nn;
    return {x.x0 - s * n.x0, x.x1 - s * n.x1, x.x2 - s * n.x2};
}

int run_plot(const std::string& corners, int grid, const std::string& out) {
    auto cs = parse_corners(corners);
    for (const CornerSpec& c : cs)
        if (c.is_boundary()) fail("DomainError", "plot handles cone and cusp corners only");
    TriangleAngles t = corners_to_angles(cs);
    hypgeom::SurfaceModel m = hypgeom::place_double_triangle(t);
    oracle::GridResult g = oracle::grid_max(m, grid);
    solver::MaxDiskSolution sol =
        solver::solve_full(solver::CornerWeights::from_angles(t));

    std::ostringstream s;
    s << "<svg xmlns='http://www.w3.org/2000/svg' viewBox='-1.15 -1.15 3.6 2.3' "
         "width='900' height='575'>\n"
      << "<g transform='scale(1,-1)'>\n";

    auto panel_circle = [&](double cx) {
        s << "<circle cx='" << svg_num(cx)
          << "' cy='0' r='1' fill='none' stroke='#999' stroke-width='0.006'/>\n";
    };
    panel_circle(0.0);

    // panel 1: doubled triangle, maximal disk, radius geodesics
    std::array<P2, 3> vp;
    for (int i = 0; i < 3; ++i) vp[static_cast<size_t>(i)] = vertex_point(m.v[static_cast<size_t>(i)]);
    auto draw_tri = [&](const std::array<P2, 3>& v, const char* color) {
        for (int i = 0; i < 3; ++i)
            s << "<path d='" << geodesic_path(v[static_cast<size_t>(i)], v[static_cast<size_t>((i + 1) % 3)])
              << "' fill='none' stroke='" << color << "' stroke-width='0.008'/>\n";
    };
    draw_tri(vp, "#1f4f8f");
    // reflected copy across the side v0-v1
    std::array<P2, 3> vq = vp;
    {
        const auto& a = m.v[0].pos;
        const auto& b = m.v[1].pos;
        HPoint rc = reflect_across(a, b, m.v[2].pos);
        vq[2] = m.v[2].ideal ? ideal_to_poincare(rc) : to_poincare(hypgeom::normalized(rc));
    }
    draw_tri(vq, "#7aa6d8");

    P2 dc;
    double dr;
    hyp_circle(g.argmax, g.r, dc, dr);
    s << "<circle cx='" << svg_num(dc.x) << "' cy='" << svg_num(dc.y) << "' r='" << svg_num(dr)
      << "' fill='#e8b54f' fill-opacity='0.45' stroke='#b07a10' stroke-width='0.006'/>\n";
    P2 pz = to_poincare(g.argmax);
    s << "<circle cx='" << svg_num(pz.x) << "' cy='" << svg_num(pz.y)
      << "' r='0.012' fill='#b03030'/>\n";
    for (int i = 0; i < 3; ++i)
        s << "<path d='" << geodesic_path(pz, vp[static_cast<size_t>(i)])
          << "' fill='none' stroke='#b03030' stroke-width='0.005' stroke-dasharray='0.02 0.012'/>\n";

    // panel 2: the three corner pieces and the equilateral triangle angles
    // unfolded around the maximum point
    double cx2 = 2.3;
    panel_circle(cx2);
    double rr = std::tanh(sol.r / 2.0);
    std::array<double, 3> tilde = {sol.alpha_tilde, sol.beta_tilde, sol.gamma_tilde};
    std::array<double, 3> dist{};
    for (int i = 0; i < 3; ++i) {
        const CornerSpec& c = cs[static_cast<size_t>(i)];
        if (c.is_cusp()) {
            dist[static_cast<size_t>(i)] = 0.35;  // schematic: cusps sit at infinity
        } else if (c.angle() == kPi / 2) {
            dist[static_cast<size_t>(i)] = sol.r;
        } else {
            dist[static_cast<size_t>(i)] = std::asinh(std::sinh(sol.r) / std::sin(c.angle()));
        }
    }
    double phi = 0.0;
    s << "<circle cx='" << svg_num(cx2) << "' cy='0' r='" << svg_num(rr)
      << "' fill='#e8b54f' fill-opacity='0.45' stroke='#b07a10' stroke-width='0.006'/>\n";
    for (int i = 0; i < 3; ++i) {
        double wedge = tilde[static_cast<size_t>(i)];
        for (double edge : {phi, phi + wedge})
            s << "<line x1='" << svg_num(cx2) << "' y1='0' x2='"
              << svg_num(cx2 + rr * std::cos(edge)) << "' y2='" << svg_num(rr * std::sin(edge))
              << "' stroke='#1f4f8f' stroke-width='0.007'/>\n";
        double mid = phi + wedge / 2.0;
        double dmark = std::tanh(dist[static_cast<size_t>(i)] / 2.0);
        s << "<circle cx='" << svg_num(cx2 + dmark * std::cos(mid)) << "' cy='"
          << svg_num(dmark * std::sin(mid)) << "' r='0.014' fill='"
          << (cs[static_cast<size_t>(i)].is_cusp() ? "#3a8f3a" : "#1f4f8f") << "'/>\n";
        phi += wedge + sol.theta;  // equilateral-triangle corner between pieces
    }
    s << "</g>\n</svg>\n";

    std::ofstream f(out);
    if (!f) fail("DomainError", "cannot write " + out);
    f << s.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum injectivity radius of hyperbolic triangular surfaces and orbifolds"};
    app.require_subcommand(1);

    int digits = 17;
    std::string out_path;
    std::string corners;
    double bracket = -1.0;
    int genus = 0;
    std::string orders;
    long grid_orders = 50;
    int grid_res = 400;
    double tol = 1e-3;

    auto* c_const = app.add_subcommand("constants", "rho_T, t0, rho_Y, rho_P, rho_S as JSON");
    c_const->add_option("--digits", digits, "significant digits")->check(CLI::Range(1, 17));
    c_const->add_option("--out", out_path, "output path (default stdout)");

    auto* c_solve = app.add_subcommand("solve", "solve the maximal-disk system");
    c_solve->add_option("--corners", corners,
                        "three of: integer order, cusp, angle:<rad>, boundary:<len>")
        ->required();
    c_solve->add_option("--bracket", bracket, "upper bracket for the root search");
    c_solve->add_option("--out", out_path, "output path (default stdout)");

    auto* c_cert = app.add_subcommand("certify", "inequality certificate for a signature");
    c_cert->add_option("--genus", genus, "genus")->required();
    c_cert->add_option("--orders", orders, "comma-separated orders (inf for a cusp)")->required();
    c_cert->add_option("--out", out_path, "output path (default stdout)");

    auto* c_scan = app.add_subcommand("scan", "CSV over orbifold triples");
    c_scan->add_option("--grid", grid_orders, "max cone order (plus cusps)")
        ->check(CLI::Range(2L, 100000L));
    c_scan->add_option("--out", out_path, "output path (default stdout)");

    auto* c_oracle = app.add_subcommand("oracle", "geometric brute-force cross-check");
    c_oracle->add_option("--corners", corners, "cone orders, cusp, or angle:<rad>")->required();
    c_oracle->add_option("--grid", grid_res, "barycentric grid resolution")
        ->check(CLI::Range(16, 100000));
    c_oracle->add_option("--tol", tol, "agreement tolerance")
        ->check(CLI::Range(1e-12, 1e-3));
    c_oracle->add_option("--out", out_path, "output path (default stdout)");

    auto* c_yam = app.add_subcommand("yamada", "full Appendix check report");
    c_yam->add_option("--out", out_path, "output path (default stdout)");

    auto* c_plot = app.add_subcommand("plot", "SVG of the triangle, maximal disk and loops");
    c_plot->add_option("--corners", corners, "cone orders, cusp, or angle:<rad>")->required();
    c_plot->add_option("--grid", grid_res, "oracle resolution for the argmax")
        ->check(CLI::Range(16, 100000));
    c_plot->add_option("--out", out_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_const->parsed()) return run_constants(digits, out_path);
        if (c_solve->parsed()) return run_solve(corners, bracket, out_path);
        if (c_cert->parsed()) return run_certify(genus, orders, out_path);
        if (c_scan->parsed()) return run_scan(grid_orders, out_path);
        if (c_oracle->parsed()) return run_oracle(corners, grid_res, tol, out_path);
        if (c_yam->parsed()) return run_yamada(out_path);
        if (c_plot->parsed()) return run_plot(corners, grid_res, out_path);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
