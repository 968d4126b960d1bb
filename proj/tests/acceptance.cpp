// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "minsurf/cli.hpp"
#include "minsurf/mesh_io.hpp"
#include "minsurf/surface_family.hpp"
#include "minsurf/verifier.hpp"
#include "minsurf/weierstrass.hpp"

using namespace minsurf;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<double> kThetaSet = {-0.6, -0.3, 0.0, 0.3, kPi / 4, 1.0, kPi / 2, 2.0};
const GridSpec kUnit{-1.0, 1.0, -1.0, 1.0, 21, 21};
const GridSpec kUnit10{-1.0, 1.0, -1.0, 1.0, 10, 10};

struct Outcome {
    bool passed = true;
    std::vector<std::string> notes;

    void require(bool ok, std::string note) {
        passed = passed && ok;
        notes.push_back((ok ? "" : "[x] ") + std::move(note));
    }
    void record(std::string note) { notes.push_back(std::move(note)); }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double sup_over(const GridSpec& g, const std::function<double(double, double)>& f) {
    double worst = 0.0;
    for (int i = 0; i < g.nu; ++i) {
        for (int j = 0; j < g.nv; ++j) {
            worst = std::max(worst, f(g.u(i), g.v(j)));
        }
    }
    return worst;
}

Outcome oracle_equivalence() {
    Outcome o;
    const auto t0 = Clock::now();
    double worst = 0.0;
    double worst_theta = 0.0;
    for (double t : kThetaSet) {
        const ResidualRecord r = check_weierstrass_oracle(ShapeParam::from_theta(t), kUnit10);
        if (!(r.value <= worst)) {
            worst = r.value;
            worst_theta = t;
        }
    }
    const double elapsed = seconds_since(t0);
    o.require(worst <= 1e-8, fmt::format("max {:.2e} at theta={:.6g}", worst, worst_theta));
    o.require(elapsed <= 10.0, fmt::format("runtime {:.2f}s", elapsed));
    return o;
}

Outcome identity_suite() {
    Outcome o;
    double liou = 0, pde = 0, conf = 0, ode = 0;
    bool ok = true;
    for (double t : kThetaSet) {
        const auto p = ShapeParam::from_theta(t);
        const ResidualRecord a = check_liouville(p, kUnit, JetSource::Exact);
        const ResidualRecord b = check_planarity_pde(p, kUnit);
        const ResidualRecord c = check_conformality(exact_jets(p), kUnit);
        const ResidualRecord d = check_ode(p, kUnit);
        ok = ok && a.value <= 1e-10 && b.value <= 1e-12 && c.value <= 1e-10 && d.value <= 1e-10;
        liou = std::max(liou, a.value);
        pde = std::max(pde, b.value);
        conf = std::max(conf, c.value);
        ode = std::max(ode, d.value);
    }
    o.require(ok, fmt::format("liouville {:.1e}, w_uv+w_u*w_v {:.1e}, conformality {:.1e}, ode {:.1e}", liou, pde,
                              conf, ode));
    return o;
}

Outcome fd_suite() {
    Outcome o;
    double h = 0, q = 0, du = 0, dv = 0;
    bool ok = true;
    for (double t : kThetaSet) {
        const auto p = ShapeParam::from_theta(t);
        const JetProvider fd = fd_jets([&p](double u, double v) { return x_theta(p, u, v); });
        const ResidualRecord a = check_minimality(fd, kUnit, 1e-5);
        const ResidualRecord b = check_hopf(fd, kUnit, 1e-5);
        const ResidualRecord c = check_planarity_det(fd, kUnit, Direction::U);
        const ResidualRecord d = check_planarity_det(fd, kUnit, Direction::V);
        ok = ok && a.passed && b.passed && c.passed && d.passed;
        h = std::max(h, a.value);
        q = std::max(q, b.value);
        du = std::max(du, c.value);
        dv = std::max(dv, d.value);
    }
    o.require(ok, fmt::format("|H| {:.1e}, |Q+1/2| {:.1e}, det_u {:.1e}, det_v {:.1e} (all <= 1e-5)", h, q, du, dv));
    return o;
}

Outcome special_pins() {
    Outcome o;
    const auto cat = ShapeParam::from_theta(0.0);
    const GridSpec wide{-2.0, 2.0, -kPi, kPi, 41, 41};
    const double c = sup_over(wide, [&](double u, double v) {
        const Vec3 x = x_theta(cat, u, v);
        return std::abs(std::hypot(x.y(), x.z() + 1.0) - std::cosh(x.x()));
    });
    o.require(c <= 1e-10, fmt::format("catenoid identity {:.1e}", c));

    const auto enn = ShapeParam::from_theta(kPi / 4);
    const double e = sup_over(wide, [&](double u, double v) {
        const double d = 6.0 * kSqrt2;
        const Vec3 poly(u * (6.0 - u * u + 3.0 * v * v) / d, -v * (6.0 - v * v + 3.0 * u * u) / d,
                        (u * u - v * v) / 2.0);
        return (x_theta(enn, u, v) - poly).norm();
    });
    o.require(e <= 1e-12, fmt::format("Enneper polynomial {:.1e}", e));

    bool exact = true;
    const double a = 3.0 / kSqrt2;
    for (double t : {kThetaMin, kThetaMax}) {
        const auto p = ShapeParam::from_theta(t);
        for (int i = 0; i < wide.nu; ++i) {
            for (int j = 0; j < wide.nv; ++j) {
                const double u = wide.u(i), v = wide.v(j);
                exact = exact && x_tilde(p, u, v) == Vec3(a * u, -a * v, 0.0);
            }
        }
    }
    o.require(exact, "endpoints exactly (3/sqrt2)(u,-v,0)");
    return o;
}

std::vector<double> halving_ratios(const std::function<Vec3(double, double, double)>& family, double base,
                                   double sign) {
    const GridSpec g{-1.0, 1.0, -1.0, 1.0, 41, 41};
    std::vector<double> sups;
    for (double delta : {1e-2, 5e-3, 2.5e-3}) {
        sups.push_back(
            sup_over(g, [&](double u, double v) { return (family(base + sign * delta, u, v) - family(base, u, v)).norm(); }));
    }
    return {sups[1] / sups[0], sups[2] / sups[1]};
}

Outcome continuity() {
    Outcome o;
    auto x = [](double t, double u, double v) { return x_theta(ShapeParam::from_theta(t), u, v); };
    auto xt = [](double t, double u, double v) { return x_tilde(ShapeParam::from_theta(t), u, v); };
    struct Case {
        std::string name;
        std::vector<double> ratios;
    };
    const std::vector<Case> cases = {
        {"X at pi/4", halving_ratios(x, kPi / 4, 1.0)},
        {"X~ at -pi/4", halving_ratios(xt, kThetaMin, 1.0)},
        {"X~ at 3pi/4", halving_ratios(xt, kThetaMax, -1.0)},
    };
    for (const Case& c : cases) {
        bool ok = true;
        for (double r : c.ratios) {
            ok = ok && r >= 0.4 && r <= 0.6;
        }
        o.require(ok, fmt::format("{} ratios {:.3f},{:.3f}", c.name, c.ratios[0], c.ratios[1]));
    }
    return o;
}

Outcome axial() {
    Outcome o;
    double cons = 0, orth = 0, normal = 0;
    bool ok = true;
    for (double t : kThetaSet) {
        const auto p = ShapeParam::from_theta(t);
        for (int which : {1, 2}) {
            if ((which == 1 && p.f_vanishes()) || (which == 2 && p.g_vanishes())) {
                continue;
            }
            const ResidualRecord r = check_axial_constancy(p, which, kUnit, 100);
            ok = ok && r.value <= 1e-9;
            cons = std::max(cons, r.value);
        }
        if (!p.f_vanishes() && !p.g_vanishes()) {
            const ResidualRecord a = check_axial_orthogonality(p, kUnit);
            const ResidualRecord n = check_normal_formula(p, kUnit);
            ok = ok && a.value <= 1e-8 && n.value <= 1e-10;
            orth = std::max(orth, a.value);
            normal = std::max(normal, n.value);
        }
    }
    o.require(ok, fmt::format("constancy {:.1e}, orthogonality {:.1e}, normal formula {:.1e}", cons, orth, normal));
    return o;
}

Outcome gauss_circles() {
    Outcome o;
    double worst = 0.0;
    bool ok = true;
    for (double t : kThetaSet) {
        const auto p = ShapeParam::from_theta(t);
        for (int n = 0; n < 5; ++n) {
            const double c = -1.0 + 0.5 * n;
            for (Direction d : {Direction::U, Direction::V}) {
                const ResidualRecord r = check_gauss_circles(exact_jets(p), {d, c});
                ok = ok && r.value <= 1e-8;
                worst = std::max(worst, r.value);
            }
        }
    }
    o.require(ok, fmt::format("10 lines x 8 thetas, max ratio {:.1e}", worst));

    // Sphere with spiral u-lines; its Gauss map is the identity.
    auto sphere = [](double u, double v) {
        return Vec3(std::cos(u) * std::cos(v + 2 * u), std::cos(u) * std::sin(v + 2 * u), std::sin(u));
    };
    JetProvider sphere_jets = [&](double u, double v) {
        FrameJet j;
        j.X = sphere(u, v);
        j.N = j.X;
        return j;
    };
    const ResidualRecord s = check_gauss_circles(sphere_jets, {Direction::U, 0.0});
    std::vector<Vec3> helix;
    for (int i = 0; i < 41; ++i) {
        const double t = -2.0 + 0.1 * i;
        helix.emplace_back(std::cos(t), std::sin(t), 0.3 * t);
    }
    const ResidualRecord h = check_curvature_line_planarity(helix);
    o.require(!s.passed && s.value > 1e-2, fmt::format("sphere control {:.2e} rejected", s.value));
    o.require(!h.passed && h.value > 1e-2, fmt::format("helix control {:.2e} rejected", h.value));
    return o;
}

Outcome periodicity() {
    Outcome o;
    const ResidualRecord a = check_periodicity(ShapeParam::from_theta(0.3));
    const ResidualRecord b = check_periodicity(ShapeParam::from_theta(2.0));
    const ResidualRecord c = check_periodicity(ShapeParam::from_theta(0.0));
    o.require(a.name == "metric_period_v" && a.value <= 1e-10, fmt::format("v-period theta=0.3 {:.1e}", a.value));
    o.require(b.name == "metric_period_u" && b.value <= 1e-10, fmt::format("u-period theta=2.0 {:.1e}", b.value));
    o.require(c.name == "metric_constant_v" && c.value <= 1e-12, fmt::format("v-constancy theta=0 {:.1e}", c.value));
    return o;
}

Outcome conjugate_family() {
    Outcome o;
    for (double t : {-0.3, 0.0, 0.2}) {
        const ResidualRecord r = check_conjugate_procrustes(ShapeParam::from_theta(t), kUnit10);
        o.require(r.value <= 1e-6, fmt::format("theta={} {:.1e}", t, r.value));
    }
    for (double t : {1.0, 2.0}) {
        const ResidualRecord r = check_conjugate_procrustes(ShapeParam::from_theta(t), kUnit10);
        o.record(fmt::format("recorded theta={} {:.1e}", t, r.value));
    }
    // The literal printed formula, for the record only.
    for (double t : {0.2, 1.0}) {
        const auto p = ShapeParam::from_theta(t);
        std::vector<Vec3> printed, integrated;
        for (int i = 0; i < kUnit10.nu; ++i) {
            for (int j = 0; j < kUnit10.nv; ++j) {
                printed.push_back(x_conjugate_printed(p, kUnit10.u(i), kUnit10.v(j)));
                integrated.push_back(integrate(p, {kUnit10.u(i), kUnit10.v(j)}, AssociatedParam::conjugate()));
            }
        }
        o.record(fmt::format("printed form theta={} {:.1e}", t, procrustes_residual(printed, integrated)));
    }
    return o;
}

Outcome tooling(Clock::time_point suite_start) {
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / "minsurf_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);

    const MeshGrid mesh = sample_grid(ShapeParam::from_theta(0.3), {-2.0, 2.0, -kPi, kPi, 33, 33});
    export_obj(mesh, dir / "rt.obj");
    const ObjData back = import_obj(dir / "rt.obj");
    bool lossless = back.vertices.size() == mesh.positions.size() && back.normals.size() == mesh.normals.size();
    for (std::size_t i = 0; lossless && i < back.vertices.size(); ++i) {
        lossless = back.vertices[i] == mesh.positions[i] && back.normals[i] == mesh.normals[i];
    }
    o.require(lossless, "OBJ round trip bit-exact");

    std::ostringstream sink;
    const int pass = cli::run({"minsurf", "verify", "--theta", "0.3", "--report", (dir / "a.json").string()}, sink,
                              sink);
    const int fail = cli::run({"minsurf", "verify", "--theta", "0.3", "--tol", "hopf_fd=1e-18", "--report",
                               (dir / "b.json").string()},
                              sink, sink);
    const int usage = cli::run({"minsurf", "verify", "--theta", "5.0"}, sink, sink);
    o.require(pass == 0 && fail == 2 && usage == 1, fmt::format("verify exit codes {}/{}/{}", pass, fail, usage));
    fs::remove_all(dir);

    const double elapsed = seconds_since(suite_start);
    o.require(elapsed < 120.0, fmt::format("acceptance runtime {:.1f}s < 120s", elapsed));
    return o;
}

}  // namespace

int main() {
    const auto start = Clock::now();
    struct Criterion {
        int id;
        std::string title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence", oracle_equivalence},
        {2, "identity suite (exact jets)", identity_suite},
        {3, "finite-difference suite", fd_suite},
        {4, "special-surface pins", special_pins},
        {5, "continuity", continuity},
        {6, "axial directions and normal", axial},
        {7, "Gauss-map circles", gauss_circles},
        {8, "periodicity", periodicity},
        {9, "conjugate family", conjugate_family},
        {10, "tooling", [start] { return tooling(start); }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.notes = {fmt::format("exception: {}", e.what())};
        }
        failures += !o.passed;
        std::string notes;
        for (const std::string& n : o.notes) {
            notes += (notes.empty() ? "" : "; ") + n;
        }
        std::cout << fmt::format("{} {:>2} {}: {}\n", o.passed ? "PASS" : "FAIL", c.id, c.title, notes);
    }
    std::cout << fmt::format("{}/{} criteria passed in {:.1f}s\n", criteria.size() - failures, criteria.size(),
                             seconds_since(start));
    return failures == 0 ? 0 : 1;
}
