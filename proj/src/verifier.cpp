#include "minsurf/verifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>
#include <fmt/format.h>
#include <json.hpp>

#include "minsurf/weierstrass.hpp"

namespace minsurf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Running maximum that propagates NaN so a broken evaluation cannot pass.
struct MaxTracker {
    double value = 0.0;
    void add(double x) {
        if (std::isnan(x) || std::isnan(value)) {
            value = std::numeric_limits<double>::quiet_NaN();
        } else {
            value = std::max(value, x);
        }
    }
};

template <class F>
void for_each_point(const GridSpec& grid, F&& f) {
    for (int i = 0; i < grid.nu; ++i) {
        for (int j = 0; j < grid.nv; ++j) {
            f(grid.u(i), grid.v(j));
        }
    }
}

std::string theta_context(const ShapeParam& p, const GridSpec& grid) {
    return fmt::format("theta={:.17g} {}", p.theta(), grid.describe());
}

std::vector<std::pair<double, double>> random_points(const GridSpec& domain, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> du(domain.u_min, domain.u_max);
    std::uniform_real_distribution<double> dv(domain.v_min, domain.v_max);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(count);
    for (int n = 0; n < count; ++n) {
        const double u = du(rng);
        pts.emplace_back(u, dv(rng));
    }
    return pts;
}

std::vector<CurvatureLine> default_lines(const GridSpec& grid) {
    std::vector<CurvatureLine> lines;
    for (int n = 0; n < 5; ++n) {
        lines.push_back({Direction::U, grid.v_min + (grid.v_max - grid.v_min) * n / 4.0, grid.u_min, grid.u_max, 41});
    }
    for (int n = 0; n < 5; ++n) {
        lines.push_back({Direction::V, grid.u_min + (grid.u_max - grid.u_min) * n / 4.0, grid.v_min, grid.v_max, 41});
    }
    return lines;
}

std::string_view direction_name(Direction d) { return d == Direction::U ? "u" : "v"; }

}  // namespace

void GridSpec::validate() const {
    if (nu < 1 || nv < 1) {
        throw DomainError("grid resolution must be positive");
    }
    if (!(u_max > u_min) || !(v_max > v_min)) {
        throw DomainError("grid domain must be strictly increasing in u and v");
    }
    if (nu < 2 || nv < 2) {
        throw DomainError("grid needs at least two samples per axis");
    }
}

std::string GridSpec::describe() const {
    return fmt::format("[{},{}]x[{},{}] {}x{}", u_min, u_max, v_min, v_max, nu, nv);
}

ResidualRecord make_record(std::string name, double value, double tolerance, std::string context) {
    ResidualRecord r;
    r.name = std::move(name);
    r.value = value;
    r.tolerance = tolerance;
    r.passed = value <= tolerance;
    r.context = std::move(context);
    return r;
}

bool VerificationReport::overall() const {
    return std::all_of(records.begin(), records.end(), [](const ResidualRecord& r) { return r.passed; });
}

std::string report_json(const VerificationReport& report) {
    using nlohmann::json;
    json records = json::array();
    for (const ResidualRecord& r : report.records) {
        json item;
        item["name"] = r.name;
        // JSON has no infinity or NaN; such values are emitted as null.
        if (std::isfinite(r.value)) {
            item["value"] = r.value;
        } else {
            item["value"] = nullptr;
        }
        item["tolerance"] = r.tolerance;
        item["passed"] = r.passed;
        records.push_back(std::move(item));
    }
    json doc;
    doc["theta"] = report.shape.theta();
    doc["records"] = std::move(records);
    doc["overall"] = report.overall();
    return doc.dump(2) + "\n";
}

FrameJet fd_jet(const SurfaceEvaluator& surface, double u, double v, double step) {
    if (!(step >= 1e-6 && step <= 1e-2)) {
        throw DomainError("finite-difference step must lie in [1e-6, 1e-2]");
    }
    const Vec3 x0 = surface(u, v);
    auto at = [&](double du, double dv) { return surface(u + du, v + dv); };

    auto level = [&](double h) {
        const Vec3 pu = at(h, 0), mu = at(-h, 0), pv = at(0, h), mv = at(0, -h);
        const Vec3 pp = at(h, h), pm = at(h, -h), mp = at(-h, h), mm = at(-h, -h);
        const Vec3 p2u = at(2 * h, 0), m2u = at(-2 * h, 0), p2v = at(0, 2 * h), m2v = at(0, -2 * h);
        const double h2 = h * h;
        const double h3 = h2 * h;
        FrameJet j;
        j.Xu = (pu - mu) / (2 * h);
        j.Xv = (pv - mv) / (2 * h);
        j.Xuu = (pu - 2 * x0 + mu) / h2;
        j.Xvv = (pv - 2 * x0 + mv) / h2;
        j.Xuv = (pp - pm - mp + mm) / (4 * h2);
        j.Xuuu = (p2u - 2 * pu + 2 * mu - m2u) / (2 * h3);
        j.Xvvv = (p2v - 2 * pv + 2 * mv - m2v) / (2 * h3);
        j.Xuuv = ((pp - 2 * pv + mp) - (pm - 2 * mv + mm)) / (2 * h3);
        j.Xuvv = ((pp - 2 * pu + pm) - (mp - 2 * mu + mm)) / (2 * h3);
        return j;
    };

    // Third partials are roundoff-limited at 1e-3, so they use the wider
    // pair (2h, h) while lower orders use (h, h/2).
    const FrameJet wide = level(2 * step);
    const FrameJet coarse = level(step);
    const FrameJet fine = level(step / 2);
    auto extrapolate = [](const Vec3& c, const Vec3& f) -> Vec3 { return (4.0 * f - c) / 3.0; };

    FrameJet j;
    j.X = x0;
    j.Xu = extrapolate(coarse.Xu, fine.Xu);
    j.Xv = extrapolate(coarse.Xv, fine.Xv);
    j.Xuu = extrapolate(coarse.Xuu, fine.Xuu);
    j.Xuv = extrapolate(coarse.Xuv, fine.Xuv);
    j.Xvv = extrapolate(coarse.Xvv, fine.Xvv);
    j.Xuuu = extrapolate(wide.Xuuu, coarse.Xuuu);
    j.Xuuv = extrapolate(wide.Xuuv, coarse.Xuuv);
    j.Xuvv = extrapolate(wide.Xuvv, coarse.Xuvv);
    j.Xvvv = extrapolate(wide.Xvvv, coarse.Xvvv);
    j.N = j.Xu.cross(j.Xv).normalized();
    return j;
}

JetProvider exact_jets(const ShapeParam& p) {
    return [p](double u, double v) { return x_theta_jet(p, u, v); };
}

JetProvider fd_jets(SurfaceEvaluator surface, double step) {
    return [surface = std::move(surface), step](double u, double v) { return fd_jet(surface, u, v, step); };
}

ResidualRecord check_minimality(const JetProvider& jets, const GridSpec& grid, double tol, std::string name) {
    grid.validate();
    MaxTracker worst;
    for_each_point(grid, [&](double u, double v) {
        const FrameJet j = jets(u, v);
        const double E = j.Xu.dot(j.Xu);
        const double F = j.Xu.dot(j.Xv);
        const double G = j.Xv.dot(j.Xv);
        const double L = j.Xuu.dot(j.N);
        const double M = j.Xuv.dot(j.N);
        const double Nn = j.Xvv.dot(j.N);
        worst.add(std::abs((L * G - 2 * M * F + Nn * E) / (2 * (E * G - F * F))));
    });
    return make_record(std::move(name), worst.value, tol, grid.describe());
}

ResidualRecord check_hopf(const JetProvider& jets, const GridSpec& grid, double tol, Complex expected,
                          std::string name) {
    grid.validate();
    MaxTracker worst;
    for_each_point(grid, [&](double u, double v) {
        const FrameJet j = jets(u, v);
        const Complex q = 0.25 * Complex(j.Xuu.dot(j.N) - j.Xvv.dot(j.N), -2.0 * j.Xuv.dot(j.N));
        worst.add(std::abs(q - expected));
    });
    return make_record(std::move(name), worst.value, tol, grid.describe());
}

ResidualRecord check_conformality(const JetProvider& jets, const GridSpec& grid, double tol) {
    grid.validate();
    MaxTracker worst;
    for_each_point(grid, [&](double u, double v) {
        const FrameJet j = jets(u, v);
        const double E = j.Xu.squaredNorm();
        worst.add(std::abs(E - j.Xv.squaredNorm()) / E);
        worst.add(std::abs(j.Xu.dot(j.Xv)) / E);
    });
    return make_record("conformality", worst.value, tol, grid.describe());
}

ResidualRecord check_metric_agreement(const ShapeParam& p, const GridSpec& grid, double tol) {
    grid.validate();
    MaxTracker worst;
    for_each_point(grid, [&](double u, double v) {
        const double e2 = std::pow(metric_jet(p, u, v).expOmega, 2);
        worst.add(std::abs(x_theta_jet(p, u, v).Xu.squaredNorm() - e2) / e2);
    });
    return make_record("metric_agreement", worst.value, tol, theta_context(p, grid));
}

ResidualRecord check_ode(const ShapeParam& p, const GridSpec& grid, double tol) {
    grid.validate();
    const double c = p.c();
    const double d = p.d();
    MaxTracker worst;
    for (int i = 0; i < grid.nu; ++i) {
        const double u = grid.u(i);
        const double f = f_eval(p, u);
        const double fu = f_prime(p, u);
        worst.add(std::abs(fu * fu - ((c - d) * f * f + c)));
        worst.add(std::abs(f_second(p, u) - (c - d) * f));
    }
    for (int j = 0; j < grid.nv; ++j) {
        const double v = grid.v(j);
        const double g = g_eval(p, v);
        const double gv = g_prime(p, v);
        worst.add(std::abs(gv * gv - ((d - c) * g * g + d)));
        worst.add(std::abs(g_second(p, v) - (d - c) * g));
    }
    return make_record("ode_residual", worst.value, tol, theta_context(p, grid));
}

ResidualRecord check_liouville(const ShapeParam& p, const GridSpec& grid, JetSource source) {
    grid.validate();
    MaxTracker worst;
    if (source == JetSource::Exact) {
        for_each_point(grid, [&](double u, double v) {
            const MetricJet m = metric_jet(p, u, v);
            worst.add(std::abs(m.omega_uu + m.omega_vv - 1.0 / (m.expOmega * m.expOmega)));
        });
        return make_record("liouville_exact", worst.value, tolerance::kExact, theta_context(p, grid));
    }
    const SurfaceEvaluator omega = [&p](double u, double v) {
        return Vec3(std::log(metric_jet(p, u, v).expOmega), 0.0, 0.0);
    };
    for_each_point(grid, [&](double u, double v) {
        const FrameJet j = fd_jet(omega, u, v);
        const double w = j.X.x();
        worst.add(std::abs(j.Xuu.x() + j.Xvv.x() - std::exp(-2.0 * w)));
    });
    return make_record("liouville_fd", worst.value, tolerance::kFiniteDifference, theta_context(p, grid));
}

ResidualRecord check_planarity_pde(const ShapeParam& p, const GridSpec& grid, double tol) {
    grid.validate();
    MaxTracker worst;
    for_each_point(grid, [&](double u, double v) {
        const MetricJet m = metric_jet(p, u, v);
        worst.add(std::abs(m.omega_uv + m.omega_u * m.omega_v));
    });
    return make_record("planarity_pde", worst.value, tol, theta_context(p, grid));
}

ResidualRecord check_planarity_det(const JetProvider& jets, const GridSpec& grid, Direction dir, double tol) {
    grid.validate();
    MaxTracker worst;
    for_each_point(grid, [&](double u, double v) {
        const FrameJet j = jets(u, v);
        const Vec3& a = dir == Direction::U ? j.Xu : j.Xv;
        const Vec3& b = dir == Direction::U ? j.Xuu : j.Xvv;
        const Vec3& c = dir == Direction::U ? j.Xuuu : j.Xvvv;
        const double scale = a.norm() * b.norm() * c.norm();
        // A curve with vanishing acceleration or jerk is planar at that point.
        if (scale == 0.0) {
            return;
        }
        worst.add(std::abs(a.dot(b.cross(c))) / scale);
    });
    return make_record(fmt::format("planarity_det_{}", direction_name(dir)), worst.value, tol, grid.describe());
}

double planarity_ratio(std::span<const Vec3> samples) {
    if (samples.size() < 3) {
        throw DomainError("planarity needs at least three points");
    }
    Eigen::MatrixXd m(samples.size(), 3);
    Vec3 mean = Vec3::Zero();
    for (const Vec3& s : samples) {
        mean += s;
    }
    mean /= static_cast<double>(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        m.row(static_cast<Eigen::Index>(i)) = (samples[i] - mean).transpose();
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const Eigen::VectorXd sv = svd.singularValues();
    if (sv(0) == 0.0) {
        return 0.0;
    }
    return sv(2) / sv(0);
}

ResidualRecord check_curvature_line_planarity(std::span<const Vec3> samples, double tol) {
    if (samples.size() < 10) {
        throw DomainError("curvature-line planarity needs at least 10 samples");
    }
    return make_record("curvature_line_planarity", planarity_ratio(samples), tol,
                       fmt::format("{} samples", samples.size()));
}

std::vector<Vec3> sample_line(const SurfaceEvaluator& surface, const CurvatureLine& line) {
    if (line.samples < 2) {
        throw DomainError("a line needs at least two samples");
    }
    std::vector<Vec3> pts;
    pts.reserve(line.samples);
    for (int n = 0; n < line.samples; ++n) {
        const double t = line.t_min + (line.t_max - line.t_min) * n / (line.samples - 1);
        pts.push_back(line.direction == Direction::U ? surface(t, line.fixed) : surface(line.fixed, t));
    }
    return pts;
}

ResidualRecord check_gauss_circles(const JetProvider& jets, const CurvatureLine& line, double tol) {
    const std::vector<Vec3> normals = sample_line([&](double u, double v) { return jets(u, v).N; }, line);
    const std::string context =
        fmt::format("{}-line at {}={:.17g}", direction_name(line.direction),
                    line.direction == Direction::U ? "v" : "u", line.fixed);
    double spread = 0.0;
    for (const Vec3& n : normals) {
        spread = std::max(spread, (n - normals.front()).norm());
    }
    if (spread <= 1e-12) {
        return make_record("gauss_circles", kInf, tol, context + ": point, not circle");
    }
    return make_record("gauss_circles", planarity_ratio(normals), tol, context);
}

ResidualRecord check_periodicity(const ShapeParam& p) {
    if (p.is_endpoint()) {
        throw DomainError("metric undefined at plane endpoints");
    }
    const GridSpec grid;
    auto e = [&p](double u, double v) { return metric_jet(p, u, v).expOmega; };
    const std::string ctx = theta_context(p, grid);
    MaxTracker worst;
    switch (classify(p.theta())) {
        case SurfaceClass::Catenoid: {
            // f or g vanishes: the metric is constant along that direction.
            const bool v_const = p.g_vanishes();
            for_each_point(grid, [&](double u, double v) {
                worst.add(std::abs(v_const ? e(u, v) - e(u, 0.0) : e(u, v) - e(0.0, v)));
            });
            return make_record(v_const ? "metric_constant_v" : "metric_constant_u", worst.value,
                               tolerance::kConstancy, ctx);
        }
        case SurfaceClass::Enneper: {
            // Neither direction is periodic; the metric grows without bound.
            constexpr double kReach = 10.0;
            const double ratio = std::max(e(0.0, 0.0) / e(kReach, 0.0), e(0.0, 0.0) / e(0.0, kReach));
            return make_record("metric_aperiodic_growth", ratio, 0.5,
                               fmt::format("theta={:.17g} e^w(0,0)/e^w at distance {}", p.theta(), kReach));
        }
        default: break;
    }
    const double period = 2.0 * kPi / std::sqrt(std::abs(p.k()));
    const bool v_periodic = p.k() > 0.0;
    for_each_point(grid, [&](double u, double v) {
        worst.add(std::abs(v_periodic ? e(u, v + period) - e(u, v) : e(u + period, v) - e(u, v)));
    });
    return make_record(v_periodic ? "metric_period_v" : "metric_period_u", worst.value, tolerance::kPeriodicity,
                       fmt::format("{} period={:.17g}", ctx, period));
}

ResidualRecord check_axial_constancy(const ShapeParam& p, int which, const GridSpec& domain, int count,
                                     std::uint64_t seed, double tol) {
    if (which != 1 && which != 2) {
        throw DomainError("axial direction index must be 1 or 2");
    }
    std::vector<Vec3> samples;
    for (const auto& [u, v] : random_points(domain, count, seed)) {
        const AxialDirections axes = axial_directions(p, u, v);
        const std::optional<Vec3>& a = which == 1 ? axes.v1 : axes.v2;
        if (!a) {
            throw DomainError(fmt::format("axial direction v{} does not exist at theta={}", which, p.theta()));
        }
        samples.push_back(*a);
    }
    Vec3 mean = Vec3::Zero();
    for (const Vec3& s : samples) {
        mean += s;
    }
    mean /= static_cast<double>(samples.size());
    Vec3 var = Vec3::Zero();
    for (const Vec3& s : samples) {
        var += (s - mean).cwiseAbs2();
    }
    const Vec3 stddev = (var / static_cast<double>(samples.size())).cwiseSqrt();
    return make_record(fmt::format("axial_v{}_constancy", which), stddev.maxCoeff() / mean.norm(), tol,
                       fmt::format("theta={:.17g} {} random points", p.theta(), count));
}

ResidualRecord check_axial_orthogonality(const ShapeParam& p, const GridSpec& grid, double tol) {
    grid.validate();
    MaxTracker worst;
    for_each_point(grid, [&](double u, double v) {
        const AxialDirections axes = axial_directions(p, u, v);
        if (!axes.v1 || !axes.v2) {
            throw DomainError("axial orthogonality needs both axial directions");
        }
        worst.add(std::abs(axes.v1->normalized().dot(axes.v2->normalized())));
    });
    return make_record("axial_orthogonality", worst.value, tol, theta_context(p, grid));
}

ResidualRecord check_normal_formula(const ShapeParam& p, const GridSpec& domain, int count, std::uint64_t seed,
                                    double tol) {
    const double branch = normal_formula(p, 0.0, 0.0).z() * x_theta_jet(p, 0.0, 0.0).N.z() < 0.0 ? -1.0 : 1.0;
    MaxTracker worst;
    for (const auto& [u, v] : random_points(domain, count, seed)) {
        Vec3 n = normal_formula(p, u, v);
        n.z() *= branch;
        worst.add((n - x_theta_jet(p, u, v).N).norm());
    }
    return make_record("normal_formula", worst.value, tol,
                       fmt::format("theta={:.17g} {} random points, sqrt branch {:+}", p.theta(), count, branch));
}

ResidualRecord check_weierstrass_oracle(const ShapeParam& p, const GridSpec& grid, const AssociatedParam& lam,
                                        double tol) {
    grid.validate();
    MaxTracker worst;
    for_each_point(grid, [&](double u, double v) {
        worst.add((integrate(p, {u, v}, lam) - x_associated(p, lam, u, v)).norm());
    });
    return make_record("weierstrass_oracle", worst.value, tol, theta_context(p, grid));
}

double procrustes_residual(std::span<const Vec3> a, std::span<const Vec3> b) {
    if (a.size() != b.size()) {
        throw DomainError("Procrustes needs point sets of equal size");
    }
    if (a.size() < 4) {
        throw DomainError("Procrustes needs at least four points");
    }
    const auto n = static_cast<double>(a.size());
    Vec3 ca = Vec3::Zero();
    Vec3 cb = Vec3::Zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        ca += a[i];
        cb += b[i];
    }
    ca /= n;
    cb /= n;

    Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
    Eigen::Matrix3d spread = Eigen::Matrix3d::Zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        cov += (a[i] - ca) * (b[i] - cb).transpose();
        spread += (a[i] - ca) * (a[i] - ca).transpose();
    }
    const Eigen::JacobiSVD<Eigen::Matrix3d> spread_svd(spread);
    if (spread_svd.singularValues()(1) <= 1e-24 * std::max(1.0, spread_svd.singularValues()(0))) {
        throw DomainError("Procrustes point set is degenerate (collinear)");
    }

    const Eigen::JacobiSVD<Eigen::Matrix3d> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d fix = Eigen::Matrix3d::Identity();
    fix(2, 2) = (svd.matrixV() * svd.matrixU().transpose()).determinant() < 0.0 ? -1.0 : 1.0;
    const Eigen::Matrix3d rot = svd.matrixV() * fix * svd.matrixU().transpose();

    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += (rot * (a[i] - ca) - (b[i] - cb)).squaredNorm();
    }
    return std::sqrt(sum / n);
}

ResidualRecord check_conjugate_procrustes(const ShapeParam& p, const GridSpec& grid, double tol) {
    grid.validate();
    const AssociatedParam conj = AssociatedParam::conjugate();
    std::vector<Vec3> closed;
    std::vector<Vec3> integrated;
    for_each_point(grid, [&](double u, double v) {
        closed.push_back(x_conjugate_unscaled(p, u, v));
        integrated.push_back(integrate(p, {u, v}, conj));
    });
    return make_record("conjugate_procrustes", procrustes_residual(closed, integrated), tol, theta_context(p, grid));
}

std::span<const std::string_view> record_names() {
    static constexpr std::array<std::string_view, 27> kNames = {
        "ode_residual",        "liouville_exact",         "liouville_fd",          "planarity_pde",
        "conformality",        "metric_agreement",        "mean_curvature_exact",  "mean_curvature_fd",
        "hopf_exact",          "hopf_fd",                 "planarity_det_u",       "planarity_det_v",
        "curvature_line_planarity", "gauss_circles",      "metric_period_u",       "metric_period_v",
        "metric_constant_u",   "metric_constant_v",       "metric_aperiodic_growth", "axial_v1_constancy",
        "axial_v2_constancy",  "axial_orthogonality",     "normal_formula",        "weierstrass_oracle",
        "conjugate_procrustes", "plane_flatness",         "plane_normal_constancy",
    };
    return kNames;
}

VerificationReport verify_surface(const ShapeParam& p, const GridSpec& grid, const ToleranceOverrides& overrides) {
    grid.validate();
    const auto names = record_names();
    for (const auto& [name, value] : overrides) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw DomainError(fmt::format("unknown tolerance name '{}'", name));
        }
        if (!(value > 0.0)) {
            throw DomainError(fmt::format("tolerance '{}' must be positive", name));
        }
    }

    VerificationReport report{p, {}};
    auto& out = report.records;

    if (p.is_endpoint()) {
        const SurfaceEvaluator plane = [&p](double u, double v) { return x_tilde(p, u, v); };
        out.push_back(check_minimality(fd_jets(plane), grid, tolerance::kFiniteDifference, "mean_curvature_fd"));
        MaxTracker flat;
        MaxTracker turn;
        const Vec3 n0 = x_tilde_jet(p, 0.0, 0.0).N;
        for_each_point(grid, [&](double u, double v) {
            flat.add(std::abs(x_tilde(p, u, v).z()));
            turn.add((x_tilde_jet(p, u, v).N - n0).norm());
        });
        out.push_back(make_record("plane_flatness", flat.value, tolerance::kConstancy, grid.describe()));
        out.push_back(make_record("plane_normal_constancy", turn.value, tolerance::kConstancy, grid.describe()));
    } else {
        const JetProvider exact = exact_jets(p);
        const JetProvider fd = fd_jets([&p](double u, double v) { return x_theta(p, u, v); });

        out.push_back(check_ode(p, grid));
        out.push_back(check_liouville(p, grid, JetSource::Exact));
        out.push_back(check_liouville(p, grid, JetSource::FiniteDifference));
        out.push_back(check_planarity_pde(p, grid));
        out.push_back(check_conformality(exact, grid));
        out.push_back(check_metric_agreement(p, grid));
        out.push_back(check_minimality(exact, grid, tolerance::kExact, "mean_curvature_exact"));
        out.push_back(check_minimality(fd, grid, tolerance::kFiniteDifference, "mean_curvature_fd"));
        out.push_back(check_hopf(exact, grid, tolerance::kExact, {-0.5, 0.0}, "hopf_exact"));
        out.push_back(check_hopf(fd, grid, tolerance::kFiniteDifference, {-0.5, 0.0}, "hopf_fd"));
        out.push_back(check_planarity_det(fd, grid, Direction::U));
        out.push_back(check_planarity_det(fd, grid, Direction::V));

        const SurfaceEvaluator surface = [&p](double u, double v) { return x_theta(p, u, v); };
        ResidualRecord lines = make_record("curvature_line_planarity", 0.0, tolerance::kLinePlanarity);
        ResidualRecord circles = make_record("gauss_circles", 0.0, tolerance::kLinePlanarity);
        for (const CurvatureLine& line : default_lines(grid)) {
            const ResidualRecord l = check_curvature_line_planarity(sample_line(surface, line));
            const ResidualRecord c = check_gauss_circles(exact, line);
            if (!(l.value <= lines.value)) {
                lines = l;
            }
            if (!(c.value <= circles.value)) {
                circles = c;
            }
        }
        lines.context = fmt::format("max over 10 coordinate lines, {}", theta_context(p, grid));
        if (circles.context.find("point") == std::string::npos) {
            circles.context = fmt::format("max over 10 coordinate lines, {}", theta_context(p, grid));
        }
        out.push_back(lines);
        out.push_back(circles);

        out.push_back(check_periodicity(p));
        if (!p.f_vanishes()) {
            out.push_back(check_axial_constancy(p, 1, grid));
        }
        if (!p.g_vanishes()) {
            out.push_back(check_axial_constancy(p, 2, grid));
        }
        if (!p.f_vanishes() && !p.g_vanishes()) {
            out.push_back(check_axial_orthogonality(p, grid));
            out.push_back(check_normal_formula(p, grid));
        }
        GridSpec coarse = grid;
        coarse.nu = std::min(grid.nu, 10);
        coarse.nv = std::min(grid.nv, 10);
        out.push_back(check_weierstrass_oracle(p, coarse));
        out.push_back(check_conjugate_procrustes(p, coarse));
    }

    for (ResidualRecord& r : out) {
        if (const auto it = overrides.find(r.name); it != overrides.end()) {
            r.tolerance = it->second;
            r.passed = r.value <= r.tolerance;
        }
    }
    return report;
}

}  // namespace minsurf
