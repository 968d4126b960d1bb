#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minsurf/analytic_kernel.hpp"
#include "minsurf/surface_family.hpp"
#include "minsurf/types.hpp"

namespace minsurf {

/// Uniform (u, v) sample grid, inclusive of both ends.
struct GridSpec {
    double u_min = -1.0;
    double u_max = 1.0;
    double v_min = -1.0;
    double v_max = 1.0;
    int nu = 21;
    int nv = 21;

    void validate() const;
    double u(int i) const { return nu == 1 ? u_min : u_min + (u_max - u_min) * i / (nu - 1); }
    double v(int j) const { return nv == 1 ? v_min : v_min + (v_max - v_min) * j / (nv - 1); }
    std::string describe() const;
};

struct ResidualRecord {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string context;
};

/// passed = value <= tolerance; NaN never passes.
ResidualRecord make_record(std::string name, double value, double tolerance, std::string context = {});

struct VerificationReport {
    ShapeParam shape;
    std::vector<ResidualRecord> records;

    bool overall() const;
};

/// {"theta", "records": [{"name", "value", "tolerance", "passed"}], "overall"}
std::string report_json(const VerificationReport& report);

enum class JetSource { Exact, FiniteDifference };

/// Direction of a coordinate line: U lines vary u at fixed v.
enum class Direction { U, V };

using SurfaceEvaluator = std::function<Vec3(double, double)>;
using JetProvider = std::function<FrameJet(double, double)>;

inline constexpr double kDefaultStep = 1e-3;

/// Central differences up to third order with one Richardson level
/// (steps h and h/2). step must lie in [1e-6, 1e-2].
FrameJet fd_jet(const SurfaceEvaluator& surface, double u, double v, double step = kDefaultStep);

JetProvider exact_jets(const ShapeParam& p);
JetProvider fd_jets(SurfaceEvaluator surface, double step = kDefaultStep);

// Default tolerances of the identity suite.
namespace tolerance {
inline constexpr double kExact = 1e-10;
inline constexpr double kPlanarityPde = 1e-12;
inline constexpr double kFiniteDifference = 1e-5;
inline constexpr double kMetricAgreement = 1e-9;
inline constexpr double kLinePlanarity = 1e-8;
inline constexpr double kAxialConstancy = 1e-9;
inline constexpr double kAxialOrthogonality = 1e-8;
inline constexpr double kNormalFormula = 1e-10;
inline constexpr double kPeriodicity = 1e-10;
inline constexpr double kConstancy = 1e-12;
inline constexpr double kOracle = 1e-8;
inline constexpr double kConjugate = 1e-6;
}  // namespace tolerance

/// max |H| with H from the first and second fundamental forms.
ResidualRecord check_minimality(const JetProvider& jets, const GridSpec& grid, double tol,
                                std::string name = "mean_curvature");

/// max |Q - expected| with Q = (1/4) <Xuu - 2i Xuv - Xvv, N>.
ResidualRecord check_hopf(const JetProvider& jets, const GridSpec& grid, double tol,
                          Complex expected = {-0.5, 0.0}, std::string name = "hopf");

/// max of | |Xu|^2 - |Xv|^2 | and |<Xu, Xv>|, relative to |Xu|^2.
ResidualRecord check_conformality(const JetProvider& jets, const GridSpec& grid,
                                  double tol = tolerance::kExact);

/// max | |Xu|^2 - e^{2 omega} | / e^{2 omega}: closed form against the metric.
ResidualRecord check_metric_agreement(const ShapeParam& p, const GridSpec& grid,
                                      double tol = tolerance::kMetricAgreement);

/// Residuals of the first- and second-order ODEs for f and g.
ResidualRecord check_ode(const ShapeParam& p, const GridSpec& grid, double tol = tolerance::kExact);

/// max |omega_uu + omega_vv - e^{-2 omega}|.
ResidualRecord check_liouville(const ShapeParam& p, const GridSpec& grid, JetSource source);

/// max |omega_uv + omega_u omega_v| from the exact metric jet.
ResidualRecord check_planarity_pde(const ShapeParam& p, const GridSpec& grid,
                                   double tol = tolerance::kPlanarityPde);

/// max |det(Xu, Xuu, Xuuu)| / (|Xu| |Xuu| |Xuuu|), or the v analog.
ResidualRecord check_planarity_det(const JetProvider& jets, const GridSpec& grid, Direction dir,
                                   double tol = tolerance::kFiniteDifference);

/// Smallest over largest singular value of the centered samples; zero for
/// coplanar points. Needs at least 3 points.
double planarity_ratio(std::span<const Vec3> samples);

/// Needs at least 10 samples.
ResidualRecord check_curvature_line_planarity(std::span<const Vec3> samples,
                                              double tol = tolerance::kLinePlanarity);

struct CurvatureLine {
    Direction direction = Direction::U;
    double fixed = 0.0;  // v for U lines, u for V lines
    double t_min = -1.0;
    double t_max = 1.0;
    int samples = 41;
};

std::vector<Vec3> sample_line(const SurfaceEvaluator& surface, const CurvatureLine& line);

/// Planarity of the Gauss image of a coordinate line. A constant normal
/// is reported as "point, not circle" with an infinite value.
ResidualRecord check_gauss_circles(const JetProvider& jets, const CurvatureLine& line,
                                   double tol = tolerance::kLinePlanarity);

/// Metric period 2 pi / sqrt|k| in the periodic direction; constancy for
/// the catenoid; unbounded growth for Enneper.
ResidualRecord check_periodicity(const ShapeParam& p);

/// Componentwise standard deviation of v1 (or v2) over random points,
/// relative to its norm.
ResidualRecord check_axial_constancy(const ShapeParam& p, int which, const GridSpec& domain, int count = 100,
                                     std::uint64_t seed = 7, double tol = tolerance::kAxialConstancy);

/// max |<v1/|v1|, v2/|v2|>| over the grid.
ResidualRecord check_axial_orthogonality(const ShapeParam& p, const GridSpec& grid,
                                         double tol = tolerance::kAxialOrthogonality);

/// Distance between normal_formula and the frame normal over random points,
/// with the square-root branch of the third component fixed at the origin.
ResidualRecord check_normal_formula(const ShapeParam& p, const GridSpec& domain, int count = 100,
                                    std::uint64_t seed = 11, double tol = tolerance::kNormalFormula);

/// max |integrate(lambda) - closed form| over the grid.
ResidualRecord check_weierstrass_oracle(const ShapeParam& p, const GridSpec& grid,
                                        const AssociatedParam& lam = {}, double tol = tolerance::kOracle);

/// RMS distance after the optimal proper rigid motion (no reflection).
/// Throws DomainError for mismatched, too small or degenerate inputs.
double procrustes_residual(std::span<const Vec3> a, std::span<const Vec3> b);

/// Procrustes residual between the conjugate closed form and the integrated
/// lambda^{-2} = i surface.
ResidualRecord check_conjugate_procrustes(const ShapeParam& p, const GridSpec& grid,
                                          double tol = tolerance::kConjugate);

using ToleranceOverrides = std::map<std::string, double, std::less<>>;

/// Names accepted by verify_surface overrides.
std::span<const std::string_view> record_names();

/// The full identity suite for one theta. Throws DomainError for unknown
/// override names.
VerificationReport verify_surface(const ShapeParam& p, const GridSpec& grid,
                                  const ToleranceOverrides& overrides = {});

}  // namespace minsurf
