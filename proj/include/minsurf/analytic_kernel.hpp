#pragma once

#include <cmath>

#include "minsurf/types.hpp"

namespace minsurf {

inline constexpr double kThetaMin = -kPi / 4.0;
inline constexpr double kThetaMax = 3.0 * kPi / 4.0;

/// Distance from a distinguished angle (endpoint, catenoid, Enneper) within
/// which a user-supplied theta is treated as that angle.
inline constexpr double kThetaSnap = 1e-9;

/// Below this |k x^2| the entire series is summed instead of the closed form.
inline constexpr double kSeriesThreshold = 1e-2;

/// The family parameter theta together with the derived constants
/// alpha = cos theta, beta = sin theta, k = cos 2 theta, c = alpha^2,
/// d = beta^2 and s = alpha + beta (homothety factor r = 1).
class ShapeParam {
public:
    /// Throws DomainError when theta lies outside [-pi/4, 3pi/4].
    static ShapeParam from_theta(double theta);

    double theta() const { return theta_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double k() const { return k_; }
    double c() const { return alpha_ * alpha_; }
    double d() const { return beta_ * beta_; }
    double s() const { return s_; }

    /// True at theta = -pi/4 or 3pi/4 where s = 0 and the surface is a plane.
    bool is_endpoint() const { return endpoint_; }
    /// f vanishes identically (alpha = 0).
    bool f_vanishes() const { return std::abs(alpha_) <= kThetaSnap; }
    /// g vanishes identically (beta = 0).
    bool g_vanishes() const { return std::abs(beta_) <= kThetaSnap; }

private:
    ShapeParam() = default;

    double theta_ = 0.0;
    double alpha_ = 1.0;
    double beta_ = 0.0;
    double k_ = 1.0;
    double s_ = 1.0;
    bool endpoint_ = false;
};

/// Metric factor e^omega and the exact partial derivatives of omega.
struct MetricJet {
    double expOmega = 1.0;
    double omega_u = 0.0;
    double omega_v = 0.0;
    double omega_uu = 0.0;
    double omega_uv = 0.0;
    double omega_vv = 0.0;
};

// k-analytic special functions. For real k these are entire in x and in k:
//   ck(k, x) = sum k^n x^{2n} / (2n)!        = cosh(sqrt(k) x)
//   sk(k, x) = sum k^n x^{2n+1} / (2n+1)!    = sinh(sqrt(k) x) / sqrt(k)
// and the divided excesses, which carry the removable singularity at k = 0:
//   ck_excess(k, x) = (ck(k, x) - 1) / k
//   sk_excess(k, x) = (sk(k, x) - x) / k
double ck(double k, double x);
Complex ck(double k, Complex x);
double sk(double k, double x);
Complex sk(double k, Complex x);
double ck_excess(double k, double x);
Complex ck_excess(double k, Complex x);
double sk_excess(double k, double x);
Complex sk_excess(double k, Complex x);

// Solutions of the metric ODEs with f(0) = g(0) = 0:
//   f = alpha sk(k, u),   f' = alpha ck(k, u),   f'' = k f
//   g = beta sk(-k, v),   g' = beta ck(-k, v),   g'' = -k g
double f_eval(const ShapeParam& p, double u);
double f_prime(const ShapeParam& p, double u);
double f_second(const ShapeParam& p, double u);
double g_eval(const ShapeParam& p, double v);
double g_prime(const ShapeParam& p, double v);
double g_second(const ShapeParam& p, double v);

/// e^omega = (1 + f^2 + g^2) / (f' + g') with exact partials of omega.
/// Throws DomainError at the plane endpoints.
MetricJet metric_jet(const ShapeParam& p, double u, double v);

}  // namespace minsurf
