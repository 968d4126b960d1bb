#include "minsurf/analytic_kernel.hpp"

#include <cmath>

namespace minsurf {

namespace {

constexpr double kSnapExact = 1e-14;
constexpr double kTermCutoff = 1e-18;
constexpr int kMaxTerms = 64;

double magnitude(double x) { return std::abs(x); }
double magnitude(const Complex& x) { return std::abs(x); }
double magnitude_sq(double x) { return x * x; }
double magnitude_sq(const Complex& x) { return std::norm(x); }

bool use_series(double k, double x_sq) { return std::abs(k) * x_sq < kSeriesThreshold; }

// Sums first + sum_{n>=1} first * prod_{m<=n} ratio(m), where the term ratio
// is k x^2 / (a_m (a_m + 1)) with a_m = 2m + offset - 1.
template <class T>
T series(T first, double k, T x, int offset) {
    const T step = k * x * x;
    T term = first;
    T sum = first;
    for (int n = 1; n < kMaxTerms; ++n) {
        const double a = 2.0 * n + offset - 1.0;
        term *= step / (a * (a + 1.0));
        sum += term;
        if (magnitude(term) <= kTermCutoff * magnitude(sum)) {
            break;
        }
    }
    return sum;
}

template <class T>
T ck_impl(double k, T x) {
    if (use_series(k, magnitude_sq(x))) {
        return series<T>(T(1.0), k, x, 0);
    }
    if (k > 0.0) {
        return std::cosh(std::sqrt(k) * x);
    }
    return std::cos(std::sqrt(-k) * x);
}

template <class T>
T sk_impl(double k, T x) {
    if (use_series(k, magnitude_sq(x))) {
        return series<T>(x, k, x, 1);
    }
    if (k > 0.0) {
        const double q = std::sqrt(k);
        return std::sinh(q * x) / q;
    }
    const double q = std::sqrt(-k);
    return std::sin(q * x) / q;
}

template <class T>
T ck_excess_impl(double k, T x) {
    if (use_series(k, magnitude_sq(x))) {
        // sum_{n>=1} k^{n-1} x^{2n} / (2n)!
        return series<T>(x * x / 2.0, k, x, 2);
    }
    return (ck_impl(k, x) - 1.0) / k;
}

template <class T>
T sk_excess_impl(double k, T x) {
    if (use_series(k, magnitude_sq(x))) {
        // sum_{n>=1} k^{n-1} x^{2n+1} / (2n+1)!
        return series<T>(x * x * x / 6.0, k, x, 3);
    }
    return (sk_impl(k, x) - x) / k;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

ShapeParam ShapeParam::from_theta(double theta) {
    if (!std::isfinite(theta) || theta < kThetaMin - kThetaSnap || theta > kThetaMax + kThetaSnap) {
        throw DomainError("theta outside [-pi/4, 3pi/4]");
    }
    ShapeParam p;
    const double h = 1.0 / kSqrt2;
    if (near(theta, kThetaMin, kThetaSnap)) {
        p.theta_ = kThetaMin;
        p.alpha_ = h;
        p.beta_ = -h;
        p.k_ = 0.0;
        p.s_ = 0.0;
        p.endpoint_ = true;
        return p;
    }
    if (near(theta, kThetaMax, kThetaSnap)) {
        p.theta_ = kThetaMax;
        p.alpha_ = -h;
        p.beta_ = h;
        p.k_ = 0.0;
        p.s_ = 0.0;
        p.endpoint_ = true;
        return p;
    }
    p.theta_ = theta;
    p.alpha_ = std::cos(theta);
    p.beta_ = std::sin(theta);
    p.k_ = std::cos(2.0 * theta);
    // Exact constants at the distinguished interior angles.
    if (near(theta, 0.0, kSnapExact)) {
        p.alpha_ = 1.0;
        p.beta_ = 0.0;
        p.k_ = 1.0;
    } else if (near(theta, kPi / 4.0, kSnapExact)) {
        p.alpha_ = h;
        p.beta_ = h;
        p.k_ = 0.0;
    } else if (near(theta, kPi / 2.0, kSnapExact)) {
        p.alpha_ = 0.0;
        p.beta_ = 1.0;
        p.k_ = -1.0;
    }
    p.s_ = p.alpha_ + p.beta_;
    return p;
}

double ck(double k, double x) { return ck_impl(k, x); }
Complex ck(double k, Complex x) { return ck_impl(k, x); }
double sk(double k, double x) { return sk_impl(k, x); }
Complex sk(double k, Complex x) { return sk_impl(k, x); }
double ck_excess(double k, double x) { return ck_excess_impl(k, x); }
Complex ck_excess(double k, Complex x) { return ck_excess_impl(k, x); }
double sk_excess(double k, double x) { return sk_excess_impl(k, x); }
Complex sk_excess(double k, Complex x) { return sk_excess_impl(k, x); }

double f_eval(const ShapeParam& p, double u) { return p.alpha() * sk(p.k(), u); }
double f_prime(const ShapeParam& p, double u) { return p.alpha() * ck(p.k(), u); }
double f_second(const ShapeParam& p, double u) { return p.k() * f_eval(p, u); }
double g_eval(const ShapeParam& p, double v) { return p.beta() * sk(-p.k(), v); }
double g_prime(const ShapeParam& p, double v) { return p.beta() * ck(-p.k(), v); }
double g_second(const ShapeParam& p, double v) { return -p.k() * g_eval(p, v); }

MetricJet metric_jet(const ShapeParam& p, double u, double v) {
    if (p.is_endpoint()) {
        throw DomainError("metric undefined at plane endpoints");
    }
    const double f = f_eval(p, u);
    const double fu = f_prime(p, u);
    const double g = g_eval(p, v);
    const double gv = g_prime(p, v);

    MetricJet m;
    m.expOmega = (1.0 + f * f + g * g) / (fu + gv);
    const double e1 = 1.0 / m.expOmega;
    const double e2 = e1 * e1;
    m.omega_u = e1 * f;
    m.omega_v = e1 * g;
    m.omega_uu = e1 * fu - e2 * f * f;
    m.omega_vv = e1 * gv - e2 * g * g;
    m.omega_uv = -e2 * f * g;
    return m;
}

}  // namespace minsurf
