#include "minsurf/weierstrass.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "minsurf/surface_family.hpp"

namespace minsurf {

namespace {

constexpr int kMinOrder = 4;
constexpr int kMaxOrder = 64;

// Newton iteration on P_n from the Chebyshev-like initial guesses.
GaussLegendreRule build_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
            }
            dp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

std::array<GaussLegendreRule, kMaxOrder + 1> build_all() {
    std::array<GaussLegendreRule, kMaxOrder + 1> rules;
    for (int n = kMinOrder; n <= kMaxOrder; ++n) {
        rules[n] = build_rule(n);
    }
    return rules;
}

double norm_inf(const CVec3& w) { return w.cwiseAbs().maxCoeff(); }

}  // namespace

void QuadratureSpec::validate() const {
    if (panels < 1) {
        throw DomainError("quadrature needs at least one panel");
    }
    if (order < kMinOrder || order > kMaxOrder) {
        throw DomainError("Gauss-Legendre order must lie in [4, 64]");
    }
    if (!(abs_tol > 0.0)) {
        throw DomainError("quadrature tolerance must be positive");
    }
    if (max_doublings < 0) {
        throw DomainError("max_doublings must be nonnegative");
    }
}

const GaussLegendreRule& gauss_legendre(int order) {
    static const std::array<GaussLegendreRule, kMaxOrder + 1> rules = build_all();
    if (order < kMinOrder || order > kMaxOrder) {
        throw DomainError("Gauss-Legendre order must lie in [4, 64]");
    }
    return rules[order];
}

CVec3 integrand(const ShapeParam& p, Complex z) {
    const WeierstrassPair w = weierstrass_data(p, z);
    const Complex i{0.0, 1.0};
    return CVec3(w.eta - w.h2_eta, i * (w.eta + w.h2_eta), 2.0 * w.h_eta);
}

CVec3 integrate_segment(const ShapeParam& p, Complex a, Complex b, int panels, int order) {
    const GaussLegendreRule& rule = gauss_legendre(order);
    const Complex step = (b - a) / static_cast<double>(panels);
    const Complex half = step / 2.0;
    CVec3 total = CVec3::Zero();
    for (int k = 0; k < panels; ++k) {
        const Complex mid = a + (k + 0.5) * step;
        CVec3 panel = CVec3::Zero();
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            panel += rule.weights[j] * integrand(p, mid + rule.nodes[j] * half);
        }
        total += half * panel;
    }
    return total;
}

namespace {

// Integral along a -> b with panel doubling until successive estimates agree
// to abs_tol (or to the roundoff floor of the integral itself).
CVec3 integrate_adaptive(const ShapeParam& p, Complex a, Complex b, const QuadratureSpec& q) {
    q.validate();
    if (a == b) {
        return CVec3::Zero();
    }
    int panels = q.panels;
    CVec3 coarse = integrate_segment(p, a, b, panels, q.order);
    for (int doubling = 0; doubling < q.max_doublings; ++doubling) {
        panels *= 2;
        const CVec3 fine = integrate_segment(p, a, b, panels, q.order);
        const double floor = 64.0 * std::numeric_limits<double>::epsilon() * norm_inf(fine);
        if (norm_inf(fine - coarse) <= std::max(q.abs_tol, floor)) {
            return fine;
        }
        coarse = fine;
    }
    throw ConvergenceError("Weierstrass quadrature did not reach tolerance after panel doubling cap");
}

}  // namespace

SurfacePoint integrate(const ShapeParam& p, Complex z, const AssociatedParam& lam,
                       const QuadratureSpec& q) {
    if (p.is_endpoint()) {
        throw DomainError("Weierstrass data undefined at plane endpoints");
    }
    const CVec3 total = integrate_adaptive(p, 0.0, z, q);
    return (lam.deformation() * total).real();
}

double path_independence(const ShapeParam& p, Complex z, const AssociatedParam& lam,
                         const QuadratureSpec& q) {
    if (p.is_endpoint()) {
        throw DomainError("Weierstrass data undefined at plane endpoints");
    }
    const Complex corner{z.real(), 0.0};
    const CVec3 straight = integrate_adaptive(p, 0.0, z, q);
    const CVec3 bent = integrate_adaptive(p, 0.0, corner, q) + integrate_adaptive(p, corner, z, q);
    const Complex mu = lam.deformation();
    return ((mu * straight).real() - (mu * bent).real()).norm();
}

}  // namespace minsurf
