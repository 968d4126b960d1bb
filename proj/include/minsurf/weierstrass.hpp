#pragma once

#include <vector>

#include "minsurf/analytic_kernel.hpp"
#include "minsurf/types.hpp"

namespace minsurf {

/// Panelwise Gauss-Legendre settings for integrating along a segment.
struct QuadratureSpec {
    int panels = 8;
    int order = 16;  // nodes per panel, in [4, 64]
    double abs_tol = 1e-12;
    int max_doublings = 16;

    void validate() const;
};

/// Nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule for order in [4, 64]; safe to call concurrently.
const GaussLegendreRule& gauss_legendre(int order);

/// The entire Weierstrass integrand (eta - h^2 eta, i(eta + h^2 eta), 2 h eta),
/// assembled from the pole-free combinations.
CVec3 integrand(const ShapeParam& p, Complex z);

/// Complex integral of the integrand along the segment a -> b with a fixed
/// number of panels.
CVec3 integrate_segment(const ShapeParam& p, Complex a, Complex b, int panels, int order);

/// Re of lambda^{-2} times the integral from 0 to z, with adaptive panel
/// doubling. Throws ConvergenceError when the doubling cap is reached.
SurfacePoint integrate(const ShapeParam& p, Complex z, const AssociatedParam& lam = {},
                       const QuadratureSpec& q = {});

/// |integral along the segment 0 -> z  -  integral along 0 -> Re z -> z|.
double path_independence(const ShapeParam& p, Complex z, const AssociatedParam& lam = {},
                         const QuadratureSpec& q = {});

}  // namespace minsurf
