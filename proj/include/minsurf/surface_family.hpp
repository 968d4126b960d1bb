#pragma once

#include <optional>
#include <string_view>

#include "minsurf/analytic_kernel.hpp"
#include "minsurf/types.hpp"

namespace minsurf {

/// Position, partial derivatives up to third order and unit normal of an
/// immersion at one parameter point.
struct FrameJet {
    Vec3 X = Vec3::Zero();
    Vec3 Xu = Vec3::Zero();
    Vec3 Xv = Vec3::Zero();
    Vec3 Xuu = Vec3::Zero();
    Vec3 Xuv = Vec3::Zero();
    Vec3 Xvv = Vec3::Zero();
    Vec3 Xuuu = Vec3::Zero();
    Vec3 Xuuv = Vec3::Zero();
    Vec3 Xuvv = Vec3::Zero();
    Vec3 Xvvv = Vec3::Zero();
    Vec3 N = Vec3::UnitZ();
};

enum class SurfaceClass { Plane, Catenoid, Enneper, Bonnet, Helicoid, Thomsen };

/// Which family a classification refers to: the surfaces with planar
/// curvature lines, or their conjugates.
enum class Family { Original, Conjugate };

std::string_view to_string(SurfaceClass tag);

/// Unnormalized constant axial directions. v1 exists iff alpha != 0,
/// v2 iff beta != 0.
struct AxialDirections {
    std::optional<Vec3> v1;
    std::optional<Vec3> v2;
};

/// Weierstrass data at a complex point. h is absent at its poles (k < 0);
/// eta, h eta and h^2 eta are entire.
struct WeierstrassPair {
    std::optional<Complex> h;
    Complex eta;
    Complex h_eta;
    Complex h2_eta;
};

/// Derivatives of order 0..3 of the holomorphic potential Phi with
/// X = Re Phi(u + iv). Phi' is the Weierstrass integrand.
struct PotentialJet {
    CVec3 d0;
    CVec3 d1;
    CVec3 d2;
    CVec3 d3;
};

PotentialJet holomorphic_potential(const ShapeParam& p, Complex z);

/// Closed-form X^theta. Throws DomainError at the plane endpoints.
SurfacePoint x_theta(const ShapeParam& p, double u, double v);

/// Exact jet of X^theta with N = (Xu x Xv) / |Xu x Xv|.
FrameJet x_theta_jet(const ShapeParam& p, double u, double v);

/// Homothety factor R^theta; zero exactly at the endpoints.
double r_factor(double theta);

/// R^theta X^theta, extended by the plane (3/sqrt2)(u, -v, 0) at the endpoints.
SurfacePoint x_tilde(const ShapeParam& p, double u, double v);
FrameJet x_tilde_jet(const ShapeParam& p, double u, double v);

/// Associated-family member Re(lambda^{-2} Phi). lambda = 1 is X^theta.
SurfacePoint x_associated(const ShapeParam& p, const AssociatedParam& lam, double u, double v);
FrameJet associated_jet(const ShapeParam& p, const AssociatedParam& lam, double u, double v);

/// Conjugate surface -Im Phi (the lambda^{-2} = i member), unscaled.
SurfacePoint x_conjugate_unscaled(const ShapeParam& p, double u, double v);

/// Conjugate family R^theta times the conjugate surface, with the plane
/// (3/sqrt2)(-v, -u, 0) at the endpoints.
SurfacePoint x_conjugate(const ShapeParam& p, double u, double v);

/// The conjugate parametrization exactly as it is usually printed, with
/// u cos(theta) and v sin(theta) in the linear terms. Kept for comparison
/// only: it is not the conjugate surface (see the tests). Unscaled.
SurfacePoint x_conjugate_printed(const ShapeParam& p, double u, double v);

/// Normal from the metric, (w_u/alpha, w_v/beta, +sqrt(1 - ...)). Defined
/// only for alpha beta != 0; the square root fixes the upper hemisphere.
Vec3 normal_formula(const ShapeParam& p, double u, double v);

AxialDirections axial_directions(const ShapeParam& p, double u, double v);

WeierstrassPair weierstrass_data(const ShapeParam& p, Complex z);

SurfaceClass classify(double theta, Family family = Family::Original);

}  // namespace minsurf
