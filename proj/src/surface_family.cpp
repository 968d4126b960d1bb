#include "minsurf/surface_family.hpp"

#include <cmath>

namespace minsurf {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_interior(const ShapeParam& p) {
    if (p.is_endpoint()) {
        throw DomainError("X^theta undefined at plane endpoints; use the tilde variant");
    }
}

Vec3 re(const CVec3& w) { return w.real(); }

FrameJet jet_from_potential(const PotentialJet& phi, Complex mu) {
    FrameJet j;
    j.X = re(mu * phi.d0);
    j.Xu = re(mu * phi.d1);
    j.Xv = re(kI * mu * phi.d1);
    j.Xuu = re(mu * phi.d2);
    j.Xuv = re(kI * mu * phi.d2);
    j.Xvv = -j.Xuu;
    j.Xuuu = re(mu * phi.d3);
    j.Xuuv = re(kI * mu * phi.d3);
    j.Xuvv = -j.Xuuu;
    j.Xvvv = -j.Xuuv;
    j.N = j.Xu.cross(j.Xv).normalized();
    return j;
}

FrameJet scaled(FrameJet j, double r) {
    for (Vec3* w : {&j.X, &j.Xu, &j.Xv, &j.Xuu, &j.Xuv, &j.Xvv, &j.Xuuu, &j.Xuuv, &j.Xuvv, &j.Xvvv}) {
        *w *= r;
    }
    return j;
}

// Affine plane a u + b v with its (constant) first partials.
FrameJet plane_jet(const Vec3& a, const Vec3& b, double u, double v) {
    FrameJet j;
    j.X = a * u + b * v;
    j.Xu = a;
    j.Xv = b;
    j.N = a.cross(b).normalized();
    return j;
}

constexpr double kPlaneScale = 3.0 / kSqrt2;

}  // namespace

std::string_view to_string(SurfaceClass tag) {
    switch (tag) {
        case SurfaceClass::Plane: return "plane";
        case SurfaceClass::Catenoid: return "catenoid";
        case SurfaceClass::Enneper: return "enneper";
        case SurfaceClass::Bonnet: return "bonnet";
        case SurfaceClass::Helicoid: return "helicoid";
        case SurfaceClass::Thomsen: return "thomsen";
    }
    return "unknown";
}

PotentialJet holomorphic_potential(const ShapeParam& p, Complex z) {
    require_interior(p);
    const double a = p.alpha();
    const double b = p.beta();
    const double k = p.k();
    const double inv_s = 1.0 / p.s();

    const Complex S = sk_excess(k, z);
    const Complex C = ck_excess(k, z);
    const Complex skz = sk(k, z);
    const Complex ckz = ck(k, z);

    PotentialJet phi;
    phi.d0 << z * inv_s - b * S, kI * (z * inv_s + a * S), C;
    phi.d1 << inv_s - b * C, kI * (inv_s + a * C), skz;
    phi.d2 << -b * skz, kI * a * skz, ckz;
    phi.d3 << -b * ckz, kI * a * ckz, k * skz;
    return phi;
}

SurfacePoint x_theta(const ShapeParam& p, double u, double v) {
    require_interior(p);
    // Real parts of the T-helpers: T1 = Re S, T2 = Im S, T3 = Re C.
    const Complex z{u, v};
    const Complex S = sk_excess(p.k(), z);
    const Complex C = ck_excess(p.k(), z);
    const double inv_s = 1.0 / p.s();
    return {u * inv_s - p.beta() * S.real(), -v * inv_s - p.alpha() * S.imag(), C.real()};
}

FrameJet x_theta_jet(const ShapeParam& p, double u, double v) {
    return jet_from_potential(holomorphic_potential(p, {u, v}), 1.0);
}

double r_factor(double theta) {
    const ShapeParam p = ShapeParam::from_theta(theta);
    if (p.is_endpoint()) {
        return 0.0;
    }
    const double sp = std::sin(p.theta() + kPi / 4.0);
    return (1.0 - sp) * std::abs(p.k()) + sp;
}

SurfacePoint x_tilde(const ShapeParam& p, double u, double v) {
    if (p.is_endpoint()) {
        return kPlaneScale * Vec3(u, -v, 0.0);
    }
    return r_factor(p.theta()) * x_theta(p, u, v);
}

FrameJet x_tilde_jet(const ShapeParam& p, double u, double v) {
    if (p.is_endpoint()) {
        return plane_jet(kPlaneScale * Vec3::UnitX(), -kPlaneScale * Vec3::UnitY(), u, v);
    }
    return scaled(x_theta_jet(p, u, v), r_factor(p.theta()));
}

SurfacePoint x_associated(const ShapeParam& p, const AssociatedParam& lam, double u, double v) {
    const PotentialJet phi = holomorphic_potential(p, {u, v});
    return re(lam.deformation() * phi.d0);
}

FrameJet associated_jet(const ShapeParam& p, const AssociatedParam& lam, double u, double v) {
    return jet_from_potential(holomorphic_potential(p, {u, v}), lam.deformation());
}

SurfacePoint x_conjugate_unscaled(const ShapeParam& p, double u, double v) {
    require_interior(p);
    const Complex z{u, v};
    const Complex S = sk_excess(p.k(), z);
    const Complex C = ck_excess(p.k(), z);
    const double inv_s = 1.0 / p.s();
    return {-v * inv_s + p.beta() * S.imag(), -u * inv_s - p.alpha() * S.real(), -C.imag()};
}

SurfacePoint x_conjugate(const ShapeParam& p, double u, double v) {
    if (p.is_endpoint()) {
        return kPlaneScale * Vec3(-v, -u, 0.0);
    }
    return r_factor(p.theta()) * x_conjugate_unscaled(p, u, v);
}

SurfacePoint x_conjugate_printed(const ShapeParam& p, double u, double v) {
    require_interior(p);
    const double a = p.alpha();
    const double b = p.beta();
    if (p.k() == 0.0) {
        const double d = 6.0 * kSqrt2;
        return {-v * (6.0 - 3.0 * u * u + v * v) / d, u * (6.0 + u * u - 3.0 * v * v) / d, -u * v};
    }
    // Principal branch: sqrt(k) = i sqrt(|k|) for k < 0; the results are real.
    const Complex q = std::sqrt(Complex(p.k()));
    const Complex k32 = p.k() * q;
    const Complex x1 = (-u * a * q + b * std::cosh(q * u) * std::sin(q * v)) / k32;
    const Complex x2 = (v * b * q - a * std::sinh(q * u) * std::cos(q * v)) / k32;
    const Complex x3 = -std::sinh(q * u) * std::sin(q * v) / p.k();
    return {x1.real(), x2.real(), x3.real()};
}

Vec3 normal_formula(const ShapeParam& p, double u, double v) {
    if (p.is_endpoint() || p.f_vanishes() || p.g_vanishes()) {
        throw DomainError("formula inapplicable, use frame-jet normal");
    }
    const MetricJet m = metric_jet(p, u, v);
    const double n1 = m.omega_u / p.alpha();
    const double n2 = m.omega_v / p.beta();
    return {n1, n2, std::sqrt(std::max(0.0, 1.0 - n1 * n1 - n2 * n2))};
}

AxialDirections axial_directions(const ShapeParam& p, double u, double v) {
    const FrameJet j = x_theta_jet(p, u, v);
    const MetricJet m = metric_jet(p, u, v);
    AxialDirections axes;
    if (!p.f_vanishes()) {
        axes.v1 = m.omega_uu * j.Xu - m.omega_uv * j.Xv + m.omega_u * j.N;
    }
    if (!p.g_vanishes()) {
        axes.v2 = m.omega_uv * j.Xu - m.omega_vv * j.Xv + m.omega_v * j.N;
    }
    return axes;
}

WeierstrassPair weierstrass_data(const ShapeParam& p, Complex z) {
    require_interior(p);
    const double s = p.s();
    const Complex ckz = ck(p.k(), z);
    const Complex skz = sk(p.k(), z);

    WeierstrassPair w;
    w.eta = (1.0 + ckz) / (2.0 * s);
    w.h_eta = skz / 2.0;
    w.h2_eta = s * ck_excess(p.k(), z) / 2.0;
    // h = s tanh(sqrt(k) z / 2) / sqrt(k) = s sk / (1 + ck); poles where 1 + ck = 0.
    const Complex denom = 1.0 + ckz;
    if (std::abs(denom) > 1e-15 * (1.0 + std::abs(ckz))) {
        w.h = s * skz / denom;
    }
    return w;
}

SurfaceClass classify(double theta, Family family) {
    const ShapeParam p = ShapeParam::from_theta(theta);
    const bool conj = family == Family::Conjugate;
    if (p.is_endpoint()) {
        return SurfaceClass::Plane;
    }
    const double t = p.theta();
    if (std::abs(t) <= kThetaSnap || std::abs(t - kPi / 2.0) <= kThetaSnap) {
        return conj ? SurfaceClass::Helicoid : SurfaceClass::Catenoid;
    }
    if (std::abs(t - kPi / 4.0) <= kThetaSnap) {
        return SurfaceClass::Enneper;
    }
    return conj ? SurfaceClass::Thomsen : SurfaceClass::Bonnet;
}

}  // namespace minsurf
