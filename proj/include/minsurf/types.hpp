#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace minsurf {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Matrix<Complex, 3, 1>;

/// A point of an immersion in homothety-normalized units.
using SurfacePoint = Vec3;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt2 = std::numbers::sqrt2;

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by the adaptive quadrature when the panel-doubling cap is hit.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unit-modulus parameter of the associated family. The deformation acts on
/// the Weierstrass data as eta -> lambda^{-2} eta.
class AssociatedParam {
public:
    AssociatedParam() = default;
    explicit AssociatedParam(Complex lambda);

    static AssociatedParam from_angle(double phi) { return AssociatedParam(std::polar(1.0, phi)); }
    /// The member with lambda^{-2} = i.
    static AssociatedParam conjugate();

    Complex lambda() const { return lambda_; }
    /// lambda^{-2}, the factor applied to eta.
    Complex deformation() const { return std::conj(lambda_ * lambda_); }

private:
    Complex lambda_{1.0, 0.0};
};

inline AssociatedParam::AssociatedParam(Complex lambda) : lambda_(lambda) {
    if (!(std::abs(std::abs(lambda) - 1.0) <= 1e-12)) {
        throw DomainError("associated-family parameter must have unit modulus");
    }
}

inline AssociatedParam AssociatedParam::conjugate() {
    // lambda = e^{-i pi/4} gives lambda^{-2} = e^{i pi/2} = i.
    return from_angle(-kPi / 4.0);
}

}  // namespace minsurf
