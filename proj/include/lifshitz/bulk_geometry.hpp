// bulk_geometry.hpp
//
// Planar (k = 0) Lifshitz-AdS black brane
//   ds^2 = -(r/r0)^z B(r) dt^2 + dr^2 / B(r) + r^2 (dx^2 + dy^2)
// with the blackening function supplied in closed form. The dilaton and its
// couplings gamma, lambda are carried only as inert labels.
#ifndef LIFSHITZ_BULK_GEOMETRY_HPP
#define LIFSHITZ_BULK_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"
#include "quadrature.hpp"

namespace lifshitz {

/// Bulk inputs. Lambda defaults to -3/L^2 and R (complexity normalization
/// radius) to L, so designated initializers only need the free data.
template <typename Scalar = double>
struct BulkParams {
    Scalar L = 1;
    Scalar Lambda = Scalar(-3) / (L * L);
    Scalar xi = -1;      ///< Maxwell-dilaton coupling
    Scalar Q = 1;        ///< bulk charge (dual to the boundary field H)
    Scalar V0 = 0;       ///< dilaton potential amplitude
    Scalar z = 4;        ///< dynamical exponent
    Scalar r_plus = 1;   ///< horizon radius
    Scalar r0 = 1;       ///< lapse normalization; never enters a constant-t slice
    Scalar G = 1;
    Scalar R = L;
    Scalar gamma = 0;    ///< inert
    Scalar lambda = 0;   ///< inert

    /// Lambda + Q^2 xi, the combination that sets the r^2 growth of B.
    Scalar coupling_sum() const { return Lambda + Q * Q * xi; }

    void validate(const char* op) const {
        for (Scalar v : {L, Lambda, xi, Q, V0, z, r_plus, r0, G, R})
            if (!std::isfinite(v)) detail::fail<DomainError>(op, "bulk parameters must be finite");
        if (!(L > 0)) detail::fail<DomainError>(op, "curvature scale L must be positive");
        const Scalar expected = Scalar(-3) / (L * L);
        if (std::abs(Lambda - expected) > Scalar(1e-12) * std::abs(expected))
            detail::fail<DomainError>(op, "Lambda must equal -3/L^2");
        if (!(r_plus > 0)) detail::fail<DomainError>(op, "horizon radius r_plus must be positive");
        if (!(G > 0)) detail::fail<DomainError>(op, "Newton constant G must be positive");
        if (!(z >= 1)) detail::fail<DomainError>(op, "dynamical exponent z must be >= 1");
    }
};

/// B(r) = c0 + (r+/r)^p (c2 r+^2 - c0) - c2 r^2 with
/// c0 = V0/(2+z), c2 = 2(Lambda + Q^2 xi)/(6+z), p = 1 + z/2.
template <typename Scalar = double>
struct BlackeningCoefficients {
    Scalar constant;
    Scalar quadratic;
    Scalar power;
    Scalar r_plus;
};

template <typename Scalar>
BlackeningCoefficients<Scalar> blackening_coefficients(const BulkParams<Scalar>& p) {
    if (p.z == Scalar(-2) || p.z == Scalar(-6))
        detail::fail<SingularityError>("blackening", "z = -2 and z = -6 are poles of the blackening function");
    return {p.V0 / (Scalar(2) + p.z), Scalar(2) * p.coupling_sum() / (Scalar(6) + p.z), Scalar(1) + p.z / Scalar(2),
            p.r_plus};
}

template <typename Scalar>
Scalar blackening(Scalar r, const BulkParams<Scalar>& p) {
    if (!(r > 0)) detail::fail<DomainError>("blackening", "radius must be positive");
    const auto c = blackening_coefficients(p);
    return c.constant + std::pow(c.r_plus / r, c.power) * (c.quadratic * c.r_plus * c.r_plus - c.constant) -
           c.quadratic * r * r;
}

template <typename Derived>
ArrayX<typename Derived::Scalar> blackening(const Eigen::ArrayBase<Derived>& r,
                                            const BulkParams<typename Derived::Scalar>& p) {
    using Scalar = typename Derived::Scalar;
    if (!(r.derived().minCoeff() > 0)) detail::fail<DomainError>("blackening", "radius must be positive");
    const auto c = blackening_coefficients(p);
    return c.constant + (c.r_plus / r.derived()).pow(c.power) * (c.quadratic * c.r_plus * c.r_plus - c.constant) -
           c.quadratic * r.derived().square();
}

/// dB/dr; B'(r+) > 0 is the non-extremal horizon condition.
template <typename Scalar>
Scalar blackening_derivative(Scalar r, const BulkParams<Scalar>& p) {
    if (!(r > 0)) detail::fail<DomainError>("blackening_derivative", "radius must be positive");
    const auto c = blackening_coefficients(p);
    return -c.power * std::pow(c.r_plus / r, c.power) / r * (c.quadratic * c.r_plus * c.r_plus - c.constant) -
           Scalar(2) * c.quadratic * r;
}

/// Horizonless reference geometry: B_bg(r) = c0 - c2 r^2.
template <typename Derived>
ArrayX<typename Derived::Scalar> background_blackening(const Eigen::ArrayBase<Derived>& r,
                                                       const BulkParams<typename Derived::Scalar>& p) {
    const auto c = blackening_coefficients(p);
    return c.constant - c.quadratic * r.derived().square();
}

template <typename Scalar>
Scalar background_blackening(Scalar r, const BulkParams<Scalar>& p) {
    const auto c = blackening_coefficients(p);
    return c.constant - c.quadratic * r * r;
}

/// z = -4 Q^2 xi / (Lambda + Q^2 xi).
template <typename Scalar>
Scalar lifshitz_exponent(Scalar Q, Scalar xi, Scalar Lambda) {
    const Scalar x = Q * Q * xi;
    const Scalar denom = Lambda + x;
    if (denom == 0 || std::abs(denom) <= Scalar(1e-14) * std::max(std::abs(Lambda), std::abs(x)))
        detail::fail<SingularityError>("lifshitz_exponent", "Lambda + Q^2 xi vanishes");
    return Scalar(-4) * x / denom;
}

/// Coefficients of the z = 4 w-form integrand b(w) = b1 w^3 - b_{-2} / w^2.
template <typename Scalar = double>
struct SeriesCoeffsZ4 {
    Scalar b1;
    Scalar b_minus2;

    /// -b_{-2} must be positive for a real integrand near the boundary.
    bool valid() const { return b_minus2 < 0; }
};

template <typename Scalar>
SeriesCoeffsZ4<Scalar> series_coeffs_z4(const BulkParams<Scalar>& p) {
    if (std::abs(p.z - Scalar(4)) > Scalar(1e-9))
        detail::fail<ConstraintError>("series_coeffs_z4", "coefficients are defined only for z = 4");
    const Scalar s = p.coupling_sum();
    const Scalar r2 = p.r_plus * p.r_plus;
    return {s / Scalar(5) * r2 - (p.V0 / Scalar(2)) / Scalar(3), r2 * s / Scalar(5)};
}

/// Truncated integrand function b(w) (drops the constant V0/(2+z) of B).
template <typename Derived>
ArrayX<typename Derived::Scalar> truncated_b(const Eigen::ArrayBase<Derived>& w,
                                             const SeriesCoeffsZ4<typename Derived::Scalar>& c) {
    return c.b1 * w.derived().cube() - c.b_minus2 / w.derived().square();
}

template <typename Scalar>
Scalar truncated_b(Scalar w, const SeriesCoeffsZ4<Scalar>& c) {
    return c.b1 * w * w * w - c.b_minus2 / (w * w);
}

/// Consistency diagnostics; the engine reports these instead of rejecting.
template <typename Scalar>
std::vector<std::string> geometry_flags(const BulkParams<Scalar>& p) {
    std::vector<std::string> flags;
    try {
        const Scalar implied = lifshitz_exponent(p.Q, p.xi, p.Lambda);
        if (std::abs(implied - p.z) > Scalar(1e-9) * std::max(Scalar(1), std::abs(p.z)))
            flags.emplace_back("z-inconsistent-with-couplings");
    } catch (const SingularityError&) {
        flags.emplace_back("z-coupling-singular");
    }
    if (p.z < 3) flags.emplace_back("z-below-3");
    if (p.xi >= 0) flags.emplace_back("xi-nonnegative");
    if (p.coupling_sum() >= 0) flags.emplace_back("coupling-sum-nonnegative");
    if (std::abs(p.z - Scalar(4)) <= Scalar(1e-9) && !series_coeffs_z4(p).valid())
        flags.emplace_back("b-2-nonnegative");
    return flags;
}

}  // namespace lifshitz

#endif  // LIFSHITZ_BULK_GEOMETRY_HPP
