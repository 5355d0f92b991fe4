// quadrature.hpp
//
// Unit-interval quadrature kernels used by the volume and overlap engines.
// Integrands are evaluated on whole node arrays, so callers write them as
// Eigen array expressions in the substitution variable s.
#ifndef LIFSHITZ_QUADRATURE_HPP
#define LIFSHITZ_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "errors.hpp"

namespace lifshitz {

template <typename Scalar>
using ArrayX = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

enum class QuadratureScheme {
    simpson,         ///< composite Simpson, Richardson-corrected across levels
    gauss_legendre,  ///< composite 8-point Gauss-Legendre (never touches endpoints)
};

inline const char* to_string(QuadratureScheme s) {
    return s == QuadratureScheme::simpson ? "simpson" : "gauss_legendre";
}

struct QuadratureSpec {
    QuadratureScheme scheme = QuadratureScheme::simpson;
    /// Simpson: number of subintervals (even). Gauss: number of panels.
    int panels = 2048;
    /// Exponent p of the endpoint substitution x = a + (b - a) s^p.
    double endpoint_exponent = 2.0;
    /// Each level doubles the panel count; the last two give the error estimate.
    int refinement_levels = 2;
    /// Relative tolerance on the error estimate.
    double tolerance = 1e-8;

    void validate(const char* op) const {
        if (panels < 64) detail::fail<DomainError>(op, "quadrature panel count must be >= 64");
        if (scheme == QuadratureScheme::simpson && panels % 2 != 0)
            detail::fail<DomainError>(op, "Simpson panel count must be even");
        if (!(tolerance > 0.0)) detail::fail<DomainError>(op, "quadrature tolerance must be positive");
        if (refinement_levels < 2) detail::fail<DomainError>(op, "at least two refinement levels are required");
        if (!(endpoint_exponent >= 1.0)) detail::fail<DomainError>(op, "endpoint exponent must be >= 1");
    }
};

template <typename Scalar>
struct QuadratureEstimate {
    Scalar value;
    Scalar error;  ///< >= 0
    int panels;    ///< panel count of the finest level
};

/// Simpson weights for n (even) subintervals of width h.
template <typename Scalar>
ArrayX<Scalar> simpson_weights(Eigen::Index n, Scalar h) {
    ArrayX<Scalar> w(n + 1);
    for (Eigen::Index i = 0; i <= n; ++i) w[i] = (i == 0 || i == n) ? Scalar(1) : (i % 2 ? Scalar(4) : Scalar(2));
    return w * (h / Scalar(3));
}

/// Gauss-Legendre nodes/weights on [-1, 1] from the Jacobi matrix (Golub-Welsch).
template <typename Scalar>
std::pair<ArrayX<Scalar>, ArrayX<Scalar>> gauss_legendre_rule(int order) {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Matrix jacobi = Matrix::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        const Scalar b = Scalar(k) / std::sqrt(Scalar(4 * k * k - 1));
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(jacobi);
    ArrayX<Scalar> nodes = eig.eigenvalues().array();
    ArrayX<Scalar> weights = Scalar(2) * eig.eigenvectors().row(0).transpose().array().square();
    return {nodes, weights};
}

namespace detail {

inline std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

template <typename Scalar, typename Integrand>
Scalar simpson_level(const Integrand& g, Eigen::Index n, bool singular_start, const char* op) {
    const ArrayX<Scalar> s = ArrayX<Scalar>::LinSpaced(n + 1, Scalar(0), Scalar(1));
    ArrayX<Scalar> v = g(s);
    // A substituted endpoint singularity has a finite limit at s = 0, but the
    // closed-form expression there is 0/0, inf*0 or a rounding artefact.
    // Recover it by quadratic extrapolation (error O(h^3), weighted by h/3).
    if (singular_start || !std::isfinite(v[0])) v[0] = Scalar(3) * v[1] - Scalar(3) * v[2] + v[3];
    if (!v.allFinite()) fail<NumericalError>(op, "integrand is not finite inside the domain");
    return (simpson_weights<Scalar>(n, Scalar(1) / Scalar(n)) * v).sum();
}

template <typename Scalar, typename Integrand>
Scalar gauss_level(const Integrand& g, Eigen::Index panels, const char* op) {
    constexpr int order = 8;
    static const auto rule = gauss_legendre_rule<Scalar>(order);
    const Scalar h = Scalar(1) / Scalar(panels);
    ArrayX<Scalar> s(panels * order), w(panels * order);
    for (Eigen::Index p = 0; p < panels; ++p) {
        s.segment(p * order, order) = h * (Scalar(p) + (rule.first + Scalar(1)) / Scalar(2));
        w.segment(p * order, order) = rule.second * (h / Scalar(2));
    }
    const ArrayX<Scalar> v = g(s);
    if (!v.allFinite()) fail<NumericalError>(op, "integrand is not finite inside the domain");
    return (w * v).sum();
}

}  // namespace detail

/// Integrates g over [0, 1]; g maps an array of nodes to an array of values.
/// With singular_start the value at s = 0 is never trusted and is
/// extrapolated from the interior. Throws ConvergenceError when the two
/// finest levels disagree by more than spec.tolerance relative to the result.
template <typename Scalar, typename Integrand>
QuadratureEstimate<Scalar> integrate_unit_interval(const Integrand& g, const QuadratureSpec& spec,
                                                   const char* op = "quadrature", bool singular_start = false) {
    spec.validate(op);
    Eigen::Index n = spec.panels;
    Scalar coarse = 0, fine = 0;
    for (int level = 0; level < spec.refinement_levels; ++level, n *= 2) {
        coarse = fine;
        fine = spec.scheme == QuadratureScheme::simpson ? detail::simpson_level<Scalar>(g, n, singular_start, op)
                                                        : detail::gauss_level<Scalar>(g, n, op);
    }
    const int finest = static_cast<int>(n / 2);
    QuadratureEstimate<Scalar> out{};
    if (spec.scheme == QuadratureScheme::simpson) {
        out = {fine + (fine - coarse) / Scalar(15), std::abs(fine - coarse) / Scalar(15), finest};
    } else {
        out = {fine, std::abs(fine - coarse), finest};
    }
    const Scalar scale = std::max(std::abs(out.value), std::numeric_limits<Scalar>::min());
    if (out.error > Scalar(spec.tolerance) * scale)
        detail::fail<ConvergenceError>(op, "relative refinement error " + detail::sci(double(out.error / scale)) +
                                               " exceeds tolerance " + detail::sci(spec.tolerance));
    return out;
}

/// Integrates f(x) over [a, b] where f may carry an integrable
/// (x - a)^(-1 + 1/p) singularity at a; uses x = a + (b - a) s^p.
template <typename Scalar, typename Function>
QuadratureEstimate<Scalar> integrate_lower_singular(const Function& f, Scalar a, Scalar b, const QuadratureSpec& spec,
                                                    const char* op = "quadrature") {
    const Scalar p = Scalar(spec.endpoint_exponent);
    const Scalar width = b - a;
    auto g = [&](const ArrayX<Scalar>& s) -> ArrayX<Scalar> {
        const ArrayX<Scalar> sp = s.pow(p);
        const ArrayX<Scalar> x = a + width * sp;
        const ArrayX<Scalar> jac = width * p * s.pow(p - Scalar(1));
        return f(x) * jac;
    };
    return integrate_unit_interval<Scalar>(g, spec, op, true);
}

}  // namespace lifshitz

#endif  // LIFSHITZ_QUADRATURE_HPP
