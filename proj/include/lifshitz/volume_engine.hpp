// volume_engine.hpp
//
// Maximal-volume functional on the t = const slice,
//   V = \int_{r+}^{r_inf} r^2 dr / sqrt(B(r))        (per unit boundary area),
// its w = r+/r form, the z = 4 closed-form series, holographic complexity
// V / (8 pi R G) and background subtraction.
//
// The slice volume sees only g_rr and the transverse r^2; the lapse
// (r/r0)^z never enters, so r0 is not used here.
#ifndef LIFSHITZ_VOLUME_ENGINE_HPP
#define LIFSHITZ_VOLUME_ENGINE_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "bulk_geometry.hpp"
#include "errors.hpp"
#include "quadrature.hpp"

namespace lifshitz {

enum class VolumeMode {
    full_b,   ///< quadrature of the complete blackening function
    truncated_b,  ///< quadrature of the truncated z = 4 integrand b(w)
    series,   ///< z = 4 closed form, first order in b1 / b_{-2}
};

inline const char* to_string(VolumeMode m) {
    switch (m) {
        case VolumeMode::full_b: return "full-B";
        case VolumeMode::truncated_b: return "truncated-b";
        case VolumeMode::series: return "series";
    }
    return "?";
}

/// Which regulator a result was computed with.
enum class CutoffKind {
    radial,       ///< IR radius r_inf; divergence ~ r_inf^2
    ultraviolet,  ///< w-cutoff eps = r+ / r_inf; divergence ~ eps^-2
};

template <typename Scalar = double>
struct VolumeResult {
    Scalar value;
    Scalar cutoff;
    CutoffKind cutoff_kind;
    VolumeMode mode;
    /// Leading divergence coefficient: of r_inf^2 (radial) or eps^-2 (ultraviolet).
    Scalar divergent_coefficient;
    Scalar error;  ///< >= 0
    Scalar finite_part;  ///< value minus the leading divergent term

    Scalar divergent_part() const {
        return cutoff_kind == CutoffKind::radial ? divergent_coefficient * cutoff * cutoff
                                                 : divergent_coefficient / (cutoff * cutoff);
    }
};

namespace detail {

template <typename Scalar>
VolumeResult<Scalar> make_volume(Scalar value, Scalar cutoff, CutoffKind kind, VolumeMode mode, Scalar coef,
                                 Scalar error) {
    VolumeResult<Scalar> v{value, cutoff, kind, mode, coef, error, Scalar(0)};
    v.finite_part = std::isfinite(coef) ? value - v.divergent_part() : std::numeric_limits<Scalar>::quiet_NaN();
    return v;
}

// 1 / (2 sqrt(-c2)): coefficient of r_inf^2, identical for the deformed and
// the background geometry.
template <typename Scalar>
Scalar radial_divergence(const BulkParams<Scalar>& p) {
    const Scalar c2 = blackening_coefficients(p).quadratic;
    return c2 < 0 ? Scalar(1) / (Scalar(2) * std::sqrt(-c2)) : std::numeric_limits<Scalar>::quiet_NaN();
}

}  // namespace detail

/// \int_{r_lo}^{r_hi} r^2 / sqrt(B(r)) dr for an arbitrary blackening
/// function given as an array callable. B may vanish like (r - r_lo) at the
/// lower limit; it must be positive everywhere above it.
template <typename Scalar, typename Blackening>
QuadratureEstimate<Scalar> radial_volume(const Blackening& B, Scalar r_lo, Scalar r_hi, const QuadratureSpec& spec,
                                         const char* op = "volume_exact") {
    if (!(r_hi > r_lo)) detail::fail<DomainError>(op, "upper radius must exceed the lower limit");
    auto integrand = [&](const ArrayX<Scalar>& r) -> ArrayX<Scalar> {
        const ArrayX<Scalar> b = B(r);
        for (Eigen::Index i = 0; i < r.size(); ++i)
            if (r[i] > r_lo && !(b[i] > 0))
                detail::fail<NonPositiveBlackeningError>(op, "blackening function is non-positive inside the domain");
        return r.square() / b.sqrt();
    };
    return integrate_lower_singular<Scalar>(integrand, r_lo, r_hi, spec, op);
}

/// Volume from the horizon r+ to the IR cutoff r_inf.
template <typename Scalar>
VolumeResult<Scalar> volume_exact(const BulkParams<Scalar>& p, Scalar r_inf, const QuadratureSpec& spec = {}) {
    constexpr const char* op = "volume_exact";
    p.validate(op);
    if (!(r_inf > p.r_plus)) detail::fail<DomainError>(op, "r_inf must exceed r_plus");
    auto B = [&](const ArrayX<Scalar>& r) -> ArrayX<Scalar> { return blackening(r, p); };
    const auto q = radial_volume<Scalar>(B, p.r_plus, r_inf, spec, op);
    return detail::make_volume(q.value, r_inf, CutoffKind::radial, VolumeMode::full_b, detail::radial_divergence(p),
                               q.error);
}

namespace detail {

// r+^3 \int_eps^1 dw / (w^4 sqrt(b(w))) with w = eps^(s^p): s = 0 is the
// horizon end w = 1 (where b may vanish like 1 - w), s = 1 the boundary end.
template <typename Scalar, typename WFunction>
QuadratureEstimate<Scalar> w_integral(const WFunction& b, Scalar r_plus, Scalar eps, const QuadratureSpec& spec,
                                      const char* op) {
    const Scalar p = Scalar(spec.endpoint_exponent);
    const Scalar log_inv_eps = -std::log(eps);
    auto g = [&](const ArrayX<Scalar>& s) -> ArrayX<Scalar> {
        const ArrayX<Scalar> sp = s.pow(p);
        const ArrayX<Scalar> w = (-log_inv_eps * sp).exp();
        const ArrayX<Scalar> jac = w * log_inv_eps * p * s.pow(p - Scalar(1));
        return jac / (w.pow(4) * b(w).sqrt());
    };
    auto q = integrate_unit_interval<Scalar>(g, spec, op, true);
    const Scalar r3 = r_plus * r_plus * r_plus;
    return {q.value * r3, q.error * r3, q.panels};
}

}  // namespace detail

/// Truncated (truncated-b) w-form directly from the z = 4 coefficients.
template <typename Scalar>
VolumeResult<Scalar> volume_w_form(const SeriesCoeffsZ4<Scalar>& c, Scalar r_plus, Scalar eps,
                                   const QuadratureSpec& spec = {}) {
    constexpr const char* op = "volume_w_form";
    if (!(eps > 0 && eps < 1)) detail::fail<DomainError>(op, "UV cutoff must satisfy 0 < eps < 1");
    if (!(r_plus > 0)) detail::fail<DomainError>(op, "horizon radius r_plus must be positive");
    // b(w) may vanish at the horizon end w = 1 (integrable), nowhere else.
    if (!(truncated_b(eps, c) > 0) || truncated_b(Scalar(1), c) < 0)
        detail::fail<ImaginaryIntegrandError>(op, "truncated b(w) is non-positive on [eps, 1]");
    auto b = [&](const ArrayX<Scalar>& w) -> ArrayX<Scalar> {
        ArrayX<Scalar> v = truncated_b(w, c);
        for (Eigen::Index i = 0; i < w.size(); ++i)
            if (w[i] < Scalar(1) && !(v[i] > 0))
                detail::fail<ImaginaryIntegrandError>(op, "truncated b(w) is non-positive on [eps, 1]");
        return v;
    };
    const auto q = detail::w_integral<Scalar>(b, r_plus, eps, spec, op);
    const Scalar coef = c.valid() ? r_plus * r_plus * r_plus / (Scalar(2) * std::sqrt(-c.b_minus2))
                                  : std::numeric_limits<Scalar>::quiet_NaN();
    return detail::make_volume(q.value, eps, CutoffKind::ultraviolet, VolumeMode::truncated_b, coef, q.error);
}

/// r+^3 \int_eps^1 dw / (w^4 sqrt(b(w))), w = r+/r. In full-B mode b(w) is
/// B(r+/w); in truncated-b mode it is the truncated z = 4 integrand.
template <typename Scalar>
VolumeResult<Scalar> volume_w_form(const BulkParams<Scalar>& p, Scalar eps, VolumeMode mode,
                                   const QuadratureSpec& spec = {}) {
    constexpr const char* op = "volume_w_form";
    p.validate(op);
    if (mode == VolumeMode::series) detail::fail<DomainError>(op, "series mode is volume_series_z4");
    if (mode == VolumeMode::truncated_b) return volume_w_form(series_coeffs_z4(p), p.r_plus, eps, spec);
    if (!(eps > 0 && eps < 1)) detail::fail<DomainError>(op, "UV cutoff must satisfy 0 < eps < 1");
    auto b = [&](const ArrayX<Scalar>& w) -> ArrayX<Scalar> {
        const ArrayX<Scalar> r = p.r_plus / w;
        ArrayX<Scalar> v = blackening(r, p);
        for (Eigen::Index i = 0; i < w.size(); ++i)
            if (w[i] < Scalar(1) && !(v[i] > 0))
                detail::fail<NonPositiveBlackeningError>(op, "blackening function is non-positive inside the domain");
        return v;
    };
    const auto q = detail::w_integral<Scalar>(b, p.r_plus, eps, spec, op);
    const Scalar coef = p.r_plus * p.r_plus * detail::radial_divergence(p);
    return detail::make_volume(q.value, eps, CutoffKind::ultraviolet, VolumeMode::full_b, coef, q.error);
}

/// Closed form r+^3 A / (3840 (-b_{-2})^{9/2}) + r+^3 / (2 eps^2 sqrt(-b_{-2})),
/// A = 640 b_{-2}^3 (b1 - 3 b_{-2}). The error field carries the magnitude of
/// the first omitted term, (3/64) (b1/b_{-2})^2 r+^3 / sqrt(-b_{-2}).
template <typename Scalar>
VolumeResult<Scalar> volume_series_z4(const SeriesCoeffsZ4<Scalar>& c, Scalar r_plus, Scalar eps) {
    constexpr const char* op = "volume_series_z4";
    if (!c.valid()) detail::fail<ConstraintError>(op, "series requires b_{-2} < 0");
    if (!(eps > 0)) detail::fail<DomainError>(op, "UV cutoff must be positive");
    if (!(r_plus > 0)) detail::fail<DomainError>(op, "horizon radius r_plus must be positive");
    const Scalar r3 = r_plus * r_plus * r_plus;
    const Scalar neg = -c.b_minus2;
    const Scalar A = Scalar(640) * c.b_minus2 * c.b_minus2 * c.b_minus2 * (c.b1 - Scalar(3) * c.b_minus2);
    const Scalar finite = r3 * A / (Scalar(3840) * std::pow(neg, Scalar(4.5)));
    const Scalar coef = r3 / (Scalar(2) * std::sqrt(neg));
    const Scalar ratio = c.b1 / c.b_minus2;
    VolumeResult<Scalar> v{finite + coef / (eps * eps),
                           eps,
                           CutoffKind::ultraviolet,
                           VolumeMode::series,
                           coef,
                           Scalar(3) / Scalar(64) * ratio * ratio * r3 / std::sqrt(neg),
                           finite};
    return v;
}

template <typename Scalar>
VolumeResult<Scalar> volume_series_z4(const BulkParams<Scalar>& p, Scalar eps) {
    p.validate("volume_series_z4");
    return volume_series_z4(series_coeffs_z4(p), p.r_plus, eps);
}

/// Lower radial limit of the horizonless background: 0 when B_bg(0) >= 0,
/// otherwise the root of B_bg.
template <typename Scalar>
Scalar background_lower_limit(const BulkParams<Scalar>& p) {
    const auto c = blackening_coefficients(p);
    if (!(c.quadratic < 0))
        detail::fail<NonPositiveBlackeningError>("background_volume", "background B_bg is not positive at large r");
    if (c.constant >= 0) return Scalar(0);
    return std::sqrt(c.constant / c.quadratic);
}

template <typename Scalar>
VolumeResult<Scalar> background_volume(const BulkParams<Scalar>& p, Scalar r_inf, const QuadratureSpec& spec = {}) {
    constexpr const char* op = "background_volume";
    p.validate(op);
    const Scalar r_min = background_lower_limit(p);
    const Scalar coef = detail::radial_divergence(p);
    if (r_inf < r_min) detail::fail<DomainError>(op, "r_inf lies below the background's lower limit");
    if (r_inf == r_min) return detail::make_volume(Scalar(0), r_inf, CutoffKind::radial, VolumeMode::full_b, coef, Scalar(0));
    auto B = [&](const ArrayX<Scalar>& r) -> ArrayX<Scalar> { return background_blackening(r, p); };
    const auto q = radial_volume<Scalar>(B, r_min, r_inf, spec, op);
    return detail::make_volume(q.value, r_inf, CutoffKind::radial, VolumeMode::full_b, coef, q.error);
}

template <typename Scalar = double>
struct Complexity {
    Scalar value;
    Scalar cutoff;
    CutoffKind cutoff_kind;
};

/// F = V / (8 pi R G).
template <typename Scalar>
Scalar complexity(Scalar volume, Scalar R, Scalar G) {
    if (!(R > 0) || !(G > 0)) detail::fail<DomainError>("complexity", "R and G must be positive");
    return volume / (Scalar(8) * std::numbers::pi_v<Scalar> * R * G);
}

template <typename Scalar>
Complexity<Scalar> complexity(const VolumeResult<Scalar>& v, const BulkParams<Scalar>& p) {
    return {complexity(v.value, p.R, p.G), v.cutoff, v.cutoff_kind};
}

/// F_deformed - F_background, both at the same cutoff.
template <typename Scalar>
Scalar regularize(const Complexity<Scalar>& deformed, const Complexity<Scalar>& background) {
    if (deformed.cutoff_kind != background.cutoff_kind ||
        std::abs(deformed.cutoff - background.cutoff) > Scalar(1e-12) * std::abs(deformed.cutoff))
        detail::fail<CutoffMismatchError>("regularize", "deformed and background complexities use different cutoffs");
    return deformed.value - background.value;
}

/// Background-subtracted complexity at a matched radial cutoff.
template <typename Scalar>
Scalar regularized_complexity(const BulkParams<Scalar>& p, Scalar r_inf, const QuadratureSpec& spec = {}) {
    return regularize(complexity(volume_exact(p, r_inf, spec), p), complexity(background_volume(p, r_inf, spec), p));
}

/// sqrt(5) r+^2 sqrt(-xi) (2 L^2 xi Q + 3) / (48 pi G L^3 xi^2 Q^3).
template <typename Scalar>
Scalar xi_f_holo_z4(const BulkParams<Scalar>& p) {
    constexpr const char* op = "xi_f_holo_z4";
    p.validate(op);
    if (std::abs(p.z - Scalar(4)) > Scalar(1e-9)) detail::fail<ConstraintError>(op, "requires z = 4");
    if (!(p.xi < 0)) detail::fail<DomainError>(op, "requires xi < 0");
    if (p.Q == 0) detail::fail<DomainError>(op, "requires a non-zero bulk charge");
    const Scalar L = p.L;
    return std::sqrt(Scalar(5)) * p.r_plus * p.r_plus * std::sqrt(-p.xi) * (Scalar(2) * L * L * p.xi * p.Q + Scalar(3)) /
           (Scalar(48) * std::numbers::pi_v<Scalar> * p.G * L * L * L * p.xi * p.xi * p.Q * p.Q * p.Q);
}

template <typename Scalar = double>
struct DivergenceFit {
    Scalar inverse_square;  ///< coefficient of eps^-2
    Scalar logarithmic;     ///< coefficient of ln eps
    Scalar constant;
    Scalar residual;        ///< max |fit - data| relative to max |data|
};

/// Least-squares fit of V(eps) to {eps^-2, ln eps, 1, eps^2, eps^3}; the
/// log term appears when V0 != 0 in full-B mode.
template <typename Scalar>
DivergenceFit<Scalar> fit_divergence(const BulkParams<Scalar>& p, const std::vector<Scalar>& eps, VolumeMode mode,
                                     const QuadratureSpec& spec = {}) {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    const Eigen::Index n = static_cast<Eigen::Index>(eps.size());
    if (n < 6) detail::fail<DomainError>("fit_divergence", "at least six cutoffs are required");
    Matrix X(n, 5);
    Vector y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Scalar e = eps[static_cast<std::size_t>(i)];
        X.row(i) << Scalar(1) / (e * e), std::log(e), Scalar(1), e * e, e * e * e;
        y[i] = volume_w_form(p, e, mode, spec).value;
    }
    const Vector scale = X.colwise().norm().transpose();
    const Matrix Xs = X * scale.cwiseInverse().asDiagonal();
    const Vector coef = Xs.colPivHouseholderQr().solve(y).cwiseQuotient(scale);
    const Scalar resid = (X * coef - y).cwiseAbs().maxCoeff() / y.cwiseAbs().maxCoeff();
    return {coef[0], coef[1], coef[2], resid};
}

}  // namespace lifshitz

#endif  // LIFSHITZ_VOLUME_ENGINE_HPP
