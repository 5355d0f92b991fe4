// boundary_qm.hpp
//
// N non-interacting charged bosons in a uniform field H e_z, Landau gauge
// A = (0, H x, 0). Each particle factorizes into plane waves along y and z
// times a shifted harmonic oscillator in x with frequency qH/m centred at
// beta/(qH). Fidelity is taken between ground states at H and H + dH,
// evaluated at t = 0 with identical (beta, k) so the plane-wave factors
// cancel and only the x-profile overlaps contribute.
#ifndef LIFSHITZ_BOUNDARY_QM_HPP
#define LIFSHITZ_BOUNDARY_QM_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"
#include "quadrature.hpp"

namespace lifshitz {

/// Boundary-theory inputs in natural units (hbar = c = 1). All particles
/// share the transverse momentum beta and the longitudinal momentum k.
template <typename Scalar = double>
struct BosonGasParams {
    int N = 1;
    Scalar q = 1;
    Scalar m = 1;
    Scalar H = 1;
    Scalar beta = 0;
    Scalar k = 0;

    void validate(const char* op) const {
        if (N < 1) detail::fail<DomainError>(op, "particle count N must be >= 1");
        if (!(q > 0)) detail::fail<DomainError>(op, "charge q must be positive");
        if (!(m > 0)) detail::fail<DomainError>(op, "mass m must be positive");
        if (!(H > 0)) detail::fail<DomainError>(op, "field strength H must be positive");
        if (!std::isfinite(beta) || !std::isfinite(k)) detail::fail<DomainError>(op, "beta and k must be finite");
    }
};

/// Per-particle ground state phi0(x) = (a/pi)^(1/4) exp(-a (x - x0)^2 / 2).
template <typename Scalar = double>
struct GroundState1D {
    Scalar width;      ///< a = qH
    Scalar center;     ///< x0 = beta / (qH)
    Scalar energy;     ///< E0 = (qH + k^2) / (2m)
    Scalar frequency;  ///< omega = qH / m

    Scalar sigma() const { return Scalar(1) / std::sqrt(width); }

    Scalar operator()(Scalar x) const {
        const Scalar d = x - center;
        return std::pow(width / std::numbers::pi_v<Scalar>, Scalar(0.25)) * std::exp(-width * d * d / Scalar(2));
    }

    template <typename Derived>
    ArrayX<Scalar> operator()(const Eigen::ArrayBase<Derived>& x) const {
        const Scalar norm = std::pow(width / std::numbers::pi_v<Scalar>, Scalar(0.25));
        return norm * (-(width / Scalar(2)) * (x.derived() - center).square()).exp();
    }
};

template <typename Scalar>
GroundState1D<Scalar> ground_state(const BosonGasParams<Scalar>& p) {
    p.validate("ground_state");
    const Scalar a = p.q * p.H;
    return {a, p.beta / a, (a + p.k * p.k) / (Scalar(2) * p.m), a / p.m};
}

/// Closed-form overlap of two normalized real Gaussians.
template <typename Scalar>
Scalar gaussian_overlap(Scalar a, Scalar xa, Scalar b, Scalar xb) {
    if (!(a > 0) || !(b > 0)) detail::fail<DomainError>("gaussian_overlap", "widths must be positive");
    const Scalar d = xa - xb;
    return std::pow(a * b, Scalar(0.25)) * std::sqrt(Scalar(2) / (a + b)) * std::exp(-a * b * d * d / (Scalar(2) * (a + b)));
}

/// Uniform position grid for overlap integrals: the window spans
/// half_width standard deviations around every Gaussian involved.
struct OverlapGrid {
    double half_width = 10.0;
    int points = 4096;
    double tolerance = 1e-12;  ///< relative refinement and tail tolerance
};

/// Finite-difference grid for the eigenvalue oracle.
struct OscillatorGrid {
    double half_width = 10.0;  ///< in units of sigma = (qH)^(-1/2); must be >= 8
    int points = 4096;         ///< interior points of the coarse level; must be >= 2000
    double tolerance = 1e-4;   ///< max relative change between the two levels
};

namespace detail {

template <typename Scalar>
Scalar simpson_on_window(const GroundState1D<Scalar>& s1, const GroundState1D<Scalar>& s2, Scalar lo, Scalar hi,
                         Eigen::Index n, Scalar tail_tolerance, const char* op) {
    const ArrayX<Scalar> x = ArrayX<Scalar>::LinSpaced(n + 1, lo, hi);
    const ArrayX<Scalar> f = s1(x) * s2(x);
    const Scalar peak = f.maxCoeff();
    if (!(peak > 0)) fail<NumericalError>(op, "integrand underflows on the whole window");
    if (std::max(f[0], f[n]) > tail_tolerance * peak)
        fail<GridCoverageError>(op, "window truncates the integrand tails; increase half_width");
    return (simpson_weights<Scalar>(n, (hi - lo) / Scalar(n)) * f).sum();
}

template <typename Scalar>
Scalar overlap_on_grid(const GroundState1D<Scalar>& s1, const GroundState1D<Scalar>& s2, const OverlapGrid& grid,
                       const char* op) {
    if (!(grid.half_width > 0) || grid.points < 64 || !(grid.tolerance > 0))
        fail<DomainError>(op, "overlap grid needs half_width > 0, >= 64 points and a positive tolerance");
    const Scalar w = Scalar(grid.half_width);
    const Scalar lo = std::min(s1.center - w * s1.sigma(), s2.center - w * s2.sigma());
    const Scalar hi = std::max(s1.center + w * s1.sigma(), s2.center + w * s2.sigma());
    Eigen::Index n = grid.points - 1;
    if (n % 2) ++n;
    const Scalar tol = Scalar(grid.tolerance);
    const Scalar coarse = simpson_on_window(s1, s2, lo, hi, n, tol, op);
    const Scalar fine = simpson_on_window(s1, s2, lo, hi, 2 * n, tol, op);
    if (std::abs(fine - coarse) > tol * std::abs(fine))
        fail<ConvergenceError>(op, "overlap quadrature did not converge on the requested grid");
    return fine;
}

}  // namespace detail

/// Quadrature check of the unit normalization of phi0.
template <typename Scalar>
Scalar normalization_quadrature(const GroundState1D<Scalar>& s, const OverlapGrid& grid = {}) {
    return detail::overlap_on_grid(s, s, grid, "normalization_quadrature");
}

/// Numerically integrates phi0^{H + dH}(x) phi0^{H}(x) over x.
template <typename Scalar>
Scalar overlap_quadrature(const BosonGasParams<Scalar>& p, Scalar dH, const OverlapGrid& grid = {}) {
    if (!(dH > -p.H)) detail::fail<DomainError>("overlap_quadrature", "perturbation must satisfy dH > -H");
    BosonGasParams<Scalar> shifted = p;
    shifted.H = p.H + dH;
    return detail::overlap_on_grid(ground_state(p), ground_state(shifted), grid, "overlap_quadrature");
}

enum class OverlapMethod { closed_form, quadrature };

/// Single-particle overlap <phi0(H) | phi0(H + dH)>.
template <typename Scalar>
Scalar particle_overlap(const BosonGasParams<Scalar>& p, Scalar dH, OverlapMethod method = OverlapMethod::closed_form,
                        const OverlapGrid& grid = {}) {
    if (method == OverlapMethod::quadrature) return overlap_quadrature(p, dH, grid);
    if (!(dH > -p.H)) detail::fail<DomainError>("particle_overlap", "perturbation must satisfy dH > -H");
    BosonGasParams<Scalar> shifted = p;
    shifted.H = p.H + dH;
    const auto s1 = ground_state(p);
    const auto s2 = ground_state(shifted);
    return gaussian_overlap(s1.width, s1.center, s2.width, s2.center);
}

/// N-particle overlap amplitude (product state, so the single-particle value to the N).
template <typename Scalar>
Scalar fidelity(const BosonGasParams<Scalar>& p, Scalar dH, OverlapMethod method = OverlapMethod::closed_form,
                const OverlapGrid& grid = {}) {
    return std::pow(particle_overlap(p, dH, method, grid), Scalar(p.N));
}

/// N (qH + 4 beta^2) / (8 q H^3): the squared-overlap susceptibility.
template <typename Scalar>
Scalar xi_f_analytic(const BosonGasParams<Scalar>& p) {
    p.validate("xi_f_analytic");
    return Scalar(p.N) * (p.q * p.H + Scalar(4) * p.beta * p.beta) / (Scalar(8) * p.q * p.H * p.H * p.H);
}

/// Same expression written in terms of the combination beta^2 / q, which is
/// all the holographic dictionary determines.
template <typename Scalar>
Scalar xi_f_analytic_reduced(Scalar N, Scalar beta2_over_q, Scalar H) {
    if (!(H > 0)) detail::fail<DomainError>("xi_f_analytic_reduced", "field strength H must be positive");
    return N * (Scalar(1) / (Scalar(8) * H * H) + beta2_over_q / (Scalar(2) * H * H * H));
}

template <typename Scalar = double>
struct FidelityFit {
    Scalar c_amp;         ///< F = 1 - c_amp dH^2 + ...
    Scalar c_sq;          ///< |F|^2 = 1 - c_sq dH^2 + ...
    Scalar residual_amp;  ///< max fit residual relative to the quadratic term
    Scalar residual_sq;
    std::vector<Scalar> samples;
};

/// Default fit samples: +-{1, 2, 3, 4} x 1e-3 H.
template <typename Scalar>
std::vector<Scalar> default_fit_samples(Scalar H) {
    std::vector<Scalar> out;
    for (int i : {-4, -3, -2, -1, 1, 2, 3, 4}) out.push_back(Scalar(i) * Scalar(1e-3) * H);
    return out;
}

namespace detail {

// Least squares y = c2 d^2 + c3 d^3 + c4 d^4; c3 and c4 are nuisance terms.
template <typename Scalar>
std::pair<Scalar, Scalar> fit_quadratic(const std::vector<Scalar>& d, const ArrayX<Scalar>& y) {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    const Eigen::Index n = static_cast<Eigen::Index>(d.size());
    Scalar dmax = 0;
    for (Scalar v : d) dmax = std::max(dmax, std::abs(v));
    Matrix X(n, 3);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Scalar t = d[static_cast<std::size_t>(i)] / dmax;
        X(i, 0) = t * t;
        X(i, 1) = t * t * t;
        X(i, 2) = t * t * t * t;
    }
    const Vector coef = X.colPivHouseholderQr().solve(y.matrix());
    const Scalar quadratic_scale = std::abs(coef[0]);
    const Scalar resid = (X * coef - y.matrix()).cwiseAbs().maxCoeff();
    const Scalar c2 = coef[0] / (dmax * dmax);
    return {c2, quadratic_scale > 0 ? resid / quadratic_scale : std::numeric_limits<Scalar>::infinity()};
}

}  // namespace detail

/// Fits 1 - c dH^2 to the N-particle amplitude and to its square.
/// c_sq is the reported susceptibility; c_sq = 2 c_amp to leading order.
template <typename Scalar>
FidelityFit<Scalar> xi_f_from_fit(const BosonGasParams<Scalar>& p, const std::vector<Scalar>& samples,
                                  OverlapMethod method = OverlapMethod::quadrature, const OverlapGrid& grid = {}) {
    constexpr const char* op = "xi_f_from_fit";
    p.validate(op);
    const std::set<Scalar> distinct(samples.begin(), samples.end());
    if (distinct.size() < 4) detail::fail<DomainError>(op, "at least four distinct dH samples are required");
    for (Scalar d : samples)
        if (std::abs(d) / p.H > Scalar(1e-2)) detail::fail<DomainError>(op, "samples must satisfy |dH|/H <= 1e-2");

    const Eigen::Index n = static_cast<Eigen::Index>(samples.size());
    ArrayX<Scalar> amp(n), sq(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Scalar f = fidelity(p, samples[static_cast<std::size_t>(i)], method, grid);
        amp[i] = f - Scalar(1);
        sq[i] = f * f - Scalar(1);
    }
    const auto [ca, ra] = detail::fit_quadratic(samples, amp);
    const auto [cs, rs] = detail::fit_quadratic(samples, sq);
    const Scalar limit(1e-6);
    if (!(ra <= limit) || !(rs <= limit))
        detail::fail<FitError>(op, "fit residual exceeds 1e-6 of the quadratic term (ill-conditioned samples)");
    return {-ca, -cs, ra, rs, samples};
}

namespace detail {

// Number of eigenvalues of the symmetric tridiagonal (diag, off) below x.
template <typename Scalar>
Eigen::Index sturm_count(const ArrayX<Scalar>& diag, Scalar off, Scalar x) {
    const Scalar off2 = off * off;
    const Scalar tiny = std::numeric_limits<Scalar>::min();
    Eigen::Index count = 0;
    Scalar q = diag[0] - x;
    if (q < 0) ++count;
    for (Eigen::Index i = 1; i < diag.size(); ++i) {
        if (q == 0) q = tiny;
        q = diag[i] - x - off2 / q;
        if (q < 0) ++count;
    }
    return count;
}

// Lowest eigenvalue of a constant-off-diagonal tridiagonal matrix by bisection.
template <typename Scalar>
Scalar lowest_tridiagonal_eigenvalue(const ArrayX<Scalar>& diag, Scalar off) {
    Scalar lo = diag.minCoeff() - Scalar(2) * std::abs(off);
    Scalar hi = diag.minCoeff();
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    for (int it = 0; it < 400 && hi - lo > Scalar(4) * eps * std::max(std::abs(lo), std::abs(hi)); ++it) {
        const Scalar mid = lo + (hi - lo) / Scalar(2);
        if (sturm_count(diag, off, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return lo + (hi - lo) / Scalar(2);
}

template <typename Scalar>
Scalar oscillator_level(const BosonGasParams<Scalar>& p, Scalar lo, Scalar hi, Eigen::Index interior) {
    const Scalar h = (hi - lo) / Scalar(interior + 1);
    const ArrayX<Scalar> x = ArrayX<Scalar>::LinSpaced(interior, lo + h, hi - h);
    const Scalar qH = p.q * p.H;
    // Potential exactly as it appears before completing the square.
    const ArrayX<Scalar> potential =
        qH * qH * x.square() - Scalar(2) * p.q * p.beta * p.H * x + p.k * p.k + p.beta * p.beta;
    const Scalar inv2m = Scalar(1) / (Scalar(2) * p.m);
    const ArrayX<Scalar> diag = inv2m * (Scalar(2) / (h * h) + potential);
    return lowest_tridiagonal_eigenvalue<Scalar>(diag, -inv2m / (h * h));
}

}  // namespace detail

/// Lowest eigenvalue of the second-order finite-difference discretization of
///   (1/2m) [ -d^2/dx^2 + q^2 H^2 x^2 - 2 q beta H x + k^2 + beta^2 ]
/// with Dirichlet walls at x0 +- half_width sigma. Two levels (h, h/2) are
/// combined by Richardson extrapolation.
template <typename Scalar>
Scalar oscillator_spectrum_oracle(const BosonGasParams<Scalar>& p, const OscillatorGrid& grid = {}) {
    constexpr const char* op = "oscillator_spectrum_oracle";
    p.validate(op);
    if (grid.half_width < 8.0) detail::fail<DomainError>(op, "grid half-width must be >= 8 sigma");
    if (grid.points < 2000) detail::fail<DomainError>(op, "grid must have >= 2000 points");
    const auto gs = ground_state(p);
    const Scalar reach = Scalar(grid.half_width) * gs.sigma();
    const Scalar lo = gs.center - reach;
    const Scalar hi = gs.center + reach;
    const Eigen::Index n = grid.points;
    const Scalar coarse = detail::oscillator_level(p, lo, hi, n);
    const Scalar fine = detail::oscillator_level(p, lo, hi, 2 * n + 1);
    if (std::abs(fine - coarse) > Scalar(grid.tolerance) * std::abs(fine))
        detail::fail<ConvergenceError>(op, "successive grid refinements differ by more than the tolerance");
    return (Scalar(4) * fine - coarse) / Scalar(3);
}

}  // namespace lifshitz

#endif  // LIFSHITZ_BOUNDARY_QM_HPP
