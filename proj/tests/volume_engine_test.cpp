#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <doctest.h>

#include "lifshitz/volume_engine.hpp"

using namespace lifshitz;

namespace {

BulkParams<> unit_z4(double V0 = 0.0) { return {.L = 1, .xi = -2, .Q = 1, .V0 = V0, .z = 4, .r_plus = 1}; }

// Random parameters with Lambda + Q^2 xi < 0 and a single positive root of B.
BulkParams<> random_valid(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> L(0.5, 2.0), xi(-2.0, -0.1), Q(0.2, 2.0), V0(-1.0, 0.0), z(1.0, 6.0),
        rp(0.5, 2.0);
    return {.L = L(rng), .xi = xi(rng), .Q = Q(rng), .V0 = V0(rng), .z = z(rng), .r_plus = rp(rng)};
}

double tanh_sinh_oracle(const std::function<double(double)>& f, double a, double b) {
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(f, a, b, 1e-14);
}

}  // namespace

TEST_CASE("radial_volume on synthetic blackening functions") {
    auto one = [](const ArrayX<double>& r) -> ArrayX<double> { return ArrayX<double>::Ones(r.size()); };
    CHECK(radial_volume<double>(one, 1.0, 2.0, QuadratureSpec{}).value == doctest::Approx(7.0 / 3.0).epsilon(1e-12));

    // B = r - 1: the 1/sqrt(r - 1) endpoint singularity. Closed form 56/15.
    auto linear = [](const ArrayX<double>& r) -> ArrayX<double> { return r - 1.0; };
    const double oracle = tanh_sinh_oracle([](double u) { return (1 + u) * (1 + u) / std::sqrt(u); }, 0.0, 1.0);
    CHECK(oracle == doctest::Approx(56.0 / 15.0).epsilon(1e-12));
    for (auto scheme : {QuadratureScheme::simpson, QuadratureScheme::gauss_legendre}) {
        const auto q = radial_volume<double>(linear, 1.0, 2.0, QuadratureSpec{.scheme = scheme});
        CHECK(q.value == doctest::Approx(oracle).epsilon(1e-10));
        CHECK(q.error >= 0);
    }

    auto dips = [](const ArrayX<double>& r) -> ArrayX<double> { return (r - 1.5).square() - 0.01; };
    CHECK_THROWS_AS(radial_volume<double>(dips, 1.0, 2.0, QuadratureSpec{}), NonPositiveBlackeningError);
    CHECK_THROWS_AS(radial_volume<double>(one, 2.0, 1.0, QuadratureSpec{}), DomainError);
}

TEST_CASE("volume_exact for the z = 4 solution") {
    const auto p = unit_z4();
    const auto v = volume_exact(p, 100.0);
    // Frozen from a 30-digit adaptive quadrature of r^2 / sqrt(r^2 - r^-3).
    CHECK(v.value == doctest::Approx(4999.86127473740913).epsilon(1e-11));
    CHECK(v.divergent_coefficient == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(v.finite_part == doctest::Approx(-0.138725262590869458).epsilon(1e-7));
    CHECK(v.error >= 0);
    CHECK(v.mode == VolumeMode::full_b);

    // Cross-pipeline: series divergent + finite part, off by O((b1/b_{-2})^2) = O(1) here.
    const auto s = volume_series_z4(p, p.r_plus / 100.0);
    const auto c = series_coeffs_z4(p);
    const double ratio = c.b1 / c.b_minus2;
    CHECK(std::abs(v.value - s.value) <= ratio * ratio * std::pow(p.r_plus, 3) / std::sqrt(-c.b_minus2));

    CHECK_THROWS_AS(volume_exact(p, 0.5), DomainError);
    auto growing = p;
    growing.xi = 5;  // Lambda + Q^2 xi > 0: B turns negative above the horizon.
    CHECK_THROWS_AS(volume_exact(growing, 10.0), NonPositiveBlackeningError);
}

TEST_CASE("w-form equals the radial form under w = r+/r") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 20; ++i) {
        const auto p = random_valid(rng);
        const double r_inf = p.r_plus * std::uniform_real_distribution<double>(3.0, 200.0)(rng);
        const double radial = volume_exact(p, r_inf).value;
        const double wform = volume_w_form(p, p.r_plus / r_inf, VolumeMode::full_b).value;
        CHECK(std::abs(wform / radial - 1.0) <= 1e-8);
        CHECK(radial > 0);
    }
}

TEST_CASE("truncated-b w-form") {
    // b1 = 0, b_{-2} = -1: integrand 1/w^3, analytic value 49.5.
    const SeriesCoeffsZ4<double> c{0.0, -1.0};
    CHECK(volume_w_form(c, 1.0, 0.1).value == doctest::Approx(49.5).epsilon(1e-10));

    // Same coefficients from bulk data: b_{-2} = -1 needs L+Q^2xi = -5, b1 = 0 needs V0 = -6.
    const auto p = unit_z4(-6.0);
    const auto fromp = series_coeffs_z4(p);
    CHECK(fromp.b1 == doctest::Approx(0.0).scale(1.0));
    CHECK(volume_w_form(p, 0.1, VolumeMode::truncated_b).value == doctest::Approx(49.5).epsilon(1e-10));

    // V0 = 0 makes b vanish at w = 1 (horizon); truncated-b then equals full-B.
    const auto h = unit_z4();
    CHECK(volume_w_form(h, 0.05, VolumeMode::truncated_b).value ==
          doctest::Approx(volume_w_form(h, 0.05, VolumeMode::full_b).value).epsilon(1e-10));

    CHECK_THROWS_AS(volume_w_form(unit_z4(6.0), 0.1, VolumeMode::truncated_b), ImaginaryIntegrandError);
    CHECK_THROWS_AS(volume_w_form(c, 1.0, 1.5), DomainError);
    CHECK_THROWS_AS(volume_w_form(h, 0.1, VolumeMode::series), DomainError);
    CHECK_THROWS_AS(volume_w_form(BulkParams<>{.z = 3}, 0.1, VolumeMode::truncated_b), ConstraintError);
}

TEST_CASE("volume_series_z4") {
    const auto a = volume_series_z4(SeriesCoeffsZ4<double>{0.0, -1.0}, 1.0, 0.1);
    CHECK(a.finite_part == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(a.divergent_part() == doctest::Approx(50.0).epsilon(1e-14));
    CHECK(a.value == doctest::Approx(49.5).epsilon(1e-14));

    const auto b = volume_series_z4(SeriesCoeffsZ4<double>{-1.0, -1.0}, 1.0, 0.1);
    CHECK(b.finite_part == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

    // Literal A-form against the simplified finite part.
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> b1(-3.0, 3.0), bm2(-4.0, -0.1), rp(0.2, 3.0);
    for (int i = 0; i < 50; ++i) {
        const SeriesCoeffsZ4<double> c{b1(rng), bm2(rng)};
        const double r = rp(rng), neg = -c.b_minus2;
        const double simplified = r * r * r * (-c.b1 / (6 * std::pow(neg, 1.5)) - 1 / (2 * std::sqrt(neg)));
        CHECK(volume_series_z4(c, r, 0.01).finite_part == doctest::Approx(simplified).epsilon(1e-12));
    }
    CHECK_THROWS_AS(volume_series_z4(SeriesCoeffsZ4<double>{0.0, 0.0}, 1.0, 0.1), ConstraintError);
    CHECK_THROWS_AS(volume_series_z4(BulkParams<>{.z = 2}, 0.1), ConstraintError);
}

TEST_CASE("series truncation error is second order in b1/b_{-2}") {
    std::vector<double> x, y;
    for (double ratio : {0.2, 0.1, 0.05, 0.025}) {
        const SeriesCoeffsZ4<double> c{-ratio, -1.0};
        const double diff =
            std::abs(volume_w_form(c, 1.0, 0.05).value - volume_series_z4(c, 1.0, 0.05).value);
        x.push_back(std::log(ratio));
        y.push_back(std::log(diff));
    }
    // Frozen from a 30-digit quadrature at ratio 0.2 and 0.025.
    CHECK(std::exp(y.front()) == doctest::Approx(0.00209148326212736511).epsilon(1e-5));
    CHECK(std::exp(y.back()) == doctest::Approx(0.0000291576830966204911).epsilon(1e-4));
    const double slope = (y.front() - y.back()) / (x.front() - x.back());
    CHECK(slope == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("divergence coefficient is r+^3 / (2 sqrt(-b_{-2}))") {
    std::vector<double> eps;
    for (int i = 0; i < 10; ++i) eps.push_back(0.1 * std::pow(0.7, i));
    for (double V0 : {0.0, -2.0, 1.5}) {
        const auto p = unit_z4(V0);
        const auto c = series_coeffs_z4(p);
        const double expected = std::pow(p.r_plus, 3) / (2 * std::sqrt(-c.b_minus2));
        const auto fit = fit_divergence(p, eps, VolumeMode::full_b);
        CHECK(fit.inverse_square == doctest::Approx(expected).epsilon(1e-6));
        CHECK(volume_w_form(p, 0.01, VolumeMode::full_b).divergent_coefficient ==
              doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("complexity and regularize") {
    CHECK(complexity(8 * std::numbers::pi, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(complexity(50.0, 1.0, 1.0) == doctest::Approx(1.98943678864869170).epsilon(1e-14));
    const auto v = volume_series_z4(SeriesCoeffsZ4<double>{0.0, -1.0}, 1.0, 0.1);
    CHECK(complexity(v, BulkParams<>{}).value == doctest::Approx((50.0 - 0.5) / (8 * std::numbers::pi)).epsilon(1e-14));
    CHECK_THROWS_AS(complexity(1.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(complexity(1.0, 1.0, -1.0), DomainError);

    const Complexity<double> same{2.5, 100.0, CutoffKind::radial};
    CHECK(regularize(same, same) == 0.0);
    const double norm = 8 * std::numbers::pi;
    const Complexity<double> deformed{(50.0 - 1.0 / 3.0) / norm, 100.0, CutoffKind::radial};
    const Complexity<double> background{50.0 / norm, 100.0, CutoffKind::radial};
    CHECK(regularize(deformed, background) * norm == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(regularize(deformed, Complexity<double>{1.0, 200.0, CutoffKind::radial}), CutoffMismatchError);
    CHECK_THROWS_AS(regularize(deformed, Complexity<double>{1.0, 100.0, CutoffKind::ultraviolet}), CutoffMismatchError);
}

TEST_CASE("background volume") {
    // V0 = 0: B_bg = -c2 r^2, V = (r_inf^2 - r_min^2) / (2 sqrt(-c2)), r_min = 0.
    const auto p = unit_z4();
    CHECK(background_lower_limit(p) == 0.0);
    CHECK(background_volume(p, 30.0).value == doctest::Approx(900.0 / 2.0).epsilon(1e-12));
    CHECK(background_volume(p, 0.0).value == 0.0);

    // V0 < 0: lower limit at the root of B_bg, square-root endpoint.
    const auto q = unit_z4(-3.0);
    const double c0 = -3.0 / 6.0, c2 = -1.0;
    CHECK(background_lower_limit(q) == doctest::Approx(std::sqrt(c0 / c2)).epsilon(1e-15));
    const double rmin = background_lower_limit(q);
    // u = r - r_min keeps B_bg = -c2 u (2 r_min + u) free of cancellation.
    const double oracle = tanh_sinh_oracle(
        [&](double u) { return (rmin + u) * (rmin + u) / std::sqrt(-c2 * u * (2 * rmin + u)); }, 0.0, 20.0 - rmin);
    CHECK(background_volume(q, 20.0).value == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(background_volume(q, rmin).value == 0.0);
    CHECK_THROWS_AS(background_volume(q, 0.1), DomainError);

    // V0 > 0: smooth from r = 0.
    const auto s = unit_z4(4.0);
    const double oracle2 =
        tanh_sinh_oracle([&](double r) { return r * r / std::sqrt(4.0 / 6.0 + r * r); }, 0.0, 20.0);
    CHECK(background_volume(s, 20.0).value == doctest::Approx(oracle2).epsilon(1e-10));

    // Same r_inf^2 coefficient as the deformed geometry.
    CHECK(background_volume(q, 50.0).divergent_coefficient ==
          doctest::Approx(volume_exact(q, 50.0).divergent_coefficient).epsilon(1e-15));
}

TEST_CASE("regularized complexity converges as r_inf grows") {
    for (double V0 : {0.0, -1.0, 2.0}) {
        const auto p = unit_z4(V0);
        std::vector<double> values;
        for (double f : {50.0, 100.0, 200.0, 400.0}) values.push_back(regularized_complexity(p, f * p.r_plus));
        for (std::size_t i = 2; i < values.size(); ++i)
            CHECK(std::abs(values[i] - values[i - 1]) < std::abs(values[i - 1] - values[i - 2]));
        CHECK(std::abs(values[3] - values[2]) < 1e-4 * std::abs(values[3]));
    }

    // V0 = 0: the limit is the exact w-form finite part (frozen from a
    // 30-digit quadrature) and the series finite part misses it by O(1).
    const auto p = unit_z4();
    const double limit = -0.138725095924202788 / (8 * std::numbers::pi);
    CHECK(regularized_complexity(p, 400.0) == doctest::Approx(limit).epsilon(1e-7));
    const double series = volume_series_z4(p, 0.01).finite_part / (8 * std::numbers::pi);
    CHECK(std::abs(series - limit) <= 1.0 / (8 * std::numbers::pi));
}

TEST_CASE("xi_f_holo_z4") {
    const BulkParams<> unit{.L = 1, .xi = -1, .Q = 1, .z = 4, .r_plus = 1, .G = 1};
    CHECK(xi_f_holo_z4(unit) == doctest::Approx(std::sqrt(5.0) / (48 * std::numbers::pi)).epsilon(1e-14));
    CHECK(xi_f_holo_z4(unit) == doctest::Approx(0.0148283863211911887).epsilon(1e-14));
    auto twice = unit;
    twice.r_plus = 2;
    CHECK(xi_f_holo_z4(twice) == doctest::Approx(4 * xi_f_holo_z4(unit)).epsilon(1e-14));

    auto big = unit;
    big.Q = 1e4;
    const double a = xi_f_holo_z4(big);
    big.Q = 2e4;
    CHECK(xi_f_holo_z4(big) / a == doctest::Approx(0.25).epsilon(1e-3));

    CHECK_THROWS_AS(xi_f_holo_z4(BulkParams<>{.xi = 1}), DomainError);
    CHECK_THROWS_AS(xi_f_holo_z4(BulkParams<>{.Q = 0}), DomainError);
    CHECK_THROWS_AS(xi_f_holo_z4(BulkParams<>{.z = 3}), ConstraintError);
}
