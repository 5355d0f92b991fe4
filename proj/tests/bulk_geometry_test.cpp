#include <cmath>
#include <random>

#include <doctest.h>

#include "lifshitz/bulk_geometry.hpp"

using namespace lifshitz;

namespace {

// Lambda + Q^2 xi = -5 with L = 1 (Lambda = -3), Q = 1, xi = -2.
BulkParams<> unit_z4(double V0 = 0.0) { return {.L = 1, .xi = -2, .Q = 1, .V0 = V0, .z = 4, .r_plus = 1}; }

BulkParams<> random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> L(0.3, 3.0), xi(-3.0, -0.05), Q(0.1, 4.0), V0(-5.0, 5.0), z(1.0, 8.0),
        rp(0.1, 5.0);
    return {.L = L(rng), .xi = xi(rng), .Q = Q(rng), .V0 = V0(rng), .z = z(rng), .r_plus = rp(rng)};
}

}  // namespace

TEST_CASE("BulkParams defaults follow the curvature scale") {
    const BulkParams<> p{.L = 2};
    CHECK(p.Lambda == -0.75);
    CHECK(p.R == 2);
    CHECK_NOTHROW(p.validate("test"));
    BulkParams<> bad = p;
    bad.Lambda = -1;
    CHECK_THROWS_AS(bad.validate("test"), DomainError);
    CHECK_THROWS_AS((BulkParams<>{.r_plus = 0}).validate("test"), DomainError);
    CHECK_THROWS_AS((BulkParams<>{.z = 0.5}).validate("test"), DomainError);
    CHECK_THROWS_AS((BulkParams<>{.G = -1}).validate("test"), DomainError);
}

TEST_CASE("blackening vanishes on the horizon") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const auto p = random_params(rng);
        CHECK(std::abs(blackening(p.r_plus, p)) <= 1e-12);
    }
}

TEST_CASE("blackening spot values") {
    // Direct substitution with c2 = 2(-5)/10 = -1, V0 = 0: (1/2)^3 (-1) + 4.
    CHECK(blackening(2.0, unit_z4()) == doctest::Approx(0.125 * -1.0 + 4.0).epsilon(1e-15));
    CHECK(blackening(2.0, unit_z4()) == doctest::Approx(3.875).epsilon(1e-15));

    const auto p = unit_z4(2.0);
    for (double r : {10.0, 100.0, 1000.0}) {
        const double leading = -2.0 * p.coupling_sum() / 10.0 * r * r;
        CHECK(blackening(r, p) > 0);
        CHECK(blackening(r, p) / leading == doctest::Approx(1.0).epsilon(1.0 / (r * r)));
    }
    CHECK_THROWS_AS(blackening(0.0, p), DomainError);
    CHECK_THROWS_AS(blackening(-1.0, p), DomainError);

    Eigen::ArrayXd r = Eigen::ArrayXd::LinSpaced(7, 0.5, 4.0);
    const Eigen::ArrayXd b = blackening(r, p);
    for (Eigen::Index i = 0; i < r.size(); ++i) CHECK(b[i] == doctest::Approx(blackening(r[i], p)).epsilon(1e-14));
}

TEST_CASE("blackening derivative matches central differences") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        const auto p = random_params(rng);
        const double r = p.r_plus * 1.7, h = 1e-5 * r;
        const double fd = (blackening(r + h, p) - blackening(r - h, p)) / (2 * h);
        CHECK(blackening_derivative(r, p) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("lifshitz_exponent") {
    const double Lambda = -3.0;
    CHECK(lifshitz_exponent(1.0, -Lambda / 2, Lambda) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(lifshitz_exponent(1.0, -3 * Lambda / 7, Lambda) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(lifshitz_exponent(0.0, 2.0, Lambda) == 0.0);
    CHECK_THROWS_AS(lifshitz_exponent(1.0, 3.0, Lambda), SingularityError);

    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> L(0.2, 5.0), Q(0.1, 10.0);
    for (int i = 0; i < 100; ++i) {
        const double lam = -3.0 / std::pow(L(rng), 2), q = Q(rng);
        CHECK(std::abs(lifshitz_exponent(q, -lam / (2 * q * q), lam) - 4.0) <= 1e-12);
    }
}

TEST_CASE("series_coeffs_z4") {
    auto c = series_coeffs_z4(unit_z4());
    CHECK(c.b1 == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(c.b_minus2 == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(c.valid());

    c = series_coeffs_z4(unit_z4(6.0));
    CHECK(c.b1 == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(c.b_minus2 == doctest::Approx(-1.0).epsilon(1e-15));

    // Lambda + Q^2 xi = 0: Lambda = -3, xi = 3.
    c = series_coeffs_z4(BulkParams<>{.xi = 3, .V0 = 1.2});
    CHECK(c.b1 == doctest::Approx(-0.2).epsilon(1e-15));
    CHECK(c.b_minus2 == 0.0);
    CHECK_FALSE(c.valid());

    CHECK_THROWS_AS(series_coeffs_z4(BulkParams<>{.z = 3}), ConstraintError);
}

TEST_CASE("z = 4 coefficient identities") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        auto p = random_params(rng);
        p.z = 4;
        const auto c = series_coeffs_z4(p);
        CHECK(c.b1 - c.b_minus2 == doctest::Approx(-p.V0 / 6).epsilon(1e-12).scale(1.0));
        // B(r+/w) = b1 w^3 - b_{-2}/w^2 + V0/6
        for (double w : {1e-3, 0.1, 0.37, 0.8, 1.0}) {
            const double lhs = truncated_b(w, c) + p.V0 / 6;
            const double rhs = blackening(p.r_plus / w, p);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("geometry_flags reports inconsistencies") {
    // z = 4 field with couplings implying z = -1.6.
    auto flags = geometry_flags(unit_z4());
    CHECK(std::find(flags.begin(), flags.end(), "z-inconsistent-with-couplings") != flags.end());

    // Couplings tuned to z = 4 need Q^2 xi = -Lambda/2 > 0.
    const BulkParams<> tuned{.xi = 1.5, .Q = 1};
    flags = geometry_flags(tuned);
    CHECK(std::find(flags.begin(), flags.end(), "z-inconsistent-with-couplings") == flags.end());
    CHECK(std::find(flags.begin(), flags.end(), "xi-nonnegative") != flags.end());

    flags = geometry_flags(BulkParams<>{.xi = 3});
    CHECK(std::find(flags.begin(), flags.end(), "b-2-nonnegative") != flags.end());
    CHECK(std::find(flags.begin(), flags.end(), "z-coupling-singular") != flags.end());
}
