#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pbwos/analytic.hpp"
#include "support/quadrature_k0.hpp"

using namespace pbwos;
using pbwos::test::quadrature_k0;

TEST_CASE("bessel_k0: reference values") {
    CHECK(bessel_k0(1.0) == doctest::Approx(0.42102443824070833).epsilon(1e-14));
    CHECK(bessel_k0(2.0) == doctest::Approx(0.11389387274953344).epsilon(1e-14));
    // Scaled large-argument value: K0(50) * sqrt(100/pi) * e^50.
    CHECK(bessel_k0(50.0) * std::sqrt(100.0 / std::numbers::pi) * std::exp(50.0) ==
          doctest::Approx(0.99752755631466297).epsilon(1e-13));
    CHECK_THROWS_AS(bessel_k0(0.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_k0(-1.0), std::invalid_argument);
}

TEST_CASE("bessel_k0: matches the integral representation to 1e-8") {
    for (int i = 0; i <= 100; ++i) {
        const double x = 1e-3 * std::pow(100.0 / 1e-3, i / 100.0);
        const double ref = quadrature_k0(x);
        INFO("x = ", x);
        CHECK(std::abs(bessel_k0(x) - ref) <= 1e-8 * ref);
    }
}

TEST_CASE("bessel_k0: branch seam and monotone decay") {
    // The series/Chebyshev switch at x = 2 must not leave a jump.
    CHECK(bessel_k0(2.0 - 1e-12) == doctest::Approx(bessel_k0(2.0 + 1e-12)).epsilon(1e-11));
    double prev = bessel_k0(1e-3);
    for (int i = 1; i <= 500; ++i) {
        const double x = 1e-3 * std::pow(700.0 / 1e-3, i / 500.0);
        const double k = bessel_k0(x);
        CHECK(k < prev);
        CHECK(k > 0.0);
        prev = k;
    }
    CHECK(std::isfinite(bessel_k0(1e4)));
}

TEST_CASE("half space profile") {
    CHECK(analytic_half_space(0.0, 1.0) == 1.0);
    CHECK(analytic_half_space(1.0, 1.0) == doctest::Approx(0.36787944117144232).epsilon(1e-15));
    CHECK(analytic_half_space(2.0, 0.5) == doctest::Approx(0.36787944117144232).epsilon(1e-15));
    CHECK(analytic_half_space(3.0, 0.0) == 1.0);
    CHECK_THROWS_AS(analytic_half_space(-0.1, 1.0), std::invalid_argument);
}

TEST_CASE("slab profile") {
    CHECK(analytic_slab(1.0, 1.0, 1.0) == 1.0);    // on the top plate
    CHECK(analytic_slab(-1.0, 1.0, 1.0) == 1.0);   // on the bottom plate
    CHECK(analytic_slab(0.0, 1.0, 1.0) == doctest::Approx(0.6480542736638854).epsilon(1e-14));
    CHECK(analytic_slab(0.5, 1.0, 0.0) == 1.0);    // no screening
    CHECK(analytic_slab(0.25, 0.5, 2.0) ==
          doctest::Approx(std::cosh(0.5) / std::cosh(1.0)).epsilon(1e-14));
    // Large kappa*L must not overflow: value decays like exp(-kappa*(L-|r|)).
    CHECK(analytic_slab(0.0, 1.0, 1000.0) <= 1e-300);
    CHECK(analytic_slab(0.0, 1.0, 1000.0) >= 0.0);
    CHECK(std::isfinite(analytic_slab(999.0, 1000.0, 5.0)));
    CHECK_THROWS_AS(analytic_slab(1.5, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(analytic_slab(0.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("cylinder profile") {
    CHECK(analytic_cylinder(0.0, 1.0, 1.0) == 1.0);
    CHECK(analytic_cylinder(1.0, 1.0, 1.0) == doctest::Approx(0.27051606131332919).epsilon(1e-13));
    const double ref = quadrature_k0(2.5 * 3.0) / quadrature_k0(2.5 * 2.0);
    CHECK(analytic_cylinder(1.0, 2.0, 2.5) == doctest::Approx(ref).epsilon(1e-10));
    CHECK_THROWS_AS(analytic_cylinder(-0.1, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(analytic_cylinder(1.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(analytic_cylinder(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("sphere profile") {
    CHECK(analytic_sphere(0.0, 1.0, 1.0) == 1.0);
    CHECK(analytic_sphere(1.0, 1.0, 1.0) == doctest::Approx(0.18393972058572116).epsilon(1e-14));
    CHECK(analytic_sphere(1.0, 1.0, 0.0) == 0.5);  // pure Coulomb falloff R/(R+r)
    CHECK_THROWS_AS(analytic_sphere(-0.1, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(analytic_sphere(1.0, -1.0, 1.0), std::invalid_argument);
}

// Discrete Laplacian residual: each profile must satisfy the screened
// equation lap(psi) = kappa^2 * psi. The radial forms reduce to
//   half space / slab:  psi''
//   cylinder:           psi'' + psi'/rho        (rho = R + r)
//   sphere:             psi'' + 2 psi'/rho
// Centered differences at spacing h have O(h^2) truncation error, so at
// h = 1e-3 the relative residual must stay below 1e-6.
namespace {

struct Derivs {
    double psi, d1, d2;
};

template <class F>
Derivs stencil(F f, double r, double h) {
    const double fm = f(r - h), f0 = f(r), fp = f(r + h);
    return {f0, (fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h)};
}

}  // namespace

TEST_CASE("profiles satisfy the screened equation to stencil accuracy") {
    const double kappa = 1.0, h = 1e-3, tol = 1e-6;

    SUBCASE("half space") {
        for (const double r : {0.5, 1.0, 2.0, 4.0}) {
            const auto d = stencil([&](double x) { return analytic_half_space(x, kappa); }, r, h);
            CHECK(std::abs(d.d2 - kappa * kappa * d.psi) <= tol * kappa * kappa * d.psi);
        }
    }

    SUBCASE("slab") {
        for (const double r : {-0.6, -0.2, 0.0, 0.3, 0.7}) {
            const auto d = stencil([&](double x) { return analytic_slab(x, 1.0, kappa); }, r, h);
            CHECK(std::abs(d.d2 - kappa * kappa * d.psi) <= tol * kappa * kappa * d.psi);
        }
    }

    SUBCASE("cylinder") {
        const double R = 1.0;
        for (const double r : {0.25, 0.5, 1.0, 2.0, 3.5}) {
            const auto d = stencil([&](double x) { return analytic_cylinder(x, R, kappa); }, r, h);
            const double rho = R + r;
            const double lap = d.d2 + d.d1 / rho;
            CHECK(std::abs(lap - kappa * kappa * d.psi) <= tol * kappa * kappa * d.psi);
        }
    }

    SUBCASE("sphere") {
        const double R = 1.0;
        for (const double r : {0.25, 0.5, 1.0, 2.0, 3.5}) {
            const auto d = stencil([&](double x) { return analytic_sphere(x, R, kappa); }, r, h);
            const double rho = R + r;
            const double lap = d.d2 + 2.0 * d.d1 / rho;
            CHECK(std::abs(lap - kappa * kappa * d.psi) <= tol * kappa * kappa * d.psi);
        }
    }
}
