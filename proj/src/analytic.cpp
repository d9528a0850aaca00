#include "pbwos/analytic.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace pbwos {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// Chebyshev coefficients of K0(x)*sqrt(x)*exp(x) in t = 4/x - 1 for
// x in [2, inf), generated by scripts/gen_k0_cheb.py. Max relative error
// of the fit is below 4e-16.
constexpr double kK0ChebCoeffs[] = {
    2.4403030820659554547,     -0.031448101311964500543,  0.0015698838857300533749,
    -0.00012849549581627802638, 1.3949813718876499364e-05, -1.8317555227191194848e-06,
    2.7668136394450150761e-07, -4.6604898976879476656e-08, 8.5740340174142260858e-09,
    -1.6975345093890615156e-09, 3.5773972814003284472e-10, -7.9574892444773970377e-11,
    1.8559491149549265550e-11, -4.5145978833745191751e-12, 1.1403405882073442347e-12,
    -2.9800969231481783548e-13, 8.0328907750683743694e-14, -2.2275133267462963604e-14,
    6.3400764762766459661e-15, -1.8485933779209071694e-15, 5.5120559994043333649e-16,
    -1.6782311257549006383e-16, 5.2103917776435541125e-17, -1.6475805939842632815e-17,
    5.3004337711773357710e-18, -1.7331712005821000278e-18, 5.7551092028827293794e-19,
    -1.9390956053183554660e-19,
};

double clenshaw(double t, const double* c, std::size_t n) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = n - 1; k > 0; --k) {
        const double b0 = 2.0 * t * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + 0.5 * c[0];
}

// K0 for 0 < x < 2 via the ascending series
//   K0(x) = -(ln(x/2) + gamma) I0(x) + sum_{k>=1} H_k (x^2/4)^k / (k!)^2.
double k0_small(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, i0 = 1.0, sum = 0.0, harmonic = 0.0;
    for (int k = 1; k < 32; ++k) {
        term *= q / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        i0 += term;
        sum += term * harmonic;
        if (term < 1e-19) break;
    }
    return -(std::log(0.5 * x) + kEulerGamma) * i0 + sum;
}

}  // namespace

double bessel_k0(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::invalid_argument("bessel_k0: x must be positive");
    if (x < 2.0) return k0_small(x);
    const std::size_t n = sizeof(kK0ChebCoeffs) / sizeof(kK0ChebCoeffs[0]);
    const double scaled = clenshaw(4.0 / x - 1.0, kK0ChebCoeffs, n);
    if (x > 700.0) return scaled * std::exp(-x - 0.5 * std::log(x));  // avoid exp underflow ordering issues
    return scaled * std::exp(-x) / std::sqrt(x);
}

double analytic_half_space(double r, double kappa) {
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::invalid_argument("analytic_half_space: r must be non-negative");
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("analytic_half_space: kappa must be non-negative");
    return std::exp(-kappa * r);
}

double analytic_slab(double r, double half_width, double kappa) {
    if (!(half_width > 0.0)) throw std::invalid_argument("analytic_slab: half-width must be positive");
    if (!(std::abs(r) <= half_width))
        throw std::invalid_argument("analytic_slab: |r| must not exceed the half-width");
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("analytic_slab: kappa must be non-negative");
    // cosh(kappa r)/cosh(kappa L) in overflow-safe form.
    const double a = kappa * std::abs(r);
    const double b = kappa * half_width;
    return (std::exp(a - b) + std::exp(-a - b)) / (1.0 + std::exp(-2.0 * b));
}

double analytic_cylinder(double r, double radius, double kappa) {
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::invalid_argument("analytic_cylinder: r must be non-negative");
    if (!(radius > 0.0)) throw std::invalid_argument("analytic_cylinder: radius must be positive");
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("analytic_cylinder: kappa must be positive");
    return bessel_k0(kappa * (radius + r)) / bessel_k0(kappa * radius);
}

double analytic_sphere(double r, double radius, double kappa) {
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::invalid_argument("analytic_sphere: r must be non-negative");
    if (!(radius > 0.0)) throw std::invalid_argument("analytic_sphere: radius must be positive");
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("analytic_sphere: kappa must be non-negative");
    return radius / (radius + r) * std::exp(-kappa * r);
}

}  // namespace pbwos
