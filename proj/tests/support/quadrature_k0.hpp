#pragma once

#include <cmath>
#include <stdexcept>

namespace pbwos::test {

namespace detail {

/// Composite Simpson rule for the integrand exp(-x*cosh(t)) on [0, T].
inline double simpson_k0(double x, double upper, int n) {
    const double h = upper / n;
    double sum = std::exp(-x) + std::exp(-x * std::cosh(upper));
    for (int i = 1; i < n; ++i)
        sum += (i % 2 == 1 ? 4.0 : 2.0) * std::exp(-x * std::cosh(i * h));
    return sum * h / 3.0;
}

}  // namespace detail

/// Independent reference for the modified Bessel function K0 via its integral
/// representation K0(x) = integral_0^inf exp(-x*cosh(t)) dt. The tail past
/// cosh(t) = 750/x contributes less than exp(-750) and is dropped; the panel
/// count doubles until two successive Simpson evaluations agree to 1e-13.
inline double quadrature_k0(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("quadrature_k0: x must be positive");
    const double upper = std::acosh(750.0 / x > 1.0 ? 750.0 / x : 1.0 + 1e-12);
    double prev = detail::simpson_k0(x, upper, 64);
    for (int n = 128; n <= 1 << 20; n *= 2) {
        const double cur = detail::simpson_k0(x, upper, n);
        if (std::abs(cur - prev) <= 1e-13 * std::abs(cur)) return cur;
        prev = cur;
    }
    throw std::runtime_error("quadrature_k0: did not converge");
}

}  // namespace pbwos::test
