"""Regenerates the Chebyshev coefficients used by bessel_k0 for x >= 2.

The fitted function is the scaled form f(t) = K0(x) * sqrt(x) * exp(x) on the
variable t = 4/x - 1, which maps x in [2, inf) onto t in (-1, 1]. f is smooth
and bounded there (f -> sqrt(pi/2) as t -> -1), so the coefficients decay
geometrically; 28 of them reach double precision. Coefficients are computed by
Gauss-Chebyshev quadrature at 50 decimal digits with mpmath and verified with
a double-precision Clenshaw evaluation against mpmath on a dense grid.

Usage: python scripts/gen_k0_cheb.py
Mirrors the table kK0ChebCoeffs in src/analytic.cpp; rerun after changing the
fit interval or the truncation threshold.
"""

import math

import mpmath as mp

mp.mp.dps = 50

NODES = 96
TRUNCATION = mp.mpf("1e-19")


def scaled_k0(t):
    if t <= -1:
        return mp.sqrt(mp.pi / 2)
    x = 4 / (t + 1)
    return mp.besselk(0, x) * mp.sqrt(x) * mp.e**x


def chebyshev_coefficients():
    nodes = [mp.cos(mp.pi * (j + mp.mpf(1) / 2) / NODES) for j in range(NODES)]
    values = [scaled_k0(t) for t in nodes]
    coeffs = []
    for k in range(NODES):
        c = 2 * mp.fsum(
            values[j] * mp.cos(mp.pi * k * (j + mp.mpf(1) / 2) / NODES) for j in range(NODES)
        ) / NODES
        coeffs.append(c)
    keep = max(k + 1 for k, c in enumerate(coeffs) if abs(c) > TRUNCATION)
    return coeffs[:keep]


def clenshaw(t, coeffs):
    # Convention: sum' c_k T_k(t) with the k=0 term halved.
    b1 = b2 = 0.0
    for k in range(len(coeffs) - 1, 0, -1):
        b1, b2 = 2 * t * b1 - b2 + coeffs[k], b1
    return t * b1 - b2 + 0.5 * coeffs[0]


def verify(coeffs):
    floats = [float(c) for c in coeffs]
    worst = mp.mpf(0)
    for i in range(4000):
        x = 2 * 10 ** (5 * i / 4000)  # x in [2, 2e5]
        t = 4 / x - 1
        approx = clenshaw(t, floats)
        exact = mp.besselk(0, x) * mp.sqrt(x) * mp.e**x
        worst = max(worst, abs((approx - exact) / exact))
    return worst


def main():
    coeffs = chebyshev_coefficients()
    print(f"// {len(coeffs)} Chebyshev coefficients of K0(x)*sqrt(x)*exp(x) in t = 4/x - 1,")
    print("// k=0 term halved in the Clenshaw evaluation.")
    for c in coeffs:
        print(f"    {mp.nstr(c, 20, strip_zeros=False)},")
    print(f"// max relative error of the double-precision fit on [2, 2e5]: "
          f"{mp.nstr(verify(coeffs), 3)}")


if __name__ == "__main__":
    main()
