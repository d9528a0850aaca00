#pragma once

namespace pbwos {

/// Closed-form reference profiles for the four benchmark geometries, each
/// normalized by the boundary potential. `r` is the distance to the plate,
/// from the slab midplane, or from the cylinder/sphere surface respectively.

/// exp(-kappa*r). Requires r >= 0.
double analytic_half_space(double r, double kappa);

/// cosh(kappa*r)/cosh(kappa*L). Requires |r| <= L.
double analytic_slab(double r, double half_width, double kappa);

/// K0(kappa*(R+r))/K0(kappa*R). Requires r >= 0, R > 0 and kappa > 0; the
/// screening-free exterior problem has no bounded nonconstant solution in 2-D.
double analytic_cylinder(double r, double radius, double kappa);

/// (R/(R+r))*exp(-kappa*r). Requires r >= 0 and R > 0.
double analytic_sphere(double r, double radius, double kappa);

/// Modified Bessel function of the second kind, order zero. Power series
/// below x = 2, Chebyshev-fitted scaled asymptotic form above. Requires x > 0.
double bessel_k0(double x);

}  // namespace pbwos
