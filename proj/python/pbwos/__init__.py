"""Grid-free Monte Carlo solver for the linearized Poisson-Boltzmann equation.

The heavy lifting lives in the compiled extension ``pbwos._core``; this
package re-exports its public names.
"""

from ._core import (
    BenchReport,
    CylinderExterior,
    DeltaBiasReport,
    Domain,
    Estimate,
    HalfSpace,
    Method,
    MethodBench,
    RngStream,
    Slab,
    SolverConfig,
    SphereExterior,
    Vec3,
    WalkOutcome,
    WalkTermination,
    analytic_cylinder,
    analytic_half_space,
    analytic_slab,
    analytic_sphere,
    bessel_k0,
    cli_main,
    delta_bias_check,
    derive_seed,
    estimate,
    laboriousness,
    make_domain,
    run_walk,
    run_walk_new,
    run_walk_old,
    sample_unit_sphere,
    survival_probability,
    validate_config,
)

__all__ = [
    "BenchReport",
    "CylinderExterior",
    "DeltaBiasReport",
    "Domain",
    "Estimate",
    "HalfSpace",
    "Method",
    "MethodBench",
    "RngStream",
    "Slab",
    "SolverConfig",
    "SphereExterior",
    "Vec3",
    "WalkOutcome",
    "WalkTermination",
    "analytic_cylinder",
    "analytic_half_space",
    "analytic_slab",
    "analytic_sphere",
    "bessel_k0",
    "cli_main",
    "delta_bias_check",
    "derive_seed",
    "estimate",
    "laboriousness",
    "make_domain",
    "run_walk",
    "run_walk_new",
    "run_walk_old",
    "sample_unit_sphere",
    "survival_probability",
    "validate_config",
]

__version__ = "0.1.0"
