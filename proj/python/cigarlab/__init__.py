"""Verification workbench for the linearized cigar soliton geometry."""

from ._core import (
    DomainError,
    NonConvergenceError,
    P_coeff,
    Q_coeff,
    __version__,
    christoffel,
    gauss,
    lambda_r,
    multiplier_r,
    r_of_xi,
    ricci,
    run_suite_json,
    sectional,
    soliton_residual,
    solve_w0,
    suite_names,
    transform_fixture,
    w0_kernel,
    xi_of_r,
)

__all__ = [
    "DomainError",
    "NonConvergenceError",
    "P_coeff",
    "Q_coeff",
    "__version__",
    "christoffel",
    "gauss",
    "lambda_r",
    "multiplier_r",
    "r_of_xi",
    "ricci",
    "run_suite_json",
    "sectional",
    "soliton_residual",
    "solve_w0",
    "suite_names",
    "transform_fixture",
    "w0_kernel",
    "xi_of_r",
]
