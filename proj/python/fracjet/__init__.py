"""Fractional jet calculus toolkit."""

from ._core import (
    DomainError,
    Error,
    NumericalError,
    __version__,
    action,
    el_residual,
    frac_deriv,
    frac_integral,
    gamma,
    gl_weights,
    ibp_residual,
    lagrangian_names,
    lift,
    log_gamma,
    mittag_leffler,
    models,
    run_cli,
    solve_fode2,
    solve_model,
    solve_multiterm,
    taylor_reconstruct,
)

__all__ = [
    "DomainError",
    "Error",
    "NumericalError",
    "__version__",
    "action",
    "el_residual",
    "frac_deriv",
    "frac_integral",
    "gamma",
    "gl_weights",
    "ibp_residual",
    "lagrangian_names",
    "lift",
    "log_gamma",
    "mittag_leffler",
    "models",
    "run_cli",
    "solve_fode2",
    "solve_model",
    "solve_multiterm",
    "taylor_reconstruct",
]
