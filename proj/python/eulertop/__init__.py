"""Exact normal forms, action series and the semi-global invariant of the Euler top.

Exact coefficients come back as lists of ``fractions.Fraction``: a series is a
list over powers of the series variable, each entry the coefficient list of a
polynomial in kappa (lowest power first).
"""

from ._core import (
    EulertopError,
    InternalError,
    action_quadrature,
    alpha_action,
    birkhoff_normal_form,
    bnf_via_reversion,
    frobenius_a,
    frobenius_b,
    params_from_inertia,
    pendulum,
    period_quadrature,
    pf_coefficients,
    radius,
    run_cli,
    sigma,
    verify,
)

__all__ = [
    "EulertopError",
    "InternalError",
    "action_quadrature",
    "alpha_action",
    "birkhoff_normal_form",
    "bnf_via_reversion",
    "frobenius_a",
    "frobenius_b",
    "params_from_inertia",
    "pendulum",
    "period_quadrature",
    "pf_coefficients",
    "radius",
    "run_cli",
    "sigma",
    "verify",
]

__version__ = "0.1.0"
