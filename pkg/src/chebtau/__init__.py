"""Critical values of derivatives of Chebyshev polynomials.

``tau(n, k)`` is the ratio of the largest interior critical value of
``T_n^{(k)}`` to ``T_n^{(k)}(1)``.  The package computes it by root finding,
compares it with closed forms and upper bounds, and evaluates its limits as
``n`` grows through Bessel, Airy and Hermite functions.
"""
from .asymptotics import LimitValue, bessel_at_next_zero, convergence_table, tau_double_star, tau_star
from .bounds import (
    BoundReport,
    ab_factors,
    bound_report,
    delta,
    duffin_schaeffer_check,
    gamma_k_refinement,
    majorant,
    regime_bound_fixed_k,
    regime_bound_fixed_k_simplified,
    regime_bound_fixed_m,
    regime_bound_ratio,
    rho,
    thm12_bounds,
)
from .closed_forms import ClosedFormValue, alpha, beta, gap_limit, tau_closed
from .extrema import (
    ExtremaProfile,
    MonotonicityReport,
    RootFindingError,
    TauValue,
    derivative_zeros,
    largest_zero,
    monotonicity_report,
    relative_extrema,
    rightmost_extremum,
    szasz_identity_residual,
    tau,
    ultraspherical_zeros,
)
from .polycore import (
    DerivativeSpec,
    cheb_coefficients,
    cheb_deriv_at_one,
    cheb_deriv_eval,
    cheb_eval,
    normalized_ultraspherical_deriv,
    normalized_ultraspherical_eval,
)

__version__ = "0.1.0"

__all__ = [
    "LimitValue",
    "bessel_at_next_zero",
    "convergence_table",
    "tau_double_star",
    "tau_star",
    "BoundReport",
    "ab_factors",
    "bound_report",
    "delta",
    "duffin_schaeffer_check",
    "gamma_k_refinement",
    "majorant",
    "regime_bound_fixed_k",
    "regime_bound_fixed_k_simplified",
    "regime_bound_fixed_m",
    "regime_bound_ratio",
    "rho",
    "thm12_bounds",
    "ClosedFormValue",
    "alpha",
    "beta",
    "gap_limit",
    "tau_closed",
    "ExtremaProfile",
    "MonotonicityReport",
    "RootFindingError",
    "TauValue",
    "derivative_zeros",
    "largest_zero",
    "monotonicity_report",
    "relative_extrema",
    "rightmost_extremum",
    "szasz_identity_residual",
    "tau",
    "ultraspherical_zeros",
    "DerivativeSpec",
    "cheb_coefficients",
    "cheb_deriv_at_one",
    "cheb_deriv_eval",
    "cheb_eval",
    "normalized_ultraspherical_deriv",
    "normalized_ultraspherical_eval",
]
