"""Limits of tau_{n,k} as n grows, with k fixed or with n - k fixed.

* ``tau_star(k)``: ``lim_n tau_{n,k}``.  Here ``T_n^{(k)}`` behaves like a
  Jacobi polynomial of parameter ``nu = k - 1/2`` near ``x = 1`` and the
  limit is ``Gamma(nu + 1) (j/2)^(-nu) |J_nu(j)|`` with ``j = j_{nu+1,1}``.
* ``tau_double_star(m)``: ``lim_n n^{m/2} tau_{n,n-m}``, which equals
  ``2^{-m} |H_m(x')|`` at the rightmost critical point of the Hermite
  polynomial ``H_m``.

Each comes with its leading-order approximation in terms of the Airy
constants.  Values are kept as logarithms since ``tau_double_star`` grows
like ``(e m / 2)^{m/2}``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import special
from .extrema import tau
from .special import DEFAULT_DIGITS, AiryConstants, airy_constants

__all__ = [
    "LimitValue",
    "ConvergenceRow",
    "tau_star",
    "tau_double_star",
    "convergence_table",
    "bessel_at_next_zero",
    "MAX_K",
    "MAX_M",
]

MAX_K = 400
MAX_M = 10_000


@dataclass(frozen=True)
class LimitValue:
    kind: str
    parameter: int
    log_exact: float
    log_asymptotic: float
    constants: AiryConstants

    @property
    def exact(self) -> float:
        return math.exp(self.log_exact)

    @property
    def asymptotic(self) -> float:
        return math.exp(self.log_asymptotic)

    @property
    def ratio(self) -> float:
        """``exact / asymptotic``."""
        return math.exp(self.log_exact - self.log_asymptotic)


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    finite: float
    limit: float
    gap: float


def tau_star(k: int, digits: int = DEFAULT_DIGITS) -> LimitValue:
    """``lim_{n -> inf} tau_{n,k}`` for ``1 <= k <= 400``."""
    if int(k) != k or not 1 <= k <= MAX_K:
        raise ValueError(f"k must be an integer in 1..{MAX_K}, got {k!r}")
    k = int(k)
    nu = k - 0.5
    j = special.bessel_first_zero(nu + 1.0, digits)
    # Gamma(nu+1) (j/2)^{-nu} J_nu(j) is exactly the normalized ascending series
    s = special.bessel_j_scaled(nu, j, digits)
    c = airy_constants(digits)
    log_exact = float(special.context(digits).log(abs(s)))
    log_asym = (
        math.log(float(c.C0))
        + k * math.log(2.0 / math.e)
        - float(c.a0) * k ** (1.0 / 3.0)
        - math.log(k) / 6.0
    )
    return LimitValue("tau_star", k, log_exact, log_asym, c)


def tau_double_star(m: int, digits: int = DEFAULT_DIGITS) -> LimitValue:
    """``lim_{n -> inf} n^{m/2} tau_{n,n-m}`` for ``2 <= m <= 10**4``."""
    if int(m) != m or not 2 <= m <= MAX_M:
        raise ValueError(f"m must be an integer in 2..{MAX_M}, got {m!r}")
    m = int(m)
    h = special.hermite_rightmost_extremum(m)
    c = airy_constants(digits)
    log_exact = h.log_abs - m * math.log(2.0)
    log_asym = (
        math.log(float(c.C1))
        + 0.5 * m * math.log(math.e * m / 2.0)
        - float(c.a1) * m ** (1.0 / 3.0)
        - math.log(m) / 6.0
    )
    return LimitValue("tau_double_star", m, log_exact, log_asym, c)


def convergence_table(kind: str, parameter: int, n_list) -> list[ConvergenceRow]:
    """Finite-n values against the limit.

    ``kind="tau_star"``: rows ``(n, tau_{n,k}, tau*_k, difference)``.
    ``kind="tau_double_star"``: rows ``(n, n^{m/2} tau_{n,n-m}, tau**_m, difference)``.
    """
    rows = []
    if kind == "tau_star":
        limit = tau_star(parameter).exact
        for n in n_list:
            v = tau(n, parameter).value
            rows.append(ConvergenceRow(n, v, limit, v - limit))
    elif kind == "tau_double_star":
        limit = tau_double_star(parameter).exact
        for n in n_list:
            v = n ** (parameter / 2) * tau(n, n - parameter).value
            rows.append(ConvergenceRow(n, v, limit, v - limit))
    else:
        raise ValueError(f"unknown limit kind {kind!r}")
    return rows


def bessel_at_next_zero(nu: float, digits: int = DEFAULT_DIGITS) -> tuple[float, float]:
    """``J_nu(j_{nu+1,1})`` and its leading approximation ``-(2/nu)^{2/3} Ai'(i1)``."""
    j = special.bessel_first_zero(nu + 1.0, digits)
    value = special.bessel_j(nu, j, digits)
    approx = -((2.0 / nu) ** (2.0 / 3.0)) * float(airy_constants(digits).ai_prime_at_i1)
    return float(value), approx
