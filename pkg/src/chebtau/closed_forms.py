"""Explicit values of tau_{k+m,k} for gaps m = n - k between 2 and 6.

For these gaps ``T_{k+m}^{(k)}`` is an even or odd polynomial of degree m, so
its rightmost critical point solves a quadratic in ``x^2`` and the critical
value can be written down.  For m = 5 and 6 the result carries a correction
factor (``alpha_k``, ``beta_k``) that increases with k toward a finite limit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "ClosedFormValue",
    "tau_closed",
    "alpha",
    "beta",
    "alpha_raw",
    "beta_raw",
    "alpha_limit",
    "beta_limit",
    "SUPPORTED_GAPS",
    "gap_limit",
]

SUPPORTED_GAPS = (2, 3, 4, 5, 6)


@dataclass(frozen=True)
class ClosedFormValue:
    k: int
    m: int
    value: float
    auxiliary: float | None = None

    @property
    def n(self) -> int:
        return self.k + self.m


def alpha(k: int) -> float:
    # (1 / (2 sqrt 2)) (y + 3)^{3/2} / (y + 2),  y = sqrt(6 - t),  t = 3 / (k + 3)
    y = math.sqrt(6.0 - 3.0 / (k + 3))
    return (y + 3.0) ** 1.5 / (y + 2.0) / (2.0 * math.sqrt(2.0))


def beta(k: int) -> float:
    # (2 / 25) (y + 5)^2 / (y + 2),  y = sqrt(10 - 3t),  t = 5 / (k + 4)
    y = math.sqrt(10.0 - 15.0 / (k + 4))
    return 2.0 * (y + 5.0) ** 2 / (y + 2.0) / 25.0


def alpha_raw(k: int) -> float:
    """``alpha_k`` in its unsimplified form; kept as a cross-check of :func:`alpha`."""
    t = 3.0 / (k + 3)
    s = math.sqrt(6.0 - t)
    return math.sqrt(3.0 + s) * (s - t) / (2.0 - t) / (2.0 * math.sqrt(2.0))


def beta_raw(k: int) -> float:
    t = 5.0 / (k + 4)
    s = math.sqrt(10.0 - 3.0 * t)
    return 2.0 * (5.0 + s) * (s - t) / (2.0 - t) / 25.0


def alpha_limit() -> float:
    return math.sqrt(3.0 * (3.0 + math.sqrt(6.0))) / 4.0


def beta_limit() -> float:
    return (2.0 + math.sqrt(10.0)) / 5.0


def tau_closed(k: int, m: int) -> ClosedFormValue:
    """Exact ``tau_{k+m,k}`` for ``k >= 1`` and ``m`` in 2..6."""
    if int(k) != k or k < 1:
        raise ValueError(f"derivative order must be a positive integer, got {k!r}")
    if m not in SUPPORTED_GAPS:
        raise ValueError(f"no closed form for gap m={m!r}; supported gaps are 2..6")
    k = int(k)
    base = 1.0 / (2 * k + 1)
    aux = None
    if m == 2:
        value = base
    elif m == 3:
        value = base * math.sqrt(2.0 / (k + 2))
    elif m == 4:
        value = base * 3.0 / (k + 3)
    elif m == 5:
        aux = alpha(k)
        value = base * (4.0 / (k + 4)) ** 1.5 * aux
    else:
        aux = beta(k)
        value = base * (5.0 / (k + 5)) ** 2 * aux
    return ClosedFormValue(k=k, m=m, value=value, auxiliary=aux)


def gap_limit(m: int) -> float:
    """``lim_{k -> inf} k^{m/2} tau_{k+m,k}`` read off the closed forms."""
    limits = {
        2: 0.5,
        3: math.sqrt(2.0) / 2.0,
        4: 1.5,
        5: 4.0 * alpha_limit(),
        6: 12.5 * beta_limit(),
    }
    if m not in limits:
        raise ValueError(f"no closed form for gap m={m!r}; supported gaps are 2..6")
    return limits[m]
