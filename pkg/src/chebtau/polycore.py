"""Chebyshev polynomials, their derivatives and normalized ultraspherical polynomials.

Derivatives of ``T_n`` are ultraspherical polynomials: ``T_n^{(k)}`` is a
multiple of the Gegenbauer polynomial of degree ``n - k`` and parameter ``k``.
Everything here evaluates the polynomial normalized to 1 at ``x = 1``,

    p_m(x) = P_m^{(lam)}(x) / P_m^{(lam)}(1),

which obeys the three-term recurrence

    (m + 2 lam - 1) p_m = 2 (m + lam - 1) x p_{m-1} - (m - 1) p_{m-2},

with ``p_0 = 1`` and ``p_1 = x``.  On ``[-1, 1]`` all intermediate values stay
of moderate size, so ratios such as ``T_n^{(k)}(x) / T_n^{(k)}(1)`` never
touch the (possibly enormous) endpoint value.
"""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

__all__ = [
    "DerivativeSpec",
    "cheb_eval",
    "cheb_deriv_eval",
    "cheb_deriv_at_one",
    "log_cheb_deriv_at_one",
    "normalized_ultraspherical_eval",
    "normalized_ultraspherical_deriv",
    "cheb_coefficients",
    "double_factorial",
]


class DerivativeSpec:
    """The pair ``(n, k)`` naming ``T_n^{(k)}``."""

    __slots__ = ("n", "k")

    def __init__(self, n: int, k: int):
        n, k = _as_int(n, "n"), _as_int(k, "k")
        if n < 1:
            raise ValueError(f"degree must be positive, got n={n}")
        if not 0 <= k <= n:
            raise ValueError(f"derivative order must satisfy 0 <= k <= n, got n={n}, k={k}")
        self.n = n
        self.k = k

    def __iter__(self):
        return iter((self.n, self.k))

    def __eq__(self, other):
        return isinstance(other, DerivativeSpec) and (self.n, self.k) == (other.n, other.k)

    def __hash__(self):
        return hash((self.n, self.k))

    def __repr__(self):
        return f"DerivativeSpec(n={self.n}, k={self.k})"


def _as_int(v, name: str) -> int:
    if isinstance(v, (bool, np.bool_)) or int(v) != v:
        raise ValueError(f"{name} must be an integer, got {v!r}")
    return int(v)


def _as_unit(x, closed: bool = True):
    """Return ``x`` as float or float array, raising if it leaves [-1, 1]."""
    arr = np.asarray(x, dtype=float)
    bad = np.abs(arr) > 1.0 if closed else np.abs(arr) >= 1.0
    if np.any(bad) or np.any(np.isnan(arr)):
        interval = "[-1, 1]" if closed else "(-1, 1)"
        raise ValueError(f"argument outside {interval}: {x!r}")
    return float(arr) if arr.ndim == 0 else arr


def double_factorial(n: int) -> int:
    """``n!!`` for ``n >= -1`` (with ``(-1)!! = 0!! = 1``)."""
    if n < -1:
        raise ValueError("double factorial needs n >= -1")
    return math.prod(range(n, 0, -2)) if n > 0 else 1


def _normalized_pair(m: int, lam: float, x):
    """Return ``(p_{m-1}(x), p_m(x))``; ``p_{-1}`` is reported as 0."""
    if m == 0:
        return 0.0 * x, 1.0 + 0.0 * x
    prev, cur = 1.0 + 0.0 * x, x
    two_lam = 2.0 * lam
    for j in range(2, m + 1):
        prev, cur = cur, (2.0 * (j + lam - 1.0) * x * cur - (j - 1.0) * prev) / (j + two_lam - 1.0)
    return prev, cur


def cheb_eval(n: int, x):
    """``T_n(x)`` on [-1, 1] by the three-term recurrence."""
    n = _as_int(n, "n")
    if n < 0:
        raise ValueError("degree must be non-negative")
    x = _as_unit(x)
    return _normalized_pair(n, 0.0, x)[1]


def normalized_ultraspherical_eval(m: int, lam: float, x):
    """``p_m^{(lam)}(x)``, the Gegenbauer polynomial scaled so that ``p_m(1) = 1``.

    ``lam = 0`` gives ``T_m``, the limit of the normalized family.
    """
    m = _as_int(m, "m")
    if m < 0:
        raise ValueError("degree must be non-negative")
    if not lam > -0.5:
        raise ValueError(f"parameter must exceed -1/2, got {lam}")
    x = _as_unit(x)
    return _normalized_pair(m, float(lam), x)[1]


def normalized_ultraspherical_deriv(m: int, lam: float, x):
    """Derivative of ``p_m^{(lam)}`` via ``p_m' = m (m + 2 lam) / (2 lam + 1) * p_{m-1}^{(lam + 1)}``."""
    m = _as_int(m, "m")
    if not lam > -0.5:
        raise ValueError(f"parameter must exceed -1/2, got {lam}")
    x = _as_unit(x)
    if m == 0:
        return 0.0 * x
    scale = m * (m + 2.0 * lam) / (2.0 * lam + 1.0)
    return scale * _normalized_pair(m - 1, float(lam) + 1.0, x)[1]


def cheb_deriv_at_one(n: int, k: int) -> Fraction:
    """Exact ``T_n^{(k)}(1) = n^2 (n^2 - 1^2) ... (n^2 - (k-1)^2) / (2k - 1)!!``."""
    n, k = DerivativeSpec(n, k)
    num = math.prod(n * n - j * j for j in range(k))
    return Fraction(num, double_factorial(2 * k - 1))


def log_cheb_deriv_at_one(n: int, k: int) -> float:
    """Natural log of ``T_n^{(k)}(1)``, summed factor by factor; requires ``k <= n``."""
    n, k = DerivativeSpec(n, k)
    if k == 0:
        return 0.0
    return math.fsum(math.log((n * n - j * j) / (2 * j + 1)) for j in range(k))


def cheb_deriv_eval(n: int, k: int, x):
    """``T_n^{(k)}(x)`` for ``x`` in [-1, 1].

    Computed as ``T_n^{(k)}(1) * p_{n-k}^{(k)}(x)``; the endpoint factor is
    applied in floating point, so very large ``(n, k)`` overflow to ``inf``.
    """
    n, k = DerivativeSpec(n, k)
    x = _as_unit(x)
    if k == 0:
        return _normalized_pair(n, 0.0, x)[1]
    p = _normalized_pair(n - k, float(k), x)[1]
    log_scale = log_cheb_deriv_at_one(n, k)
    if log_scale < 700.0:
        return float(cheb_deriv_at_one(n, k)) * p
    return math.exp(log_scale) * p


def cheb_coefficients(n: int) -> list[int]:
    """Exact monomial coefficients of ``T_n``; index ``i`` holds the coefficient of ``x**i``."""
    n = _as_int(n, "n")
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n == 0:
        return [1]
    coeffs = [0] * (n + 1)
    for i in range(n // 2 + 1):
        # (n/2) (-1)^i (n-i-1)! / (i! (n-2i)!) 2^(n-2i), always an integer
        c = Fraction(n * (-1) ** i * math.factorial(n - i - 1) * 2 ** (n - 2 * i),
                     2 * math.factorial(i) * math.factorial(n - 2 * i))
        coeffs[n - 2 * i] = c.numerator
    return coeffs
