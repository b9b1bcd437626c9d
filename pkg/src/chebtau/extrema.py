"""Zeros and local extrema of Chebyshev derivatives and normalized ultraspherical polynomials.

Two root engines live here:

* a Rolle chain for ``T_n^{(k)}``: the zeros of ``T_n`` are known in closed
  form and each zero of ``T_n^{(j+1)}`` sits between two consecutive zeros of
  ``T_n^{(j)}``;
* a Sturm count for ``p_d^{(lam)}`` of any parameter: along the recurrence
  ``p_0(x), ..., p_d(x)`` the number of sign changes equals the number of zeros
  of ``p_d`` to the right of ``x``, which lets bisection target the i-th zero
  directly (in particular the largest one without computing the rest).

Both finish with a bracketed Newton iteration.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .polycore import DerivativeSpec, _normalized_pair

__all__ = [
    "TauValue",
    "ExtremaProfile",
    "MonotonicityReport",
    "ultraspherical_zeros",
    "largest_zero",
    "derivative_zeros",
    "rightmost_extremum",
    "tau",
    "relative_extrema",
    "szasz_identity_residual",
    "monotonicity_report",
]

BISECT_WIDTH = 1e-3
NEWTON_TOL = 1e-15
MAX_ITER = 200


class RootFindingError(RuntimeError):
    pass


@dataclass(frozen=True)
class TauValue:
    n: int
    k: int
    value: float
    omega: float
    method: str = "root-finding"
    signed_value: float | None = None

    def __float__(self):
        return self.value


@dataclass(frozen=True)
class ExtremaProfile:
    """Local extrema of ``p_m^{(lam)}`` ordered right to left, with ``-1`` appended."""

    m: int
    lam: float
    abscissae: tuple[float, ...]
    values: tuple[float, ...]

    @property
    def rightmost(self) -> float:
        return self.abscissae[0]

    @property
    def mu1(self) -> float:
        return self.values[0]


@dataclass(frozen=True)
class MonotonicityReport:
    lam: float
    i: int
    rows: tuple[tuple[int, float], ...]
    expected: str
    violations: tuple[tuple[int, int], ...]

    @property
    def holds(self) -> bool:
        return not self.violations


# ---------------------------------------------------------------------------
# evaluation helpers


def _value_and_slope(d: int, lam: float, x):
    """``p_d^{(lam)}(x)`` and its derivative."""
    p = _normalized_pair(d, lam, x)[1]
    if d == 0:
        return p, 0.0 * x
    scale = d * (d + 2.0 * lam) / (2.0 * lam + 1.0)
    return p, scale * _normalized_pair(d - 1, lam + 1.0, x)[1]


def _sturm_count(d: int, lam: float, x: np.ndarray) -> np.ndarray:
    """Number of zeros of ``p_d^{(lam)}`` strictly to the right of each ``x``.

    A vanishing term inherits the sign of its predecessor.
    """
    x = np.asarray(x, dtype=float)
    count = np.zeros(x.shape, dtype=int)
    if d == 0:
        return count
    prev = np.ones_like(x)
    cur = x.copy()
    sign = np.ones(x.shape)
    s = np.where(cur == 0.0, sign, np.sign(cur))
    count += s != sign
    sign = s
    for j in range(2, d + 1):
        prev, cur = cur, (2.0 * (j + lam - 1.0) * x * cur - (j - 1.0) * prev) / (j + 2.0 * lam - 1.0)
        s = np.where(cur == 0.0, sign, np.sign(cur))
        count += s != sign
        sign = s
    return count


def _bracketed_newton(f_and_df, lo, hi, sign_lo):
    """Safeguarded Newton on brackets ``[lo, hi]`` where ``sign(f(lo)) == sign_lo``."""
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    sign_lo = np.asarray(sign_lo, dtype=float)
    x = 0.5 * (lo + hi)
    active = np.ones(x.shape, dtype=bool)
    for _ in range(MAX_ITER):
        if not active.any():
            return x
        xa = x[active]
        f, df = f_and_df(xa)
        la, ha, sa = lo[active], hi[active], sign_lo[active]
        on_lo_side = np.sign(f) == sa
        la = np.where(on_lo_side, xa, la)
        ha = np.where(on_lo_side | (f == 0.0), ha, xa)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(df != 0.0, f / df, np.nan)
        newton = xa - step
        settled = np.abs(step) <= NEWTON_TOL
        outside = ~((newton > la) & (newton < ha)) | np.isnan(newton)
        cand = np.where(outside & ~settled, 0.5 * (la + ha), newton)
        cand = np.where(f == 0.0, xa, cand)
        done = settled | (f == 0.0) | (ha - la <= NEWTON_TOL)
        lo[active], hi[active], x[active] = la, ha, cand
        idx = np.flatnonzero(active)
        active[idx[done]] = False
    bad = np.flatnonzero(active)
    raise RootFindingError(
        f"Newton iteration did not settle in bracket [{lo[bad[0]]!r}, {hi[bad[0]]!r}]"
    )


# ---------------------------------------------------------------------------
# Sturm engine (any parameter)


def _zeros_by_count(d: int, lam: float, index: np.ndarray) -> np.ndarray:
    """The ``index``-th largest zeros (1-based) of ``p_d^{(lam)}``."""
    index = np.asarray(index, dtype=int)
    lo = np.full(index.shape, -1.0)
    hi = np.full(index.shape, 1.0)
    cnt_lo = np.full(index.shape, d)
    cnt_hi = np.zeros(index.shape, dtype=int)
    for _ in range(MAX_ITER):
        isolated = (cnt_lo == index) & (cnt_hi == index - 1) & (hi - lo <= BISECT_WIDTH)
        if isolated.all():
            break
        mid = 0.5 * (lo + hi)
        c = _sturm_count(d, lam, mid)
        go_right = c >= index
        lo = np.where(go_right & ~isolated, mid, lo)
        cnt_lo = np.where(go_right & ~isolated, c, cnt_lo)
        hi = np.where(~go_right & ~isolated, mid, hi)
        cnt_hi = np.where(~go_right & ~isolated, c, cnt_hi)
        if np.all(hi - lo <= 4e-16 * np.maximum(1.0, np.abs(lo))):
            # clustered beyond double resolution; bisection has done its job
            return 0.5 * (lo + hi)
    sign_lo = np.where(index % 2 == 0, 1.0, -1.0)
    return _bracketed_newton(lambda t: _value_and_slope(d, lam, t), lo, hi, sign_lo)


def ultraspherical_zeros(d: int, lam: float) -> np.ndarray:
    """All ``d`` zeros of ``p_d^{(lam)}`` in decreasing order."""
    if not lam > -0.5:
        raise ValueError(f"parameter must exceed -1/2, got {lam}")
    if d <= 0:
        return np.empty(0)
    zeros = _zeros_by_count(d, float(lam), np.arange(1, d + 1))
    if d % 2 == 1:
        zeros[d // 2] = 0.0
    return zeros


def largest_zero(d: int, lam: float) -> float:
    """Largest zero of ``p_d^{(lam)}``, without locating the others."""
    if d < 1:
        raise ValueError("need degree >= 1")
    if d == 1:
        return 0.0
    return float(_zeros_by_count(d, float(lam), np.array([1]))[0])


# ---------------------------------------------------------------------------
# Rolle chain for Chebyshev derivatives


def derivative_zeros(n: int, k: int) -> np.ndarray:
    """All ``n - k`` zeros of ``T_n^{(k)}``, decreasing.

    Level 0 uses ``cos((2i - 1) pi / (2n))``; level ``j + 1`` is searched
    between consecutive zeros of level ``j``.
    """
    n, k = DerivativeSpec(n, k)
    if k > n - 1:
        raise ValueError(f"T_{n}^({k}) has no zeros")
    i = np.arange(1, n + 1)
    zeros = np.cos((2 * i - 1) * np.pi / (2 * n))
    for j in range(k):
        d, lam = n - j - 1, float(j + 1)
        lo, hi = zeros[1:].copy(), zeros[:-1].copy()
        if d == 1:
            zeros = np.array([0.0])
            continue
        # T_n^{(j+1)} is positive beyond its largest zero; the i-th bracket
        # from the right therefore starts with sign (-1)^i at its left end.
        sign_lo = np.where(np.arange(1, d + 1) % 2 == 0, 1.0, -1.0)
        for _ in range(MAX_ITER):
            wide = hi - lo > BISECT_WIDTH
            if not wide.any():
                break
            mid = 0.5 * (lo + hi)
            f = _normalized_pair(d, lam, mid)[1]
            left = (np.sign(f) == sign_lo) & wide
            right = (np.sign(f) != sign_lo) & wide
            lo = np.where(left, mid, lo)
            hi = np.where(right, mid, hi)
        zeros = _bracketed_newton(lambda t: _value_and_slope(d, lam, t), lo, hi, sign_lo)
        if d % 2 == 1:
            zeros[d // 2] = 0.0
    return zeros


def rightmost_extremum(n: int, k: int) -> float:
    """Largest zero ``omega`` of ``T_n^{(k+1)}``, i.e. of ``p_{n-k-1}^{(k+1)}``."""
    n, k = DerivativeSpec(n, k)
    if n < k + 2:
        raise ValueError(f"need n >= k + 2, got n={n}, k={k}")
    return largest_zero(n - k - 1, float(k + 1))


def tau(n: int, k: int) -> TauValue:
    """Ratio of the largest interior critical value of ``T_n^{(k)}`` to ``T_n^{(k)}(1)``."""
    n, k = DerivativeSpec(n, k)
    if k < 1 or n < k + 2:
        raise ValueError(f"tau needs k >= 1 and n >= k + 2, got n={n}, k={k}")
    omega = rightmost_extremum(n, k)
    p = float(_normalized_pair(n - k, float(k), omega)[1])
    return TauValue(n=n, k=k, value=abs(p), omega=omega, signed_value=p)


def relative_extrema(m: int, lam: float) -> ExtremaProfile:
    """Abscissae ``y_i`` and values ``mu_i = |p_m(y_i)|`` of the local extrema of ``p_m^{(lam)}``."""
    if m < 1:
        raise ValueError("need degree >= 1")
    if not lam > -0.5:
        raise ValueError(f"parameter must exceed -1/2, got {lam}")
    ys = ultraspherical_zeros(m - 1, float(lam) + 1.0)
    ys = np.append(ys, -1.0)
    mus = np.abs(_normalized_pair(m, float(lam), ys)[1])
    return ExtremaProfile(m=m, lam=float(lam), abscissae=tuple(map(float, ys)), values=tuple(map(float, mus)))


def szasz_identity_residual(n: int, lam: float, x: float) -> float:
    """Difference of the two sides of the interpolating identity linking ``p_n`` and ``p_{n+1}``:

        p_n^2 + (1 - x^2) p_n'^2 / (n + 2 lam)^2  =  p_{n+1}^2 + (1 - x^2) p_{n+1}'^2 / (n + 1)^2
    """
    if not lam > -0.5:
        raise ValueError(f"parameter must exceed -1/2, got {lam}")
    if n + 2 * lam == 0:
        raise ValueError("identity undefined for n + 2*lam = 0")
    if abs(x) > 1:
        raise ValueError("x outside [-1, 1]")
    lam = float(lam)
    p0, d0 = _value_and_slope(n, lam, float(x))
    p1, d1 = _value_and_slope(n + 1, lam, float(x))
    w = 1.0 - x * x
    return float((p0 * p0 + w * d0 * d0 / (n + 2 * lam) ** 2) - (p1 * p1 + w * d1 * d1 / (n + 1) ** 2))


def monotonicity_report(lam: float, i: int, n_values: Iterable[int], atol: float = 1e-12) -> MonotonicityReport:
    """Track ``mu_{i,n}^{(lam)}`` over degrees ``n`` and flag breaks of the expected trend.

    Expected: decreasing for ``lam > 0``, increasing for ``-1/2 < lam < 0``,
    constant for ``lam = 0``.
    """
    ns: Sequence[int] = sorted(n_values)
    if not ns or ns[0] < i:
        raise ValueError("every degree must be at least the extremum index")
    rows = tuple((n, relative_extrema(n, lam).values[i - 1]) for n in ns)
    expected = "decreasing" if lam > 0 else "increasing" if lam < 0 else "constant"
    violations = []
    for (n0, a), (n1, b) in zip(rows, rows[1:]):
        ok = {"decreasing": b < a, "increasing": b > a, "constant": math.isclose(a, b, rel_tol=0, abs_tol=atol)}[expected]
        if not ok:
            violations.append((n0, n1))
    return MonotonicityReport(lam=float(lam), i=i, rows=rows, expected=expected, violations=tuple(violations))
