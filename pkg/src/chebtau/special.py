"""Bessel J of real order, Airy Ai/Ai', Gamma helpers and Hermite polynomials.

Bessel and Airy functions are summed from their ascending (Maclaurin) series
in extended precision.  Both series alternate or cancel heavily once the
argument is large, so each evaluation watches the largest term it added and
re-runs with more digits when that term dwarfs the result.

mpmath supplies the multiprecision floats.  Each thread gets its own
``MPContext`` per precision, so nothing here touches global mpmath state.
"""
from __future__ import annotations

import functools
import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import mpmath

__all__ = [
    "DEFAULT_DIGITS",
    "AiryConstants",
    "HermiteExtremum",
    "context",
    "bessel_j",
    "bessel_j_scaled",
    "bessel_first_zero",
    "airy_ai",
    "airy_ai_prime",
    "airy_first_negative_zero",
    "airy_constants",
    "log_gamma",
    "gamma_half_integer",
    "hermite_scaled",
    "hermite_rightmost_extremum",
]

DEFAULT_DIGITS = 30
_GUARD_DIGITS = 10
_MAX_DIGITS = 2000

_tls = threading.local()


def context(digits: int = DEFAULT_DIGITS) -> mpmath.ctx_mp.MPContext:
    """A thread-private mpmath context working with ``digits`` significant digits."""
    cache = getattr(_tls, "contexts", None)
    if cache is None:
        cache = _tls.contexts = {}
    ctx = cache.get(digits)
    if ctx is None:
        ctx = mpmath.MPContext()
        ctx.dps = digits
        cache[digits] = ctx
    return ctx


def _check_digits(digits: int) -> None:
    if digits < 15:
        raise ValueError("working precision must be at least 15 digits")


def _adaptive(series, digits: int):
    """Run ``series(ctx) -> (value, peak)`` until the cancellation loss is covered."""
    work = digits + _GUARD_DIGITS
    while True:
        ctx = context(work)
        value, peak = series(ctx)
        if value == 0:
            return context(digits).mpf(0)
        loss = max(0.0, float(ctx.log10(peak / abs(value))))
        if loss <= work - digits - 5:
            return context(digits).mpf(value)
        if work >= _MAX_DIGITS:
            raise ArithmeticError(f"series cancellation needs more than {_MAX_DIGITS} digits")
        work = min(_MAX_DIGITS, int(digits + loss + _GUARD_DIGITS + 5))


# ---------------------------------------------------------------------------
# Bessel J


def _check_bessel_args(nu, x, internal: bool = False) -> None:
    if internal:
        if not nu > -1:
            raise ValueError(f"order must exceed -1, got {nu}")
    elif not 0 <= nu <= 500:
        raise ValueError(f"order must lie in [0, 500], got {nu}")
    if not 0 <= x <= 4 * max(nu, 0) + 20:
        raise ValueError(f"argument {x} outside [0, 4*nu + 20]")


def _scaled_series(nu, x, digits):
    """``sum_j (-x^2/4)^j / (j! (nu+1)_j)``, which equals ``Gamma(nu+1) (x/2)^(-nu) J_nu(x)``."""

    def series(ctx):
        nu_ = ctx.mpf(nu)
        q = -(ctx.mpf(x) ** 2) / 4
        eps = ctx.mpf(10) ** (-(ctx.dps + 5))
        total = term = ctx.mpf(1)
        peak = ctx.mpf(1)
        j = 0
        while True:
            j += 1
            term = term * q / (j * (nu_ + j))
            total += term
            a = abs(term)
            if a > peak:
                peak = a
            if a <= eps * abs(total) and j > abs(q) / (nu_ + j):
                return total, peak

    return _adaptive(series, digits)


def bessel_j_scaled(nu, x, digits: int = DEFAULT_DIGITS):
    """``Gamma(nu + 1) (x / 2)^(-nu) J_nu(x)``; equals 1 at ``x = 0``."""
    _check_digits(digits)
    _check_bessel_args(nu, x, internal=True)
    return _scaled_series(nu, x, digits)


def _bessel_j(nu, x, digits):
    ctx = context(digits + _GUARD_DIGITS)
    s = _scaled_series(nu, x, digits + _GUARD_DIGITS)
    if x == 0:
        return context(digits).mpf(1 if nu == 0 else 0)
    nu_ = ctx.mpf(nu)
    pref = ctx.exp(nu_ * ctx.log(ctx.mpf(x) / 2) - ctx.loggamma(nu_ + 1))
    return context(digits).mpf(pref * s)


def bessel_j(nu, x, digits: int = DEFAULT_DIGITS):
    """``J_nu(x)`` for ``0 <= nu <= 500`` and ``0 <= x <= 4 nu + 20``."""
    _check_digits(digits)
    _check_bessel_args(nu, x)
    return _bessel_j(nu, x, digits)


def _bessel_j_and_slope(nu, x, digits):
    j = _bessel_j(nu, x, digits)
    dj = (_bessel_j(nu - 1, x, digits) - _bessel_j(nu + 1, x, digits)) / 2
    return j, dj


def _bracketed_newton_mp(f_and_df, lo, hi, tol, max_iter=200):
    """Bisection-safeguarded Newton for a sign change on ``[lo, hi]``."""
    f_lo, _ = f_and_df(lo)
    x = (lo + hi) / 2
    for _ in range(max_iter):
        f, df = f_and_df(x)
        if f == 0:
            return x
        if (f > 0) == (f_lo > 0):
            lo = x
        else:
            hi = x
        if df != 0 and abs(f / df) <= tol:
            return x - f / df
        cand = x - f / df if df != 0 else None
        if cand is None or not lo < cand < hi:
            cand = (lo + hi) / 2
        if hi - lo <= tol:
            return cand
        x = cand
    raise ArithmeticError(f"root refinement did not converge in [{lo}, {hi}]")


@functools.lru_cache(maxsize=2048)
def bessel_first_zero(nu, digits: int = DEFAULT_DIGITS):
    """Smallest positive zero ``j_{nu,1}`` of ``J_nu``, for ``1/2 <= nu <= 500``."""
    _check_digits(digits)
    if not 0.5 <= nu <= 500:
        raise ValueError(f"order must lie in [1/2, 500], got {nu}")
    ctx = context(digits)
    work = digits + _GUARD_DIGITS
    # J_nu > 0 on (0, nu]; march right in steps shorter than the zero spacing
    step = 0.5 * max(1.0, nu ** (1.0 / 3.0))
    lo = float(nu)
    guess = nu + 1.8557 * nu ** (1.0 / 3.0) - step
    if guess > lo and _bessel_j(nu, guess, work) > 0:
        lo = guess
    hi = lo + step
    while _bessel_j(nu, hi, work) > 0:
        lo, hi = hi, hi + step
    wctx = context(work)
    root = _bracketed_newton_mp(
        lambda t: _bessel_j_and_slope(nu, t, work),
        wctx.mpf(lo),
        wctx.mpf(hi),
        wctx.mpf(10) ** (-(digits + 2)),
    )
    return ctx.mpf(root)


# ---------------------------------------------------------------------------
# Airy


def _airy_series(x, derivative: bool, digits: int):
    """Ai or Ai' from the two Maclaurin series."""

    def series(ctx):
        z = ctx.mpf(x)
        z3 = z**3
        c1 = ctx.mpf(3) ** (-ctx.mpf(2) / 3) / ctx.gamma(ctx.mpf(2) / 3)
        c2 = ctx.mpf(3) ** (-ctx.mpf(1) / 3) / ctx.gamma(ctx.mpf(1) / 3)
        eps = ctx.mpf(10) ** (-(ctx.dps + 5))
        if derivative:
            # f'(z) = sum_{k>=1} s_k, s_1 = z^2/2, s_{k+1} = s_k z^3 / (3k (3k+2))
            # g'(z) = sum_{k>=0} r_k, r_0 = 1,     r_{k+1} = r_k z^3 / ((3k+1) (3k+3))
            a, b = z * z / 2, ctx.mpf(1)
            fa, fb = a, b
            step_a = lambda k: z3 / ((3 * k) * (3 * k + 2))  # noqa: E731
            step_b = lambda k: z3 / ((3 * k + 1) * (3 * k + 3))  # noqa: E731
            ka, kb = 1, 0
        else:
            # f(z) = sum t_k, t_0 = 1, t_{k+1} = t_k z^3 / ((3k+2)(3k+3))
            # g(z) = sum u_k, u_0 = z, u_{k+1} = u_k z^3 / ((3k+3)(3k+4))
            a, b = ctx.mpf(1), z
            fa, fb = a, b
            step_a = lambda k: z3 / ((3 * k + 2) * (3 * k + 3))  # noqa: E731
            step_b = lambda k: z3 / ((3 * k + 3) * (3 * k + 4))  # noqa: E731
            ka, kb = 0, 0
        peak = max(abs(c1 * a), abs(c2 * b))
        while True:
            a = a * step_a(ka)
            b = b * step_b(kb)
            ka += 1
            kb += 1
            fa += a
            fb += b
            t = max(abs(c1 * a), abs(c2 * b))
            if t > peak:
                peak = t
            value = c1 * fa - c2 * fb
            if t <= eps * max(abs(value), eps) and abs(z3) < (3 * ka) ** 2:
                return value, peak

    return _adaptive(series, digits)


def _check_airy_arg(x) -> None:
    if not abs(x) <= 15:
        raise ValueError(f"Airy argument must satisfy |x| <= 15, got {x}")


def airy_ai(x, digits: int = DEFAULT_DIGITS):
    _check_digits(digits)
    _check_airy_arg(x)
    return _airy_series(x, False, digits)


def airy_ai_prime(x, digits: int = DEFAULT_DIGITS):
    _check_digits(digits)
    _check_airy_arg(x)
    return _airy_series(x, True, digits)


@functools.lru_cache(maxsize=32)
def airy_first_negative_zero(digits: int = DEFAULT_DIGITS):
    """The zero of Ai closest to the origin, located on (-3, -2)."""
    _check_digits(digits)
    work = digits + _GUARD_DIGITS
    ctx = context(work)
    root = _bracketed_newton_mp(
        lambda t: (_airy_series(t, False, work), _airy_series(t, True, work)),
        ctx.mpf(-3),
        ctx.mpf(-2),
        ctx.mpf(10) ** (-(digits + 2)),
    )
    return context(digits).mpf(root)


@dataclass(frozen=True)
class AiryConstants:
    """Constants of the limiting asymptotics, derived from ``i1`` and ``Ai'(i1)``."""

    i1: mpmath.mpf
    ai_prime_at_i1: mpmath.mpf
    a0: mpmath.mpf
    C0: mpmath.mpf
    a1: mpmath.mpf
    C1: mpmath.mpf


@functools.lru_cache(maxsize=32)
def airy_constants(digits: int = DEFAULT_DIGITS) -> AiryConstants:
    ctx = context(digits)
    i1 = airy_first_negative_zero(digits)
    dai = airy_ai_prime(i1, digits)
    return AiryConstants(
        i1=i1,
        ai_prime_at_i1=dai,
        a0=-i1 / ctx.cbrt(2),
        C0=ctx.cbrt(4) * ctx.sqrt(ctx.pi / ctx.e) * abs(dai),
        a1=abs(i1),
        C1=ctx.sqrt(2 * ctx.pi / ctx.e) * dai,
    )


# ---------------------------------------------------------------------------
# Gamma


def log_gamma(x, digits: int = DEFAULT_DIGITS):
    """``log Gamma(x)`` for ``x > 0``."""
    if x <= 0 and int(x) == x:
        raise ValueError(f"Gamma has a pole at {x}")
    if not x > 0:
        raise ValueError("log_gamma needs x > 0")
    return context(digits).loggamma(x)


def gamma_half_integer(k: int) -> Fraction:
    """``Gamma(k + 1/2) / sqrt(pi) = (2k)! / (4^k k!)``, exactly."""
    if int(k) != k or k < 0:
        raise ValueError("k must be a non-negative integer")
    k = int(k)
    return Fraction(math.factorial(2 * k), 4**k * math.factorial(k))


# ---------------------------------------------------------------------------
# Hermite (physicists' normalization)

_RESCALE = 1e150


def _hermite_run(m: int, x: float):
    """Recurrence ``H_{j+1} = 2x H_j - 2j H_{j-1}`` with rescaling.

    Returns ``(h_{m-1}, h_m, log_scale, sign_changes)`` where the true values are
    ``h * exp(log_scale)`` and ``sign_changes`` counts zeros of ``H_m`` right of ``x``.
    """
    if m == 0:
        return 0.0, 1.0, 0.0, 0
    prev, cur = 1.0, 2.0 * x
    log_scale = 0.0
    sign = 1.0
    changes = 0
    s = sign if cur == 0.0 else math.copysign(1.0, cur)
    changes += s != sign
    sign = s
    for j in range(1, m):
        prev, cur = cur, 2.0 * x * cur - 2.0 * j * prev
        s = sign if cur == 0.0 else math.copysign(1.0, cur)
        changes += s != sign
        sign = s
        a = abs(cur)
        if a > _RESCALE:
            prev /= a
            cur /= a
            log_scale += math.log(a)
    return prev, cur, log_scale, changes


def hermite_scaled(m: int, x: float) -> tuple[float, float]:
    """``H_m(x)`` as ``(sign, log|H_m(x)|)``; sign is 0 at a zero."""
    if m < 0:
        raise ValueError("degree must be non-negative")
    _, h, log_scale, _ = _hermite_run(m, float(x))
    if h == 0.0:
        return 0.0, -math.inf
    return math.copysign(1.0, h), math.log(abs(h)) + log_scale


@dataclass(frozen=True)
class HermiteExtremum:
    m: int
    x: float
    sign: float
    log_abs: float

    @property
    def value(self) -> float:
        return self.sign * math.exp(self.log_abs)


def _hermite_largest_zero(d: int, i1: float) -> float:
    if d == 1:
        return 0.0
    # every zero of H_d lies below sqrt(2d + 1)
    hi = math.sqrt(2 * d + 1)
    est = math.sqrt(2 * d + 1) - 2.0**-0.5 * d ** (-1.0 / 6.0) * abs(i1)
    width = d ** (-1.0 / 6.0)
    lo = max(0.0, est - width)
    while _hermite_run(d, lo)[3] < 1:
        lo = max(0.0, lo - width)
    cnt_lo = _hermite_run(d, lo)[3]
    for _ in range(200):
        if cnt_lo == 1 and hi - lo <= 1e-3:
            break
        mid = 0.5 * (lo + hi)
        c = _hermite_run(d, mid)[3]
        if c >= 1:
            lo, cnt_lo = mid, c
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    for _ in range(100):
        h_prev, h, _, _ = _hermite_run(d, x)
        # H_d' = 2 d H_{d-1}
        if h == 0.0:
            return x
        if h > 0:
            hi = x
        else:
            lo = x
        tol = 1e-15 * max(1.0, abs(x))
        step = h / (2.0 * d * h_prev) if h_prev != 0.0 else math.inf
        if abs(step) <= tol:
            return x - step
        cand = x - step
        if not lo < cand < hi:
            cand = 0.5 * (lo + hi)
        if hi - lo <= tol:
            return cand
        x = cand
    raise ArithmeticError(f"Hermite zero refinement failed in [{lo}, {hi}]")


def hermite_rightmost_extremum(m: int) -> HermiteExtremum:
    """Rightmost critical point ``x'_m`` of ``H_m`` (largest zero of ``H_{m-1}``) and ``H_m`` there."""
    if int(m) != m or m < 2:
        raise ValueError("need an integer m >= 2")
    m = int(m)
    i1 = float(airy_first_negative_zero())
    x = _hermite_largest_zero(m - 1, i1)
    sign, log_abs = hermite_scaled(m, x)
    return HermiteExtremum(m=m, x=x, sign=sign, log_abs=log_abs)
