"""Upper bounds for tau_{n,k} built on the Duffin-Schaeffer majorant.

The majorant ``D_{n,k}(x) = sqrt(T_n^{(k)}(x)^2 + S_n^{(k)}(x)^2)`` with
``S_n = sqrt(1 - x^2) T_n' / n`` dominates ``|T_n^{(k)}|``, increases on
[0, 1), and has the explicit expansion

    D_{n,k}(x)^2 / n^2 = sum_{m<k} b_{m,n} / (1 - x^2)^(k + m).

Evaluating it at ``x_k = sqrt(1 - k^2/n^2)``, which lies to the right of the
last critical point, gives ``tau_{n,k} < delta_{n,k}``; everything else here
is a chain of progressively simpler majorants of ``delta_{n,k}^2``.

Factorial-sized quantities are carried as logarithms.  Where possible they
are summed as logs of O(1) ratios, which keeps the absolute error of the
logarithm near machine epsilon.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import chebyshev as npcheb

from .polycore import DerivativeSpec, double_factorial, log_cheb_deriv_at_one

__all__ = [
    "C1",
    "C2",
    "C3",
    "GAMMA_LIMIT",
    "MajorantEvaluation",
    "ABFactors",
    "BoundReport",
    "majorant_coefficient",
    "majorant",
    "duffin_schaeffer_check",
    "log_delta",
    "delta",
    "ab_factors",
    "thm12_bounds",
    "log_thm12_bounds",
    "regime_bound_fixed_k",
    "regime_bound_fixed_k_simplified",
    "regime_bound_fixed_m",
    "rho",
    "regime_bound_ratio",
    "gamma_k_refinement",
    "refined_first_bound",
    "bound_report",
]

C1 = math.sqrt(math.e**2 / (2.0 * math.sqrt(math.pi)))
C2 = math.sqrt(2.0) * C1
C3 = 2.0**0.25 * C1
GAMMA_LIMIT = math.exp(-2.0) / math.sqrt(2.0)


def _logsumexp(logs) -> float:
    logs = list(logs)
    top = max(logs)
    return top + math.log(math.fsum(math.exp(v - top) for v in logs))


def majorant_coefficient(m: int, k: int) -> int:
    """``c_{m,k}``: 1 for m = 0, else ``C(k - 1 + m, 2m) * ((2m - 1)!!)^2``."""
    if m == 0:
        return 1
    return math.comb(k - 1 + m, 2 * m) * double_factorial(2 * m - 1) ** 2


def _log_b(m: int, n: int, k: int) -> float:
    # b_{m,n} = c_{m,k} (n^2 - (m+1)^2) ... (n^2 - (k-1)^2)
    return math.log(majorant_coefficient(m, k)) + math.fsum(
        math.log(n * n - j * j) for j in range(m + 1, k)
    )


def _log_majorant_terms(n: int, k: int, one_minus_x2: float) -> list[float]:
    """Logs of ``b_{m,n} / (1 - x^2)^(k+m)``, m = 0..k-1."""
    log_w = math.log(one_minus_x2)
    return [_log_b(m, n, k) - (k + m) * log_w for m in range(k)]


@dataclass(frozen=True)
class MajorantEvaluation:
    n: int
    k: int
    x: float
    log_value: float
    log_terms: tuple[float, ...] = field(repr=False)

    @property
    def value(self) -> float:
        return math.exp(self.log_value)

    @property
    def terms(self) -> tuple[float, ...]:
        return tuple(math.exp(t) for t in self.log_terms)


def majorant(n: int, k: int, x: float) -> MajorantEvaluation:
    """``D_{n,k}(x)`` from its explicit expansion; ``|x| < 1``, ``1 <= k <= n``."""
    n, k = DerivativeSpec(n, k)
    if k < 1:
        raise ValueError("majorant needs k >= 1")
    if not abs(x) < 1.0:
        raise ValueError(f"majorant defined on (-1, 1), got x={x!r}")
    x = float(x)
    terms = _log_majorant_terms(n, k, (1.0 - x) * (1.0 + x))
    log_value = math.log(n) + 0.5 * _logsumexp(terms)
    return MajorantEvaluation(n=n, k=k, x=x, log_value=log_value, log_terms=tuple(terms))


def duffin_schaeffer_check(p_cheb_coeffs, n: int, k: int, x: float, rtol: float = 1e-12) -> bool:
    """Whether ``|p^{(k)}(x)| <= D_{n,k}(x)`` for ``p = sum c_j T_j``.

    ``sum |c_j| <= 1`` is required: it certifies ``max |p| <= 1`` on [-1, 1].
    """
    c = np.asarray(p_cheb_coeffs, dtype=float)
    if c.ndim != 1 or c.size == 0:
        raise ValueError("coefficients must be a non-empty 1-d sequence")
    if np.sum(np.abs(c)) > 1.0 + 1e-15:
        raise ValueError("sum of |coefficients| exceeds 1; sup-norm bound not certified")
    if c.size - 1 > n:
        raise ValueError(f"polynomial degree {c.size - 1} exceeds n={n}")
    lhs = abs(float(npcheb.chebval(x, npcheb.chebder(c, k)))) if c.size > k else 0.0
    return lhs <= majorant(n, k, x).value * (1.0 + rtol)


def log_delta(n: int, k: int) -> float:
    """``log delta_{n,k}`` with ``delta = D_{n,k}(x_k) / T_n^{(k)}(1)``; defined for ``n >= k``."""
    n, k = DerivativeSpec(n, k)
    if k < 1:
        raise ValueError("need k >= 1")
    terms = _log_majorant_terms(n, k, (k / n) ** 2)
    return math.log(n) + 0.5 * _logsumexp(terms) - log_cheb_deriv_at_one(n, k)


def delta(n: int, k: int) -> float:
    return math.exp(log_delta(n, k))


@dataclass(frozen=True)
class ABFactors:
    n: int
    k: int
    log_a: float
    log_b: float
    log_a_bound: float

    @property
    def a(self) -> float:
        return math.exp(self.log_a)

    @property
    def b(self) -> float:
        return math.exp(self.log_b)

    @property
    def a_bound(self) -> float:
        """``A_{k,k} = (2k)! / (2 k^{2k})``, the largest value of ``A_{n,k}`` over ``n >= k``."""
        return math.exp(self.log_a_bound)


def ab_factors(n: int, k: int) -> ABFactors:
    """The factorization ``delta_{n,k}^2 = A_{n,k} B_{n,k}``.

    A = ((2k-1)!!^2 / k^{2k}) sum_m (c_{m,k} / k^{2m}) n^{2m} / ((n^2 - 1)...(n^2 - m^2))
    B = ((n + k) / n) n^{2k} (n - k)! / (n + k)!
    """
    n, k = DerivativeSpec(n, k)
    if k < 1:
        raise ValueError("need k >= 1")
    log_k = math.log(k)
    inner = [
        math.log(majorant_coefficient(m, k))
        - 2 * m * log_k
        + math.fsum(math.log(n * n / (n * n - j * j)) for j in range(1, m + 1))
        for m in range(k)
    ]
    log_a = 2.0 * math.log(double_factorial(2 * k - 1)) - 2 * k * log_k + _logsumexp(inner)
    log_b = math.log((n + k) / n) + math.fsum(math.log(n / i) for i in range(n - k + 1, n + k + 1))
    log_a_bound = math.log(math.factorial(2 * k)) - math.log(2.0) - 2 * k * log_k
    return ABFactors(n=n, k=k, log_a=log_a, log_b=log_b, log_a_bound=log_a_bound)


def _check_tau_domain(n: int, k: int) -> None:
    if k < 1 or n < k + 2:
        raise ValueError(f"need k >= 1 and n >= k + 2, got n={n}, k={k}")


def log_thm12_bounds(n: int, k: int) -> tuple[float, float]:
    """Logs of the two uniform bounds on ``tau_{n,k}^2`` (binomial form, Stirling form)."""
    _check_tau_domain(n, k)
    first = (
        math.log(0.5)
        + math.log1p(k / n)
        + 2 * k * math.log(n / k)
        - math.log(math.comb(n + k, n - k))
    )
    second = (
        2.0 * math.log(C1)
        + 0.5 * math.log(k)
        + 0.5 * math.log1p(-((k / n) ** 2))
        + 2 * k * math.log(2 * n)
        + (n - k) * math.log(n - k)
        - (n + k) * math.log(n + k)
    )
    return first, second


def thm12_bounds(n: int, k: int) -> tuple[float, float]:
    first, second = log_thm12_bounds(n, k)
    return math.exp(first), math.exp(second)


def regime_bound_fixed_k(n: int, k: int) -> float:
    """``c1 (2/e)^k k^{1/4} / (1 - k^2/n^2)^{k/4}``, suited to fixed k and growing n."""
    _check_tau_domain(n, k)
    log_v = math.log(C1) + k * math.log(2.0 / math.e) + 0.25 * math.log(k) - 0.25 * k * math.log1p(-((k / n) ** 2))
    return math.exp(log_v)


def regime_bound_fixed_k_simplified(k: int) -> float:
    """``c2 (2/e)^k k^{1/4}``; valid for ``n >= k^{3/2}``."""
    return C2 * (2.0 / math.e) ** k * k**0.25


def regime_bound_fixed_m(n: int, m: int) -> float:
    """Bound on ``tau_{n,n-m}``: ``c3 m^{1/4} (m e / 2)^{m/2} n^{-m/2}``."""
    if m < 2 or n < m + 1:
        raise ValueError(f"need m >= 2 and n >= m + 1, got n={n}, m={m}")
    log_v = math.log(C3) + 0.25 * math.log(m) + 0.5 * m * (math.log(m * math.e / 2.0) - math.log(n))
    return math.exp(log_v)


def rho(lam: float) -> float:
    """``(2 / (1 + lam))^{1 + lam} ((1 - lam) / 2)^{1 - lam}``, below 1 on (0, 1)."""
    if not 0.0 < lam < 1.0:
        raise ValueError("lam must lie in (0, 1)")
    return math.exp((1 + lam) * math.log(2.0 / (1 + lam)) + (1 - lam) * math.log((1 - lam) / 2.0))


def regime_bound_ratio(n: int, lam: float) -> float:
    """Bound on ``tau_{n,k}`` for ``k = floor(lam n)``: ``e^{1/(2n)} c1 n^{1/4} rho_lam^{n/2}``."""
    r = rho(lam)
    k = math.floor(lam * n)
    if k < 1 or n < k + 2:
        raise ValueError(f"k = floor({lam} * {n}) = {k} is outside 1..n-2")
    c4 = math.exp(1.0 / (2 * n)) * C1
    return c4 * n**0.25 * math.exp(0.5 * n * math.log(r))


def gamma_k_refinement(k: int) -> float:
    """``gamma_k = sqrt(((k+2)/(2k+1)) (k/(k+2))^{2k})``; tends to :data:`GAMMA_LIMIT`."""
    if k < 1:
        raise ValueError("need k >= 1")
    return math.sqrt((k + 2) / (2 * k + 1) * math.exp(2 * k * math.log(k / (k + 2))))


def refined_first_bound(n: int, k: int) -> float:
    """``gamma_k^2 (2k)! / (2 k^{2k}) B_{n,k}``, a sharpened bound on ``tau_{n,k}^2``."""
    _check_tau_domain(n, k)
    ab = ab_factors(n, k)
    return math.exp(2.0 * math.log(gamma_k_refinement(k)) + ab.log_a_bound + ab.log_b)


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    tau: float | None
    delta: float
    log_a: float
    log_b: float
    thm12_first: float
    thm12_second: float
    regime_fixed_k: float
    regime_fixed_k_simplified: float | None
    regime_fixed_m: float
    regime_ratio: float | None
    x_k: float

    def violations(self, rtol: float = 1e-12) -> list[str]:
        """Names of the links of the chain that fail (expected: none)."""
        out = []
        ab = math.exp(self.log_a + self.log_b)
        if not math.isclose(self.delta**2, ab, rel_tol=rtol):
            out.append("delta^2 != A*B")
        if not ab <= self.thm12_first * (1 + rtol):
            out.append("A*B > first")
        if not self.thm12_first <= self.thm12_second * (1 + rtol):
            out.append("first > second")
        if self.tau is not None:
            if not self.tau < self.delta:
                out.append("tau >= delta")
            for name in ("regime_fixed_k", "regime_fixed_k_simplified", "regime_fixed_m", "regime_ratio"):
                bound = getattr(self, name)
                if bound is not None and not self.tau <= bound:
                    out.append(f"tau > {name}")
        return out


def bound_report(n: int, k: int, tau_value: float | None = None, compute_tau: bool = True) -> BoundReport:
    """Every bound of the chain for one ``(n, k)``."""
    _check_tau_domain(n, k)
    if tau_value is None and compute_tau:
        from .extrema import tau

        tau_value = tau(n, k).value
    ab = ab_factors(n, k)
    first, second = thm12_bounds(n, k)
    lam = k / n
    return BoundReport(
        n=n,
        k=k,
        tau=tau_value,
        delta=delta(n, k),
        log_a=ab.log_a,
        log_b=ab.log_b,
        thm12_first=first,
        thm12_second=second,
        regime_fixed_k=regime_bound_fixed_k(n, k),
        regime_fixed_k_simplified=regime_bound_fixed_k_simplified(k) if n >= k**1.5 else None,
        regime_fixed_m=regime_bound_fixed_m(n, n - k),
        regime_ratio=regime_bound_ratio(n, lam) if math.floor(lam * n) == k else None,
        x_k=math.sqrt(1.0 - lam * lam),
    )
