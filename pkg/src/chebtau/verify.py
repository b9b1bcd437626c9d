"""Property sweeps over (n, k) grids, returning pass/fail with counterexamples."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bounds import bound_report, majorant
from .closed_forms import SUPPORTED_GAPS, tau_closed
from .extrema import monotonicity_report, szasz_identity_residual, tau
from .polycore import _normalized_pair, log_cheb_deriv_at_one

__all__ = [
    "SuiteResult",
    "open_grid",
    "check_monotonicity",
    "check_majorant",
    "check_szasz",
    "check_chain",
    "check_closed_forms",
    "SUITES",
]


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, msg: str) -> None:
        self.counterexamples.append(msg)


def open_grid(points: int = 201) -> np.ndarray:
    """``points`` equispaced abscissae strictly inside (-1, 1), symmetric, containing 0 for odd counts."""
    return np.linspace(-1.0, 1.0, points + 2)[1:-1]


def check_monotonicity(k: int, n_max: int) -> SuiteResult:
    """``tau_{n+1,k} < tau_{n,k}`` for ``k + 2 <= n < n_max``."""
    res = SuiteResult(f"monotonicity k={k}")
    prev = None
    for n in range(k + 2, n_max + 1):
        t = tau(n, k).value
        if prev is not None:
            res.checked += 1
            if not t < prev:
                res.fail(f"tau({n},{k})={t!r} >= tau({n - 1},{k})={prev!r}")
        prev = t
    return res


def check_majorant(n: int, k: int, points: int = 201) -> SuiteResult:
    """Domination, equality at 0 when ``n - k`` is even, and growth on [0, 1)."""
    res = SuiteResult(f"majorant n={n} k={k}")
    xs = open_grid(points)
    log_t1 = log_cheb_deriv_at_one(n, k)
    p = np.abs(_normalized_pair(n - k, float(k), xs)[1])
    d = np.array([math.exp(majorant(n, k, x).log_value - log_t1) for x in xs])
    for x, pv, dv in zip(xs, p, d):
        res.checked += 1
        if not dv >= pv * (1.0 - 1e-12):
            res.fail(f"D({x!r})/T(1)={dv!r} < |T^(k)({x!r})|/T(1)={pv!r}")
    if (n - k) % 2 == 0:
        res.checked += 1
        d0 = math.exp(majorant(n, k, 0.0).log_value - log_t1)
        p0 = abs(float(_normalized_pair(n - k, float(k), 0.0)[1]))
        if not math.isclose(d0, p0, rel_tol=1e-10):
            res.fail(f"D(0)={d0!r} differs from |T^(k)(0)|={p0!r}")
    right = d[xs >= 0.0]
    res.checked += 1
    bad = np.flatnonzero(np.diff(right) <= 0.0)
    if bad.size:
        res.fail(f"majorant not increasing near x={xs[xs >= 0.0][bad[0]]!r}")
    return res


def check_szasz(lam: float, n_max: int, indices=(1, 2, 3), points: int = 101) -> SuiteResult:
    """Trend of ``mu_{i,n}^{(lam)}`` in n, plus the interpolating identity on a grid."""
    res = SuiteResult(f"szasz lambda={lam}")
    for i in indices:
        ns = range(max(i, 2), n_max + 1)
        if len(ns) < 2:
            continue
        rep = monotonicity_report(lam, i, ns)
        res.checked += len(rep.rows) - 1
        for a, b in rep.violations:
            res.fail(f"mu_{i} not {rep.expected} from n={a} to n={b}")
    if lam != 0:
        for n in range(1, n_max + 1):
            for x in np.linspace(-1.0, 1.0, points):
                res.checked += 1
                r = szasz_identity_residual(n, lam, float(x))
                if not abs(r) <= 1e-12:
                    res.fail(f"identity residual {r!r} at n={n}, x={x!r}")
    return res


def check_chain(n_max: int, k_max: int) -> SuiteResult:
    res = SuiteResult(f"bound chain n<={n_max} k<={k_max}")
    for k in range(1, k_max + 1):
        for n in range(k + 2, n_max + 1):
            res.checked += 1
            bad = bound_report(n, k).violations()
            if bad:
                res.fail(f"(n={n}, k={k}): {', '.join(bad)}")
    return res


def check_closed_forms(k_max: int, rtol: float = 1e-11) -> SuiteResult:
    res = SuiteResult(f"closed forms k<={k_max}")
    for k in range(1, k_max + 1):
        for m in SUPPORTED_GAPS:
            res.checked += 1
            exact = tau_closed(k, m).value
            found = tau(k + m, k).value
            if not abs(exact - found) <= rtol * exact:
                res.fail(f"(k={k}, m={m}): closed form {exact!r} vs root finding {found!r}")
    return res


SUITES = ("monotonicity", "majorant", "szasz", "chain", "closed-forms")
