"""Acceptance criteria, one check per criterion.

Run under pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly with ``python3 tests/test_acceptance.py``.
"""
import math
import os
import subprocess
import sys
import tempfile

import numpy as np
import pytest
from scipy import optimize

from chebtau.asymptotics import convergence_table, tau_double_star, tau_star
from chebtau.bounds import ab_factors, bound_report, regime_bound_fixed_k, regime_bound_fixed_m, regime_bound_ratio, rho
from chebtau.closed_forms import tau_closed
from chebtau.extrema import monotonicity_report, szasz_identity_residual, tau
from chebtau.special import airy_constants
from chebtau.verify import check_majorant

RESULTS: dict[int, tuple[bool, str]] = {}


def c01_exact_small_values():
    expected = {3: 1 / 3, 4: math.sqrt(2 / 3) / 3, 5: 0.25}
    worst = max(abs(tau(n, 1).value - v) for n, v in expected.items())
    assert worst <= 1e-12, worst
    return f"max error {worst:.1e}"


def c02_closed_forms():
    worst = 0.0
    for k in range(1, 16):
        for m in range(2, 7):
            exact = tau_closed(k, m).value
            worst = max(worst, abs(exact - tau(k + m, k).value) / exact)
    assert worst <= 1e-11, worst
    return f"75 cells, max relative error {worst:.1e}"


def c03_monotonicity():
    for k in range(1, 11):
        vals = [tau(n, k).value for n in range(k + 2, k + 41)]
        bad = [k + 2 + i for i, (a, b) in enumerate(zip(vals, vals[1:])) if not b < a]
        assert not bad, f"k={k}: not decreasing after n={bad[0]}"
    for i in (1, 2, 3):
        up = monotonicity_report(-0.25, i, range(max(i, 2), 16))
        flat = monotonicity_report(0.0, i, range(max(i, 2), 16))
        assert up.expected == "increasing" and up.holds, up.violations
        assert flat.expected == "constant" and flat.holds, flat.violations
    return "k=1..10 strictly decreasing; lambda=-0.25 increasing; lambda=0 constant"


def c04_identity():
    worst = 0.0
    for n in range(3, 9):
        for lam in (0.5, 1.0, 2.5, 4.0):
            for x in np.linspace(-1, 1, 101):
                worst = max(worst, abs(szasz_identity_residual(n, lam, float(x))))
    assert worst <= 1e-12, worst
    return f"max residual {worst:.1e}"


def c05_majorant():
    cells = 0
    for n in range(1, 41):
        for k in range(1, min(8, n) + 1):
            res = check_majorant(n, k, points=201)
            assert res.passed, res.counterexamples[:3]
            cells += 1
    return f"{cells} (n, k) grids clean"


def c06_chain():
    cells = 0
    for k in range(1, 11):
        for n in range(k + 2, 41):
            bad = bound_report(n, k).violations(rtol=1e-12)
            assert not bad, (n, k, bad)
            cells += 1
    worst = max(abs(ab_factors(k, k).a * ab_factors(k, k).b - 1) for k in range(1, 31))
    assert worst <= 1e-12, worst
    return f"{cells} cells clean; max |A_kk B_kk - 1| = {worst:.1e}"


def c07_regimes():
    for k in range(1, 11):
        for n in range(k + 2, 61):
            assert tau(n, k).value <= regime_bound_fixed_k(n, k), ("fixed k", n, k)
    for m in range(2, 7):
        for n in range(m + 1, 61):
            assert tau(n, n - m).value <= regime_bound_fixed_m(n, m), ("fixed m", n, m)
    for n in range(4, 41):
        assert tau(n, n // 2).value <= regime_bound_ratio(n, 0.5), ("ratio", n)
    err = abs(rho(0.5) - 4 / math.sqrt(27))
    assert err <= 1e-12, err
    return f"all regimes dominate; |rho(1/2) - 4/sqrt(27)| = {err:.1e}"


def c08_erdos_szego():
    vals = {n: tau(n, 1).value for n in range(5, 201)}
    assert abs(vals[5] - 0.25) <= 1e-12
    above = [n for n, v in vals.items() if n > 5 and not v < 0.25]
    assert not above, above
    return f"tau(n,1) < 1/4 for 6 <= n <= 200, tau(5,1) = {vals[5]!r}"


def c09_airy_constants():
    # published digits are truncations, e.g. 1.85575... appears as 1.8557
    c = airy_constants()
    got = {name: math.floor(float(getattr(c, name)) * 1e4) / 1e4 for name in ("a0", "a1", "C0", "C1")}
    assert got == {"a0": 1.8557, "a1": 2.3381, "C0": 1.1966, "C1": 1.0660}, got
    return ", ".join(f"{k}={float(getattr(c, k)):.6f}" for k in got)


def c10_limits():
    j = optimize.brentq(lambda x: math.sin(x) - x * math.cos(x), 4.0, 4.6, xtol=1e-15)
    oracle = abs(math.sin(j) / j)
    t1 = tau_star(1).exact
    assert abs(t1 - 0.217234) <= 1e-5 and abs(t1 - oracle) <= 1e-5, (t1, oracle)
    assert abs(tau_double_star(2).exact - 0.5) <= 1e-10
    assert abs(tau_double_star(3).exact - math.sqrt(2) / 2) <= 1e-10
    gaps = [r.gap for r in convergence_table("tau_star", 1, [10, 50, 250, 1000])]
    assert all(g > 0 for g in gaps) and all(b < a for a, b in zip(gaps, gaps[1:])), gaps
    return f"tau*_1 = {t1:.10f} (oracle {oracle:.10f}); gaps " + ", ".join(f"{g:.2e}" for g in gaps)


def c11_asymptotic_quality():
    r_star = tau_star(400).ratio
    r_dstar = tau_double_star(1000).ratio
    assert abs(r_star - 1) <= 0.15 and abs(r_dstar - 1) <= 0.15, (r_star, r_dstar)
    return f"ratio at k=400: {r_star:.4f}; at m=1000: {r_dstar:.4f}"


def c12_determinism():
    outs = []
    with tempfile.TemporaryDirectory() as tmp:
        for threads in ("1", "4"):
            path = os.path.join(tmp, f"t{threads}.csv")
            cmd = [sys.executable, "-m", "chebtau", "table", "--k-range", "1..3", "--n-max", "12",
                   "--threads", threads, "--out", path]
            subprocess.run(cmd, check=True)
            with open(path, "rb") as fh:
                outs.append(fh.read())
    assert outs[0] == outs[1]
    rows = outs[0].decode().splitlines()[2:]
    assert len(rows) == 27 and all(r.endswith(",") for r in rows)
    return "27 rows, byte-identical for 1 and 4 threads, no violations"


CRITERIA = [
    (1, "exact small values", c01_exact_small_values),
    (2, "closed forms vs root finding", c02_closed_forms),
    (3, "monotonicity and Szasz branches", c03_monotonicity),
    (4, "interpolating identity", c04_identity),
    (5, "majorant domination", c05_majorant),
    (6, "bound chain", c06_chain),
    (7, "regime bounds", c07_regimes),
    (8, "Erdos-Szego bound", c08_erdos_szego),
    (9, "Airy constants", c09_airy_constants),
    (10, "limits", c10_limits),
    (11, "asymptotic ratio bands", c11_asymptotic_quality),
    (12, "CLI determinism", c12_determinism),
]


def _run(number, check):
    try:
        detail = check()
    except AssertionError as exc:
        RESULTS[number] = (False, f"failed: {exc}")
        raise
    RESULTS[number] = (True, detail)


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check):
    _run(number, check)


def report_lines():
    titles = {n: t for n, t, _ in CRITERIA}
    lines = []
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        lines.append(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {titles[n]}: {detail}")
    return lines


if __name__ == "__main__":
    failed = 0
    for number, _, check in CRITERIA:
        try:
            _run(number, check)
        except AssertionError:
            failed += 1
    print("\n".join(report_lines()))
    sys.exit(1 if failed else 0)
