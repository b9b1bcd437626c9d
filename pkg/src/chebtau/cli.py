"""``cheb-tau`` command line front end."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from decimal import Decimal

import numpy as np

from . import verify as _verify
from .asymptotics import convergence_table, tau_double_star, tau_star
from .bounds import bound_report
from .closed_forms import SUPPORTED_GAPS, tau_closed
from .extrema import tau

CSV_VERSION = "# cheb-tau v1"
TABLE_FIELDS = ("n", "k", "tau", "omega", "delta", "thm12_first", "thm12_second", "violations")


class UsageError(ValueError):
    pass


def fmt(v, precision: int) -> str:
    """Plain decimal with exactly ``precision`` significant digits."""
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    if v is None:
        return ""
    # exponent form fixes the digit count; Decimal re-renders it positionally
    return format(Decimal(f"{float(v):.{precision - 1}e}"), "f")


def _number(v, precision: int):
    if v is None or isinstance(v, (str, int)):
        return v
    return float(fmt(v, precision))


def parse_range(text: str) -> range:
    try:
        a, b = (int(s) for s in text.split(".."))
    except ValueError:
        raise UsageError(f"range must look like A..B, got {text!r}") from None
    if a > b:
        raise UsageError(f"empty range {text!r}")
    return range(a, b + 1)


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _precision(text: str) -> int:
    v = int(text)
    if v < 15:
        raise argparse.ArgumentTypeError(f"precision must be at least 15, got {text}")
    return v


# -- rendering ------------------------------------------------------------

def _render_records(records: list[dict], fields, fmt_name: str, precision: int, header: bool = True) -> str:
    if fmt_name == "json":
        out = [{f: _number(r.get(f), precision) for f in fields} for r in records]
        return json.dumps(out if len(out) != 1 else out[0], indent=2) + "\n"
    if fmt_name == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            buf.write(CSV_VERSION + "\n")
            w.writerow(fields)
        for r in records:
            w.writerow([r.get(f) if isinstance(r.get(f), str) else fmt(r.get(f), precision) for f in fields])
        return buf.getvalue()
    lines = []
    for r in records:
        width = max(len(f) for f in fields)
        for f in fields:
            v = r.get(f)
            shown = v if isinstance(v, str) else fmt(v, precision)
            lines.append(f"{f:<{width}}  {shown}")
        lines.append("")
    return "\n".join(lines)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands ---------------------------------------------------------------

def cmd_tau(args) -> int:
    t = tau(args.n, args.k)
    rec = {"n": t.n, "k": t.k, "tau": t.value, "omega": t.omega, "method": t.method}
    fields = ["n", "k", "tau", "omega", "method"]
    m = t.n - t.k
    if m in SUPPORTED_GAPS:
        closed = tau_closed(t.k, m).value
        rec.update(closed_form=closed, difference=t.value - closed)
        fields += ["closed_form", "difference"]
    _emit(_render_records([rec], fields, args.format, args.precision), args.out)
    return 0


def _table_row(cell):
    k, n = cell
    rep = bound_report(n, k)
    t = tau(n, k)
    return {
        "n": n,
        "k": k,
        "tau": t.value,
        "omega": t.omega,
        "delta": rep.delta,
        "thm12_first": rep.thm12_first,
        "thm12_second": rep.thm12_second,
        "violations": ";".join(rep.violations()),
    }


def table_rows(k_range, n_max: int, threads: int | None = None) -> list[dict]:
    if k_range.start < 1:
        raise UsageError("derivative order k must be at least 1")
    cells = [(k, n) for k in k_range for n in range(k + 2, n_max + 1)]
    if not cells:
        raise UsageError(f"no (n, k) cells with k in {k_range.start}..{k_range.stop - 1} and n <= {n_max}")
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_table_row, cells))


def cmd_table(args) -> int:
    fmt_name = "csv" if args.format == "text" else args.format
    rows = table_rows(parse_range(args.k_range), args.n_max, args.threads)
    _emit(_render_records(rows, TABLE_FIELDS, fmt_name, args.precision), args.out)
    return 0


def cmd_bounds(args) -> int:
    rep = bound_report(args.n, args.k)
    fields = [
        "n", "k", "tau", "delta", "thm12_first", "thm12_second", "regime_fixed_k",
        "regime_fixed_k_simplified", "regime_fixed_m", "regime_ratio", "x_k", "violations",
    ]
    rec = {f: getattr(rep, f) for f in fields[:-1]}
    rec["violations"] = ";".join(rep.violations())
    _emit(_render_records([rec], fields, args.format, args.precision), args.out)
    return 0


def cmd_limits(args) -> int:
    if args.star:
        if args.k is None:
            raise UsageError("--star needs --k")
        lim = tau_star(args.k)
        kind, param, low = "tau_star", args.k, args.k + 2
        defaults = (10, 50, 250, 1000)
    else:
        if args.m is None:
            raise UsageError("--dstar needs --m")
        lim = tau_double_star(args.m)
        kind, param, low = "tau_double_star", args.m, args.m + 1
        defaults = (10, 40, 160, 640)
    if args.n_list:
        n_list = [int(s) for s in args.n_list.split(",")]
        if min(n_list) < low:
            raise UsageError(f"convergence table needs n >= {low}")
    else:
        n_list = sorted({max(low, v) for v in defaults})
    summary = {
        "kind": kind,
        "parameter": param,
        "exact": lim.exact,
        "asymptotic": lim.asymptotic,
        "ratio": lim.ratio,
    }
    rows = [vars(r) for r in convergence_table(kind, param, n_list)]
    p = args.precision
    if args.format == "json":
        body = {k: _number(v, p) for k, v in summary.items()}
        body["convergence"] = [{f: _number(r[f], p) for f in ("n", "finite", "limit", "gap")} for r in rows]
        text = json.dumps(body, indent=2) + "\n"
    elif args.format == "csv":
        text = _render_records(rows, ("n", "finite", "limit", "gap"), "csv", p)
        text = text.replace(CSV_VERSION + "\n", CSV_VERSION + f"\n# {kind} parameter={param}\n", 1)
    else:
        text = _render_records([summary], list(summary), "text", p)
        text += _render_records(rows, ("n", "finite", "limit", "gap"), "csv", p, header=False).replace(",", "  ")
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    s = args.suite
    if s == "monotonicity":
        res = _verify.check_monotonicity(args.k or 3, args.n_max or 60)
    elif s == "majorant":
        n, k = args.n or 20, args.k or 4
        if not 1 <= k <= n:
            raise UsageError(f"need 1 <= k <= n, got n={n}, k={k}")
        res = _verify.check_majorant(n, k)
    elif s == "szasz":
        lam = -0.25 if args.lam is None else args.lam
        if not lam > -0.5:
            raise UsageError(f"lambda must exceed -1/2, got {lam}")
        res = _verify.check_szasz(lam, args.n_max or 15)
    elif s == "chain":
        ks = parse_range(args.k_range or "1..10")
        res = _verify.check_chain(args.n_max or 40, ks.stop - 1)
    else:
        ks = parse_range(args.k_range or "1..15")
        res = _verify.check_closed_forms(ks.stop - 1)
    lines = [f"{'PASS' if res.passed else 'FAIL'}  {res.name}  ({res.checked} checks)"]
    lines += [f"  counterexample: {c}" for c in res.counterexamples]
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if res.passed else 1


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=_precision, default=15, metavar="D",
                        help="significant digits in numeric output (>= 15)")
    common.add_argument("--format", choices=("csv", "json", "text"), default="text")
    common.add_argument("--out", metavar="PATH", help="write to PATH instead of standard output")

    parser = argparse.ArgumentParser(prog="cheb-tau", description="Critical values of Chebyshev polynomial derivatives.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tau", parents=[common], help="tau_{n,k} for one cell")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("table", parents=[common], help="tau and bounds over a grid")
    p.add_argument("--k-range", required=True, metavar="A..B")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bounds", parents=[common], help="every upper bound for one cell")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("limits", parents=[common], help="limits in n with k fixed (--star) or n - k fixed (--dstar)")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--star", action="store_true")
    which.add_argument("--dstar", action="store_true")
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n-list", metavar="N1,N2,...")
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("suite", choices=_verify.SUITES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--k-range", metavar="A..B")
    p.add_argument("--lambda", dest="lam", type=float)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"cheb-tau {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
