"""Command-line front end: single-point checks, grid sweeps, small tables.

    fracbinom verify --mode neo3 --alpha 0.5 --n 2 --lambda 1.0 --tol 1e-9
    fracbinom sweep --mode neo3 --alpha 0.1:0.9:0.1,1.1:1.9:0.1 \
        --n 1:10 --lambda 0.1:1.0:0.1 --tol 1e-8 --out grid.csv
    fracbinom osler --alpha 0.25 --n 1
    fracbinom binom --alpha 0.5 --n 4
    fracbinom kalpha --alpha 3.5

Sweeps emit CSV with the fixed column set

    alpha,n,lambda,gamma,mode,lhs,rhs,residual_R,abs_err,rel_err,tol,status

one row per (alpha, n, lambda) point, alpha outermost and lambda innermost,
floats with 17 significant digits so a rerun is byte-identical.  Exit code 0
when every row passed, 1 when any row failed or errored, 2 on a
configuration error.

Mode notes: the taylor_* modes verify the series identities for the
function picked by --function ("binom" is (1+z)^(alpha n), "exp" is e^z).
inequality mode compares the two sides at (x, y) = (lambda, 1) and its
status column carries the ordering (strict_less / equal / strict_greater);
a row passes when the ordering matches the theorem's prediction for
(alpha, x, y).  r_scan rows report R(alpha, n, lambda) as lhs (and in
residual_R) against R(alpha, n-1, lambda) as rhs; a row passes when |R|
strictly decreased (first n in ascending order passes trivially).
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import math
import sys
from dataclasses import dataclass, field

from . import _core
from .boundary import binomial_boundary, exp_boundary
from .identities import (
    Comparison,
    NeoParams,
    check_inequality,
    residual_R,
    verify_neo3,
    verify_neo3A,
    verify_osler,
    verify_taylor,
)
from .special import gen_binom, roots_k_alpha

CSV_COLUMNS = (
    "alpha",
    "n",
    "lambda",
    "gamma",
    "mode",
    "lhs",
    "rhs",
    "residual_R",
    "abs_err",
    "rel_err",
    "tol",
    "status",
)

MODES = (
    "neo3",
    "neo3A",
    "osler",
    "taylor_t1",
    "taylor_t2",
    "taylor_t3",
    "taylor_t1A",
    "taylor_t2A",
    "taylor_t3A",
    "inequality",
    "r_scan",
)

FUNCTIONS = ("binom", "exp")


@dataclass
class SweepGrid:
    alpha_values: list
    n_values: list
    lambda_values: list
    gamma: float = 0.0
    tol: float = 1e-8
    mode: str = "neo3"
    function_name: str = "binom"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; choose from {MODES}")
        if self.function_name not in FUNCTIONS:
            raise ValueError(f"unknown function {self.function_name!r}; choose from {FUNCTIONS}")
        if not self.alpha_values or not self.n_values or not self.lambda_values:
            raise ValueError("alpha, n and lambda value lists must be non-empty")
        if not (self.tol > 0):
            raise ValueError(f"tol must be positive, got {self.tol!r}")
        for a in self.alpha_values:
            if not (isinstance(a, (int, float)) and math.isfinite(a) and a > 0):
                raise ValueError(f"alpha values must be positive, got {a!r}")
        for n in self.n_values:
            if not (isinstance(n, int) and n >= 1):
                raise ValueError(f"n values must be positive integers, got {n!r}")
        for lam in self.lambda_values:
            if not (isinstance(lam, (int, float)) and 0.0 < lam <= 1.0):
                raise ValueError(f"lambda values must lie in (0, 1], got {lam!r}")


@dataclass
class SweepSummary:
    total: int
    passed: int
    failed: int
    worst_rel_err: float


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, complex):
        x = x.real
    return "%.17g" % float(x)


def _as_real(x) -> float:
    if isinstance(x, complex):
        return x.real
    return float(x)


def _base_row(mode, alpha, n, lam, gamma, tol) -> dict:
    return {
        "alpha": _fmt(alpha),
        "n": str(n),
        "lambda": _fmt(lam),
        "gamma": _fmt(gamma),
        "mode": mode,
        "lhs": "",
        "rhs": "",
        "residual_R": "",
        "abs_err": "",
        "rel_err": "",
        "tol": _fmt(tol),
        "status": "",
    }


def _expected_comparison(alpha: float) -> Comparison:
    if _core.snap_int(alpha) == 1.0:
        return Comparison.EQUAL
    return Comparison.STRICT_LESS if alpha < 1.0 else Comparison.STRICT_GREATER


def _point_row(mode, alpha, n, lam, gamma, tol, function_name, cache=None) -> tuple[dict, bool]:
    """Compute one grid point; returns (row, passed).  Computation errors are
    recorded in the status column rather than raised."""
    row = _base_row(mode, alpha, n, lam, gamma, tol)
    if cache is None:
        cache = {}
    try:
        if mode == "neo3":
            rep = verify_neo3(NeoParams(alpha, n, lam), tol)
        elif mode == "neo3A":
            rep = verify_neo3A(NeoParams(alpha, n, lam), tol)
        elif mode == "osler":
            rep = verify_osler(alpha, n, tol)
        elif mode.startswith("taylor_"):
            which = mode[len("taylor_"):]
            if function_name == "exp":
                f = exp_boundary()
            else:
                f = binomial_boundary(alpha * n)
            rep = verify_taylor(which, f, NeoParams(alpha, n, lam, gamma), tol)
        elif mode == "inequality":
            res = check_inequality(alpha, n, lam, 1.0)
            row["lhs"] = _fmt(res.lhs)
            row["rhs"] = _fmt(res.rhs)
            row["residual_R"] = _fmt(res.margin)
            row["abs_err"] = _fmt(abs(res.margin))
            row["rel_err"] = _fmt(abs(res.margin) / max(1.0, abs(res.rhs)))
            row["status"] = res.comparison.value
            return row, res.comparison is _expected_comparison(alpha)
        elif mode == "r_scan":
            key = (alpha, n, lam)
            if key not in cache:
                cache[key] = residual_R(NeoParams(alpha, n, lam))
            r_cur = cache[key]
            row["lhs"] = _fmt(r_cur)
            row["residual_R"] = _fmt(r_cur)
            if n >= 2:
                prev_key = (alpha, n - 1, lam)
                if prev_key not in cache:
                    cache[prev_key] = residual_R(NeoParams(alpha, n - 1, lam))
                r_prev = cache[prev_key]
                row["rhs"] = _fmt(r_prev)
                row["abs_err"] = _fmt(abs(r_cur - r_prev))
                row["rel_err"] = _fmt(abs(r_cur - r_prev) / max(1.0, abs(r_prev)))
                ok = abs(r_cur) < abs(r_prev) or r_cur == r_prev == 0.0
            else:
                ok = True
            row["status"] = "pass" if ok else "fail"
            return row, ok
        else:
            raise ValueError(f"unknown mode {mode!r}")
    except Exception as exc:  # recorded per row, sweep continues
        row["status"] = f"error:{type(exc).__name__}"
        return row, False

    row["lhs"] = _fmt(_as_real(rep.lhs))
    row["rhs"] = _fmt(_as_real(rep.rhs))
    res = rep.pieces.get("residual_R", rep.pieces.get("residual_integral"))
    if res is not None:
        row["residual_R"] = _fmt(_as_real(res))
    row["abs_err"] = _fmt(rep.abs_err)
    row["rel_err"] = _fmt(rep.rel_err)
    row["status"] = "pass" if rep.passed else "fail"
    return row, rep.passed


def _sweep_worker(payload) -> tuple[dict, bool]:
    return _point_row(*payload)


def run_sweep(grid: SweepGrid, output_path=None, parallel: int = 1) -> SweepSummary:
    """Evaluate the grid and write CSV to output_path ("-" or None: stdout).

    Rows are emitted alpha outermost, then n, then lambda, regardless of how
    they were computed; a rerun on the same grid is byte-identical.
    """
    points = [
        (grid.mode, alpha, n, lam, grid.gamma, grid.tol, grid.function_name)
        for alpha in grid.alpha_values
        for n in grid.n_values
        for lam in grid.lambda_values
    ]
    if parallel > 1 and len(points) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=parallel) as pool:
            chunk = max(1, len(points) // (parallel * 4))
            results = list(pool.map(_sweep_worker, points, chunksize=chunk))
    else:
        cache: dict = {}
        results = [
            _point_row(*point, cache=cache if grid.mode == "r_scan" else None)
            for point in points
        ]

    if output_path is None or output_path == "-":
        _write_csv(sys.stdout, results)
    else:
        with open(output_path, "w", newline="") as fh:
            _write_csv(fh, results)

    total = len(results)
    passed = sum(1 for _, ok in results if ok)
    worst = 0.0
    for row, _ in results:
        if row["rel_err"]:
            worst = max(worst, float(row["rel_err"]))
    return SweepSummary(total, passed, total - passed, worst)


def _write_csv(fh, results) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row, _ in results:
        writer.writerow([row[c] for c in CSV_COLUMNS])


def parse_float_axis(text: str) -> list:
    """Comma-separated values and a:b:step ranges (b inclusive)."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise ValueError(f"empty element in axis {text!r}")
        if ":" in part:
            bits = part.split(":")
            if len(bits) == 2:
                a, b, step = float(bits[0]), float(bits[1]), 1.0
            elif len(bits) == 3:
                a, b, step = float(bits[0]), float(bits[1]), float(bits[2])
            else:
                raise ValueError(f"bad range {part!r}; use a:b or a:b:step")
            if step <= 0 or b < a:
                raise ValueError(f"bad range {part!r}; need a <= b and step > 0")
            count = int(math.floor((b - a) / step + 0.5)) + 1
            out.extend(round(a + i * step, 10) for i in range(count))
        else:
            out.append(float(part))
    if not out:
        raise ValueError("axis must contain at least one value")
    return out


def parse_int_axis(text: str) -> list:
    vals = parse_float_axis(text)
    out = []
    for v in vals:
        iv = int(round(v))
        if abs(v - iv) > 1e-9:
            raise ValueError(f"n axis must contain integers, got {v!r}")
        out.append(iv)
    return out


def _cmd_verify(args) -> int:
    grid = SweepGrid(
        [args.alpha], [args.n], [args.lam],
        gamma=args.gamma, tol=args.tol, mode=args.mode,
        function_name=args.function,
    )
    row, ok = _point_row(
        grid.mode, args.alpha, args.n, args.lam, args.gamma, args.tol, args.function
    )
    width = max(len(c) for c in CSV_COLUMNS)
    for col in CSV_COLUMNS:
        print(f"{col:<{width}}  {row[col]}")
    return 0 if ok else 1


def _cmd_sweep(args) -> int:
    grid = SweepGrid(
        parse_float_axis(args.alpha),
        parse_int_axis(args.n),
        parse_float_axis(args.lam),
        gamma=args.gamma,
        tol=args.tol,
        mode=args.mode,
        function_name=args.function,
    )
    summary = run_sweep(grid, args.out, parallel=args.parallel)
    print(
        f"points={summary.total} passed={summary.passed} failed={summary.failed} "
        f"worst_rel_err={summary.worst_rel_err:.3e}",
        file=sys.stderr,
    )
    return 0 if summary.failed == 0 else 1


def _cmd_osler(args) -> int:
    rep = verify_osler(args.alpha, args.n, args.tol)
    print(f"alpha   {_fmt(args.alpha)}")
    print(f"n       {args.n}")
    print(f"lhs     {_fmt(rep.lhs)}")
    print(f"rhs     {_fmt(rep.rhs)}")
    print(f"rel_err {_fmt(rep.rel_err)}")
    print(f"window  {int(rep.pieces['window'])}")
    print(f"status  {'pass' if rep.passed else 'fail'}")
    return 0 if rep.passed else 1


def _cmd_binom(args) -> int:
    an = args.alpha * args.n
    print(f"binom({_fmt(an)}, alpha*j) for alpha={_fmt(args.alpha)}, j=0..{args.n}")
    for j in range(args.n + 1):
        xi = args.alpha * j
        print(f"{j:4d}  xi={_fmt(xi):>24}  {_fmt(gen_binom(an, xi))}")
    return 0


def _cmd_kalpha(args) -> int:
    rs = roots_k_alpha(args.alpha)
    print(f"K_alpha for alpha={_fmt(args.alpha)}: {len(rs)} roots")
    for k, w in zip(rs.ks, rs.roots):
        print(f"k={k:4d}  {_fmt(w.real):>24} {'+' if w.imag >= 0 else '-'} {_fmt(abs(w.imag))}i")
    return 0


def _add_point_flags(sp, tol_default=1e-8):
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--lambda", dest="lam", type=float, default=1.0)
    sp.add_argument("--gamma", type=float, default=0.0)
    sp.add_argument("--tol", type=float, default=tol_default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracbinom",
        description="Verify generalized binomial identities and fractional Taylor expansions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify", help="check a single point, human-readable")
    sp.add_argument("--mode", choices=MODES, default="neo3")
    _add_point_flags(sp)
    sp.add_argument("--function", choices=FUNCTIONS, default="binom")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("sweep", help="run a grid and emit CSV")
    sp.add_argument("--mode", choices=MODES, default="neo3")
    sp.add_argument("--alpha", required=True, help="axis: comma list and/or a:b:step ranges")
    sp.add_argument("--n", default="1", help="axis of positive integers")
    sp.add_argument("--lambda", dest="lam", default="1.0", help="axis in (0, 1]")
    sp.add_argument("--gamma", type=float, default=0.0)
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.add_argument("--function", choices=FUNCTIONS, default="binom")
    sp.add_argument("--out", default="-", help="CSV path, '-' for stdout")
    sp.add_argument("--parallel", type=int, default=1, help="worker processes")
    sp.set_defaults(func=_cmd_sweep)

    sp = sub.add_parser("osler", help="bilateral binomial sum at one point")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--tol", type=float, default=1e-6)
    sp.set_defaults(func=_cmd_osler)

    sp = sub.add_parser("binom", help="print a generalized binomial table")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--n", type=int, default=4)
    sp.set_defaults(func=_cmd_binom)

    sp = sub.add_parser("kalpha", help="print the root set K_alpha")
    sp.add_argument("--alpha", type=float, required=True)
    sp.set_defaults(func=_cmd_kalpha)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
