"""Compare the pure-Python and compiled kernel backends.

Run from the repository root after an editable install:

    python benchmarks/bench_kernels.py

Times the scalar signed log-gamma, bulk binomial coefficients, the residual
integrand core, and an end-to-end residual_R grid, once per backend.
"""

from __future__ import annotations

import time

import numpy as np

import fracbinom
from fracbinom import _core
from fracbinom.identities import NeoParams, residual_R


def _time(fn, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_lgamma() -> float:
    xs = np.linspace(-80.3, 120.7, 20000)

    def run():
        for x in xs:
            _core.lgamma_signed(float(x))

    return _time(run)


def bench_binom_range() -> float:
    def run():
        for w in (0.25, 1.5, 7.3):
            _core.binom_range(w, 0.37, 0.0, 0, 200000)

    return _time(run)


def bench_neo_h() -> float:
    t = np.linspace(1e-6, 1.0 - 1e-6, 200000)

    def run():
        for lam in (0.3, 0.7, 1.0):
            _core.neo_h(t, 0.6, 3.0, lam)

    return _time(run)


def bench_residual_grid() -> float:
    points = [
        NeoParams(a, n, lam)
        for a in (0.3, 0.7, 1.3, 1.9)
        for n in (1, 5)
        for lam in (0.5, 1.0)
    ]

    def run():
        for p in points:
            residual_R(p, quad_tol=1e-11)

    return _time(run, repeat=2)


BENCHES = [
    ("lgamma_signed x 20k", bench_lgamma),
    ("binom_range 3 x 200k", bench_binom_range),
    ("neo_h 3 x 200k", bench_neo_h),
    ("residual_R 16-point grid", bench_residual_grid),
]


def main() -> None:
    if not _core.HAVE_COMPILED:
        print("compiled backend unavailable; build the extension first")
        return
    rows = []
    for name, fn in BENCHES:
        fracbinom.use_backend("pure")
        t_pure = fn()
        fracbinom.use_backend("compiled")
        t_comp = fn()
        rows.append((name, t_pure, t_comp))
    fracbinom.use_backend("compiled")
    width = max(len(r[0]) for r in rows)
    print(f"{'benchmark':<{width}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, t_pure, t_comp in rows:
        print(
            f"{name:<{width}}  {t_pure * 1e3:>8.1f}ms  {t_comp * 1e3:>8.1f}ms  "
            f"{t_pure / t_comp:>7.1f}x"
        )


if __name__ == "__main__":
    main()
