"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each row reports the best-of-N wall time per call for both backends and
the speedup.  The end-to-end rows swap the kernel module used by the
library so the same public functions run on either backend.
"""
from __future__ import annotations

import argparse
import contextlib
import importlib
import timeit

import kummerbessel.bessel as bessel_mod
import kummerbessel.kummer as kummer_mod
import kummerbessel.representation as rep_mod
from kummerbessel import HypergeometricParams, eval_rep18, hyp1f1_oracle

py = importlib.import_module("kummerbessel._pykernels")
try:
    cy = importlib.import_module("kummerbessel._ckernels")
except ImportError:
    cy = None


@contextlib.contextmanager
def using(kernels):
    saved = [(m, m.kernels) for m in (bessel_mod, kummer_mod, rep_mod)]
    for m, _ in saved:
        m.kernels = kernels
    try:
        yield
    finally:
        for m, k in saved:
            m.kernels = k


def _sweep():
    for i in range(1, 41):
        eval_rep18(HypergeometricParams(2.5, 3.7, 0.25 * i), 40)


def _oracle_sweep():
    for i in range(1, 41):
        hyp1f1_oracle(HypergeometricParams(1 + 0.5j, 3.7, complex(0.25 * i, -0.5 * i)))


CASES = [
    ("jv_series nu=2.5 w=7+3i", lambda k: k.jv_series(2.5, 7 + 3j)),
    ("iv_series nu=1.35 x=5", lambda k: k.iv_series(1.35, 5.0)),
    ("kummer_series a=2.5 b=3.7 z=10", lambda k: k.kummer_series(2.5, 3.7, 10.0, 1e-20, 10_000)),
    ("kummer_series complex z=-20i", lambda k: k.kummer_series(1 + 1j, 2.0, -20j, 1e-20, 10_000)),
    ("bessel_series_sum N=40", lambda k: k.bessel_series_sum(3.7, -2.6j, 5j, 40)),
    ("bessel_series_sum_real N=40", lambda k: k.bessel_series_sum_real(3.7, -2.6, 10.0, 40)),
]
END_TO_END = [
    ("eval_rep18 sweep, 40 points", _sweep),
    ("oracle sweep, 40 complex points", _oracle_sweep),
]


def best(fn, repeat: int) -> float:
    timer = timeit.Timer(fn)
    n, _ = timer.autorange()
    return min(timer.repeat(repeat, n)) / n


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if cy is None:
        print("compiled extension not built; only the Python backend is timed")
    print(f"{'case':40s} {'python':>12s} {'cython':>12s} {'speedup':>8s}")
    for name, f in CASES:
        tp = best(lambda: f(py), args.repeat)
        tc = best(lambda: f(cy), args.repeat) if cy else float("nan")
        print(f"{name:40s} {tp * 1e6:10.1f}us {tc * 1e6:10.1f}us {tp / tc:7.1f}x")
    for name, f in END_TO_END:
        with using(py):
            tp = best(f, args.repeat)
        if cy:
            with using(cy):
                tc = best(f, args.repeat)
        else:
            tc = float("nan")
        print(f"{name:40s} {tp * 1e3:10.2f}ms {tc * 1e3:10.2f}ms {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
