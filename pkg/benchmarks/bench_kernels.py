"""Benchmark the compiled event kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [n_events]

Runs a representative slice of each experiment's hot loop with both backends
and reports wall time and speedup.  Both backends consume identical
pre-drawn uniforms, so the outputs are checked to be bit-identical as well.
"""
from __future__ import annotations

import sys
import time

import numpy as np

from ebcm.experiments import make_config, run_experiment
from ebcm.kernels import get_backend

CASES = [
    ("interface", {"theta_deg": 40.0}),
    ("plate", {}),
    ("mzi", {}),
    ("wheeler", {"events_per_point": 10_000}),
    ("eraser", {}),
    ("two_beam", {"events_per_point": 2_000}),
    ("eprb", {"events_per_point": 50_000}),
    ("hbt", {"events_per_point": 50_000}),
]


def run_case(name: str, overrides: dict, backend: str):
    import ebcm.experiments as ex

    mod = get_backend(backend)
    saved = ex.kernels
    ex.kernels = mod
    try:
        cfg = make_config(name, seed=7, **overrides)
        t0 = time.perf_counter()
        result = run_experiment(cfg)
        dt = time.perf_counter() - t0
    finally:
        ex.kernels = saved
    return dt, result


def main() -> int:
    if len(sys.argv) > 1:
        for case in CASES:
            case[1].setdefault("events_per_point", int(sys.argv[1]))
    if get_backend("fast") is None:
        print("compiled backend unavailable; nothing to compare")
        return 1
    print(f"{'experiment':12s} {'pure [s]':>10s} {'fast [s]':>10s} {'speedup':>8s}  identical")
    for name, overrides in CASES:
        t_pure, r_pure = run_case(name, overrides, "pure")
        t_fast, r_fast = run_case(name, overrides, "fast")
        same = all(
            np.array_equal(r_pure.columns[k], r_fast.columns[k], equal_nan=True)
            for k in r_pure.columns
        )
        print(f"{name:12s} {t_pure:10.3f} {t_fast:10.3f} {t_pure / t_fast:7.1f}x  {same}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
