#!/usr/bin/env python3
"""Benchmark the walk kernels: compiled extension vs NumPy fallback.

Usage: python benchmarks/bench_kernels.py [--repeats 5]

Times the two hot loops (position-space stepping and pointwise wave-number
stepping) at a few problem sizes and prints a comparison table.  The
compiled backend must have been built (``pip install -e .``); otherwise
only the NumPy numbers are shown.
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from weylwalk._kernels import _walk_py

try:
    from weylwalk._kernels import _walk_cy
except ImportError:
    _walk_cy = None

HADAMARD = (
    1 / math.sqrt(2),
    1 / math.sqrt(2),
    1 / math.sqrt(2),
    -1 / math.sqrt(2),
)


def best_of(fn, repeats, *args):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def run(repeats: int) -> None:
    backends = [("numpy", _walk_py)]
    if _walk_cy is not None:
        backends.append(("cython", _walk_cy))
    else:
        print("note: compiled extension not available; showing NumPy only\n")

    print(f"{'kernel':<28}{'size':<18}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    print("-" * (46 + 12 * len(backends) + 10))

    for n in (200, 1000, 4000):
        times = [
            best_of(mod.position_evolve, repeats, *HADAMARD, 1.0, 0.0, n)
            for _, mod in backends
        ]
        row = f"{'position_evolve':<28}{f'n={n}':<18}"
        row += "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.2f}x"
        print(row)

    for n, N in ((200, 1024), (1000, 4096), (2000, 8192)):
        k = -np.pi + 2 * np.pi * np.arange(N) / N
        times = [
            best_of(mod.kspace_evolve, repeats, *HADAMARD, 1.0, 0.0, n, k)
            for _, mod in backends
        ]
        row = f"{'kspace_evolve':<28}{f'n={n}, N={N}':<18}"
        row += "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.2f}x"
        print(row)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5, help="best-of repeats per cell")
    run(parser.parse_args().repeats)


if __name__ == "__main__":
    main()
