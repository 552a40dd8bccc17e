"""Compare the compiled and vectorized scan kernels.

Runs the standard escape-time scan on both backends, reports best-of-N
wall times and the speedup, and counts membership agreement between the
two masks.  The first compiled-backend call includes JIT compilation, so
a warmup scan runs outside the timed window.

Usage:
    python3 bench/benchmark_scan.py [--grid 500] [--iterations 50] [--repeat 3]
"""

import argparse
import time

import numpy as np

from trigiter import MANDELBROT, EscapeParams, TrigKind, scan_raw
from trigiter import _kernels


def time_scan(mapping, grid: int, params: EscapeParams, backend: str, repeat: int):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = scan_raw(
            -2.5, -2.5, 2.5, 2.5, grid, mapping, params, backend=backend
        )
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--grid", type=int, default=500, help="samples per axis")
    parser.add_argument("--iterations", type=int, default=50, help="orbit length")
    parser.add_argument("--repeat", type=int, default=3, help="timed runs per backend")
    args = parser.parse_args()

    params = EscapeParams(iterations=args.iterations)
    cases = [
        ("cosine", TrigKind.COSINE),
        ("mandelbrot", MANDELBROT),
    ]
    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    if not _kernels.HAVE_NUMBA:
        print("numba unavailable; timing the numpy backend only")

    for name, mapping in cases:
        print(f"--- {name}, grid {args.grid}, {args.iterations} iterations ---")
        timings = {}
        masks = {}
        for backend in backends:
            if backend == "numba":  # compile outside the timed window
                scan_raw(-2.5, -2.5, 2.5, 2.5, 2, mapping, params, backend=backend)
            best, result = time_scan(mapping, args.grid, params, backend, args.repeat)
            timings[backend] = best
            masks[backend] = result.mask
            rate = result.scanned / best
            print(
                f"{backend:>6}: {best:8.3f} s   "
                f"({rate / 1e6:6.2f} M points/s, {len(result)} survivors)"
            )
        if len(backends) == 2:
            speedup = timings["numpy"] / timings["numba"]
            agree = int(np.sum(masks["numpy"] == masks["numba"]))
            total = masks["numpy"].size
            print(f"speedup: numba is {speedup:.2f}x vs numpy")
            print(f"membership agreement: {agree}/{total} cells")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
