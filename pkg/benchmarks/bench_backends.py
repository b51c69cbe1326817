"""Benchmark the numba kernels against the pure-numpy fallback.

Usage:
    python benchmarks/bench_backends.py [--quick]

Times the three hot paths (multi-system scan, per-element witness masks,
center computation) on rings of increasing size and prints the speedup.
The first numba call triggers (disk-cached) jit compilation and is excluded
by a warm-up pass.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

import starinv.backends as backends
from starinv.rings import parse_ring_spec
from starinv.systems import scan_raw, solve_mask

SCAN_SYSTEMS = ["mp", "group", "theo1-left", "theo1-right"]


def bench_scan(ring):
    all_idx = np.arange(ring.carrier_size, dtype=np.int64)
    start = time.perf_counter()
    scan_raw(ring, all_idx, SCAN_SYSTEMS)
    return time.perf_counter() - start


def bench_solve(ring, reps):
    step = max(1, ring.carrier_size // reps)
    start = time.perf_counter()
    for a in range(0, ring.carrier_size, step):
        solve_mask(ring, a, "q2")
    return time.perf_counter() - start


def bench_center(ring):
    ring._cache.pop("center", None)
    start = time.perf_counter()
    ring.center_mask()
    return time.perf_counter() - start


def run(spec, quick):
    rows = []
    for label, fn in (("scan x" + str(len(SCAN_SYSTEMS)), bench_scan),
                      ("solve masks", lambda r: bench_solve(r, 64)),
                      ("center", bench_center)):
        times = {}
        for backend in ("numba", "numpy"):
            backends.set_backend(backend)
            ring = parse_ring_spec(spec)  # fresh ring: cold caches
            if backend == "numba":
                fn(parse_ring_spec("zn(2)"))  # warm the jit
            times[backend] = fn(ring)
        rows.append((label, times["numba"], times["numpy"]))
    print(f"\n{spec}  (|R| = {parse_ring_spec(spec).carrier_size})")
    print(f"  {'kernel':<12} {'numba':>9} {'numpy':>9} {'speedup':>8}")
    for label, tb, tp in rows:
        print(f"  {label:<12} {tb:8.3f}s {tp:8.3f}s {tp / tb:7.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true",
                        help="skip the largest ring")
    args = parser.parse_args()
    specs = ["mat(2,zn(3),transpose)", "mat(2,zn(5),transpose)"]
    if not args.quick:
        specs.append("mat(2,gauss(3),conjtranspose)")
    for spec in specs:
        run(spec, args.quick)
    backends.set_backend("numba")


if __name__ == "__main__":
    main()
