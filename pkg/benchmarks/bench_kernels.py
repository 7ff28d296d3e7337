"""Time the compiled kernels against their numpy twins.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row reports the best wall time of both backends and the speed-up.
Without numba installed (or with EVOGRAD_DISABLE_JIT=1) only the numpy
column is meaningful.
"""

import argparse
import time

import numpy as np

from evograd import _jit, kernels
from evograd.noise_table import build


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(table, rng):
    P, N = 50_890, 1000
    idx = rng.integers(0, table.length - P, N)
    w = rng.standard_normal(N)
    yield "aggregate_dense P=50890 N=1000", \
        lambda: kernels.aggregate_dense_loop(table.entries, idx, w, P), \
        lambda: kernels.aggregate_dense_numpy(table.entries, idx, w, P)

    P, N, b = 1_000_000, 10_000, 5000
    starts = rng.integers(0, P // b, N) * b
    lengths = np.full(N, b)
    idx = rng.integers(0, table.length - b, N)
    w = rng.standard_normal(N)
    yield "aggregate_limited P=1e6 N=10000", \
        lambda: kernels.aggregate_limited_loop(table.entries, idx, w, starts, lengths, P), \
        lambda: kernels.aggregate_limited_numpy(table.entries, idx, w, starts, lengths, P)

    out = np.empty(5_000_000, np.float32)
    key = kernels.stream_key(1)
    yield "gaussian_fill 5e6", \
        lambda: kernels.gaussian_fill_loop(np.uint64(key), out), \
        lambda: kernels.gaussian_fill_numpy(key, out)

    a, c = rng.standard_normal(1_000_000), rng.standard_normal(1_000_000)
    yield "centred_moments 1e6", \
        lambda: kernels.centred_moments_loop(a, c), \
        lambda: kernels.centred_moments_numpy(a, c)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    table = build(0, 3_000_000)
    rng = np.random.default_rng(0)
    print(f"backend selected by default: {_jit.backend()}")
    print(f"{'kernel':36s} {'numba s':>10s} {'numpy s':>10s} {'speed-up':>9s}")
    for name, jit_fn, np_fn in cases(table, rng):
        if _jit.JIT_ENABLED:
            jit_fn()  # compile outside the timing
            tj = best_of(jit_fn, args.repeat)
        else:
            tj = float("nan")
        tn = best_of(np_fn, args.repeat)
        print(f"{name:36s} {tj:10.4f} {tn:10.4f} {tn / tj:8.1f}x")


if __name__ == "__main__":
    main()
