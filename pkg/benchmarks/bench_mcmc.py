"""Benchmark: the compiled chain kernel against the pure numpy/python
fallback on identical pre-generated randomness.

Run with the package installed:

    python benchmarks/bench_mcmc.py

Both paths execute the same coordinate flips, so the speedup number is a
clean apples-to-apples comparison.  Use PRADIAL_DISABLE_NUMBA=1 to make
the library itself use the fallback.
"""

import time

import numpy as np

from pradial import _kernels
from pradial.rng import RngStream


def make_inputs(n, n_steps, seed=0):
    gen = RngStream(seed).gen
    coord_idx = gen.integers(0, n, size=n_steps).astype(np.int64)
    normals = gen.standard_normal(n_steps)
    log_unifs = np.log(gen.random(n_steps))
    adapt_rates = 1.0 / (1.0 + np.arange(n_steps, dtype=np.float64)) ** 0.6
    adapt_up = np.exp(adapt_rates * 0.65)
    adapt_down = np.exp(adapt_rates * -0.35)
    x0 = np.sort(gen.standard_normal(n)) + np.arange(n) * 0.5
    return coord_idx, normals, log_unifs, adapt_up, adapt_down, x0


def run(kernel, n, n_steps, n_keep):
    coord_idx, normals, log_unifs, adapt_up, adapt_down, x0 = make_inputs(n, n_steps)
    scales = np.ones(n)
    out = np.empty((n_keep, n))
    acc = np.zeros((n, 2), dtype=np.int64)
    t0 = time.perf_counter()
    kernel(x0, 2.0, 1, 2.0, coord_idx, normals, log_unifs, scales,
           n_steps // 4, adapt_up, adapt_down, 1, out, acc)
    return time.perf_counter() - t0, out


def main():
    n, n_steps, n_keep = 16, 400000, 1000
    if _kernels.BACKEND != "numba":
        print("numba backend unavailable/disabled; nothing to compare")
        return
    # warm up the JIT so compilation is not timed
    run(_kernels.run_chain, n, 1000, 10)
    t_numba, out_numba = run(_kernels.run_chain, n, n_steps, n_keep)
    t_py, out_py = run(_kernels._chain_py, n, n_steps, n_keep)
    same = np.array_equal(out_numba, out_py)
    print(f"chain: n={n}, steps={n_steps}, kept={n_keep}")
    print(f"numba   : {t_numba:8.3f} s")
    print(f"fallback: {t_py:8.3f} s")
    print(f"speedup : {t_py / t_numba:8.1f} x")
    print(f"bit-identical outputs: {same}")


if __name__ == "__main__":
    main()
