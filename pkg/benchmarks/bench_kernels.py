"""Time the batch EM kernel under the numba and numpy backends.

    python benchmarks/bench_kernels.py [--repeats 20]

Prints one CSV row per (M, K, backend) with the median wall time per solve
and the speedup of numba over numpy. Both backends are checked to agree
before timing.
"""

import argparse
import sys
import time

import numpy as np

from entclust.kernels import em_iterate
from entclust.pseudo_labels import dirichlet_predictions

SHAPES = ((250, 10), (1000, 2), (1000, 20), (1000, 200))


def time_solve(sigma, u_lam, backend, repeats, max_iter):
    m = sigma.shape[0]
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        em_iterate(sigma, sigma, u_lam, 1.0, m, 1e-9, max_iter, backend=backend)
        times.append(time.perf_counter() - t0)
    return float(np.median(times))


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeats", type=int, default=20)
    p.add_argument("--lam", type=float, default=100.0)
    p.add_argument("--max-iter", type=int, default=200)
    args = p.parse_args(argv)
    try:
        import numba  # noqa: F401
    except ImportError:
        print("numba is not installed; nothing to compare", file=sys.stderr)
        return 1
    print("M,K,backend,median_seconds,speedup")
    for m, k in SHAPES:
        sigma = dirichlet_predictions(m, k, 0)
        u_lam = np.full(k, args.lam / k)
        a = em_iterate(sigma, sigma, u_lam, 1.0, m, 1e-9, args.max_iter, backend="numba")
        b = em_iterate(sigma, sigma, u_lam, 1.0, m, 1e-9, args.max_iter, backend="numpy")
        np.testing.assert_allclose(a[0], b[0], rtol=1e-10, atol=1e-13)
        t_nb = time_solve(sigma, u_lam, "numba", args.repeats, args.max_iter)
        t_np = time_solve(sigma, u_lam, "numpy", args.repeats, args.max_iter)
        print(f"{m},{k},numpy,{t_np:.6f},1.00")
        print(f"{m},{k},numba,{t_nb:.6f},{t_np / t_nb:.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
