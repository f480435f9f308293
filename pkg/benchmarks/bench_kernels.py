"""Time the numba and numpy table kernels on the same inputs.

    python3 benchmarks/bench_kernels.py --n 8 10 12 14 --repeat 5
"""

import argparse
import random
import time

import numpy as np

from rdet import kernels
from rdet.intervals import enumerate_indecomposables
from rdet.quiver import random_quiver


def inputs(n, seed):
    q = random_quiver(n, random.Random(seed), with_relations=False)
    mods = enumerate_indecomposables(q)
    a = np.array([m.a for m in mods], dtype=np.int64)
    b = np.array([m.b for m in mods], dtype=np.int64)
    return q, a, b, kernels.right_mask(q.orientation, q.n)


def run_once(impl, q, a, b, right):
    H = impl.hom_table(a, b, right, q.n)
    T = impl.composite_table(H, a, b)
    irr = impl.irreducible_table(H, T)
    for x, y in zip(*np.nonzero(irr)):
        impl.oracle_marks(H, T, x, y)
    return H, T, irr


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, nargs="+", default=[6, 8, 10, 12, 14])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    backends = [("numpy", kernels.numpy_kernels)]
    if kernels.numba_kernels is not None:
        backends.append(("numba", kernels.numba_kernels))
    else:
        print("numba unavailable; timing numpy only")

    print(f"{'n':>3} {'modules':>8} " + " ".join(f"{name + ' (ms)':>12}" for name, _ in backends) + "  speedup")
    for n in args.n:
        q, a, b, right = inputs(n, args.seed)
        results, row = [], []
        for _, impl in backends:
            results.append(run_once(impl, q, a, b, right))  # warm-up and jit compile
            row.append(best_of(lambda impl=impl: run_once(impl, q, a, b, right), args.repeat))
        for other in results[1:]:
            assert all(np.array_equal(x, y) for x, y in zip(results[0], other)), "backends disagree"
        speedup = f"{row[0] / row[1]:7.1f}x" if len(row) == 2 else ""
        print(f"{n:>3} {len(a):>8} " + " ".join(f"{t * 1e3:12.2f}" for t in row) + "  " + speedup)


if __name__ == "__main__":
    main()
