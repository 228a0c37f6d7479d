"""Time the compiled and numpy backends on the oracle's inner loops.

    python benchmarks/bench_kernels.py [--max-rank 8] [--vectors 100] [--repeat 3]
"""

import argparse
import time

import numpy as np

from angdecomp import kernels
from angdecomp.oracle import build_quadrature, random_unit_vectors
from angdecomp.tensor import exponent_triples


def _projection_workload(backend, max_rank, vectors):
    for L in range(max_rank + 1):
        exps = np.array(exponent_triples(L), dtype=np.int64)
        for ell in range(L % 2, L + 1, 2):
            rule = build_quadrature(L + ell)
            for u in vectors:
                backend.project_monomials(rule.nodes, rule.weights, u, ell, exps)


def _table_workload(backend, max_rank, points):
    for L in range(max_rank + 1):
        exps = np.array(exponent_triples(L), dtype=np.int64)
        for n in range(L % 2, L + 1, 2):
            backend.x_symbol_table(L, n, points, exps)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-rank", type=int, default=8)
    parser.add_argument("--vectors", type=int, default=100)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    vectors = random_unit_vectors(args.vectors)
    points = build_quadrature(2 * args.max_rank).nodes
    workloads = {
        "project_monomials": lambda b: _projection_workload(b, args.max_rank, vectors),
        "x_symbol_table": lambda b: _table_workload(b, args.max_rank, points),
    }
    names = sorted(kernels.BACKENDS)
    print(f"max rank {args.max_rank}, {args.vectors} vectors, {len(points)} quadrature nodes")
    print(f"{'workload':<20}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for label, work in workloads.items():
        t = {n: best_of(lambda: work(kernels.BACKENDS[n]), args.repeat) for n in names}
        speedup = f"{t['python'] / t['cython']:.1f}x" if "cython" in t else "n/a"
        print(f"{label:<20}" + "".join(f"{t[n]:>11.3f}s" for n in names) + f"{speedup:>10}")


if __name__ == "__main__":
    main()
