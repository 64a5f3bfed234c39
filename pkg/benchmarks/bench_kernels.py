"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import time

from toughore import _pykernels
from toughore.generate import canonical_codes
from toughore.graph import from_edges

try:
    from toughore import _ckernels
except ImportError:
    _ckernels = None


def random_rows(rng, n, p):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edges(n, edges)


def workloads():
    rng = random.Random(7)
    tough = [g for g in (random_rows(rng, 12, 0.5) for _ in range(60)) if not g.is_complete()]
    ham = [random_rows(rng, 16, 0.3) for _ in range(20)]
    table = [random_rows(rng, 12, 0.4) for _ in range(10)]
    codes7 = canonical_codes(7)
    canon = [random_rows(rng, 10, 0.5) for _ in range(300)]
    return {
        "toughness n=12 x60": lambda k: [k.toughness_search(g.rows, g.n) for g in tough],
        "hamilton n=16 x20": lambda k: [k.hamilton_cycle(g.rows, g.n) for g in ham],
        "cycle table n=12 x10": lambda k: [k.cycle_table(g.rows, g.n) for g in table],
        "canonical n=10 x300": lambda k: [k.canonical_code(g.rows, g.n) for g in canon],
        "extend 7 -> 8": lambda k: k.extend_codes(codes7, 7),
    }


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the fallback is timed")
    print(f"{'workload':24} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, work in workloads().items():
        py = best_of(lambda: work(_pykernels), 1)
        if _ckernels is None:
            print(f"{name:24} {py:10.3f}")
            continue
        c = best_of(lambda: work(_ckernels), args.repeat)
        print(f"{name:24} {py:10.3f} {c:11.4f} {py / c:7.0f}x")


if __name__ == "__main__":
    main()
