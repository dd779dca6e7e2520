"""Compare the compiled bitset kernels against the pure-Python twins.

Usage:
    python3 benchmarks/bench_kernels.py [--sizes 10,14,18] [--repeats 3]

Times the full-subset toughness scan and the component counter on random
connected graphs, once per backend, and prints the speedup.  Runs the
pure backend only when the extension is missing.
"""

import argparse
import random
import statistics
import time

from toughgraph import _pykernels, toughness_exact
from toughgraph.families import petersen, lattice

try:
    from toughgraph import _ckernels
except ImportError:
    _ckernels = None


def random_connected_adj(rng, n, p):
    while True:
        adj = [0] * n
        for a in range(n):
            for b in range(a + 1, n):
                if rng.random() < p:
                    adj[a] |= 1 << b
                    adj[b] |= 1 << a
        seen, stack = 1, [0]
        while stack:
            v = stack.pop()
            rest = adj[v] & ~seen
            while rest:
                w = (rest & -rest).bit_length() - 1
                seen |= 1 << w
                stack.append(w)
                rest &= rest - 1
        if seen == (1 << n) - 1:
            return tuple(adj)


def time_call(fn, repeats):
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def bench_scan(adj, n, repeats):
    rows = {}
    rows["python"] = time_call(lambda: _pykernels.best_ratio_scan(adj, n), repeats)
    if _ckernels is not None:
        import numpy as np

        c_adj = np.array(adj, dtype=np.uint64)
        rows["compiled"] = time_call(
            lambda: _ckernels.best_ratio_scan(c_adj, n), repeats
        )
    return rows


def bench_components(adj, n, repeats):
    rng = random.Random(99)
    masks = [rng.randrange(1 << n) for _ in range(20000)]

    def run_python():
        for m in masks:
            _pykernels.count_components(adj, m)

    rows = {"python": time_call(run_python, repeats)}
    if _ckernels is not None:
        import numpy as np

        c_adj = np.array(adj, dtype=np.uint64)

        def run_compiled():
            for m in masks:
                _ckernels.count_components(c_adj, m)

        rows["compiled"] = time_call(run_compiled, repeats)
    return rows


def print_row(label, rows):
    py = rows["python"]
    if "compiled" in rows:
        c = rows["compiled"]
        print(f"{label:<28} python {py * 1e3:9.2f} ms   "
              f"compiled {c * 1e3:9.2f} ms   speedup {py / c:6.1f}x")
    else:
        print(f"{label:<28} python {py * 1e3:9.2f} ms   (no extension built)")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="12,16,20",
                    help="comma-separated graph orders for the subset scan")
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    if _ckernels is None:
        print("note: compiled extension not available; timing pure Python only")

    print("full-subset toughness scan (2^n masks):")
    for n in (int(s) for s in args.sizes.split(",")):
        adj = random_connected_adj(rng, n, 0.4)
        print_row(f"  best_ratio_scan n={n}", bench_scan(adj, n, args.repeats))

    print("component counting (20000 random masks):")
    for n in (12, 24, 48):
        adj = random_connected_adj(rng, n, 0.2)
        print_row(f"  count_components n={n}", bench_components(adj, n, args.repeats))

    print("end-to-end exact toughness (backend chosen at import):")
    for label, g in (("petersen", petersen()), ("lattice v=4", lattice(4))):
        took = time_call(lambda: toughness_exact(g), args.repeats)
        print(f"  toughness_exact {label:<12} {took * 1e3:9.2f} ms")


if __name__ == "__main__":
    main()
