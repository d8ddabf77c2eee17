"""Compare the compiled and pure-Python kernels on the gadget instances.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""

from __future__ import annotations

import argparse
import random
import time

from liarsdom import kernels
from liarsdom.corpus import INSTANCES
from liarsdom.reduction import reduce


def best_of(repeat, fn):
    times = []
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def workloads(quick):
    g_b = reduce(*INSTANCES["B"]())[0].to_graph()
    g_c = reduce(*INSTANCES["C"]())[0].to_graph()
    rng = random.Random(0)
    masks = [rng.getrandbits(g_c.vertex_count) for _ in range(2000 if quick else 20000)]

    def refute(g, k):
        free = list(range(g.vertex_count))
        return lambda prefer: kernels.search_size(
            kernels.LDS, g.closed_masks, g.intersecting_pair_unions, free, 0, k, 1, 1 << 40, prefer
        )[1]

    def verify(prefer):
        nb, pu = g_c.closed_masks, g_c.intersecting_pair_unions
        return sum(kernels.lds_ok(nb, pu, m, prefer) for m in masks)

    def deficit(prefer):
        nb = g_c.closed_masks
        return sum(kernels.deficiency(nb, m, prefer) for m in masks)

    yield "B: no LDS of size 15 (C(20,15))", refute(g_b, 15)
    yield f"C: lds_ok on {len(masks)} masks", verify
    yield f"C: deficiency on {len(masks)} masks", deficit
    yield "C: no LDS of size 21 (C(28,21))", refute(g_c, 21)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the Python fallback is timed")
    print(f"{'workload':42} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for name, fn in workloads(args.quick):
        results = {}
        timings = {}
        for b in backends:
            timings[b], results[b] = best_of(args.repeat, lambda: fn(b))
        assert len(set(results.values())) == 1, f"backends disagree on {name}: {results}"
        row = f"{name:42} " + " ".join(f"{timings[b]:9.4f}s" for b in backends)
        if "cython" in timings:
            row += f"   {timings['python'] / timings['cython']:6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
