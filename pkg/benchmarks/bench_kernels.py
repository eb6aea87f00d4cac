"""Compare the compiled and pure-Python search kernels.

    python benchmarks/bench_kernels.py [--seed S] [--count N] [--repeat R]

Both kernels run the same instances; their outputs must be identical.
Prints per-workload wall time and the speed-up.
"""
from __future__ import annotations

import argparse
import sys
import time

from totalcolor9 import kernels
from totalcolor9.coloring import ConflictIndex
from totalcolor9.corpus import generated
from totalcolor9.graphs import NAMED


def workloads(seed: int, count: int) -> dict[str, list[tuple[ConflictIndex, int]]]:
    theorem = [e.graph for e in generated(seed, count, 9, 12, target_max_degree=8, prefix="b")]
    mid = [e.graph for e in generated(seed + 1, count, 20, 30, prefix="m")]
    small = [NAMED[n]() for n in ("k4", "cube", "icosahedron", "wheel5", "c6")]
    return {
        "max-degree-8, k=9": [(ConflictIndex(g), 9) for g in theorem],
        "n=20..30, k=9": [(ConflictIndex(g), 9) for g in mid],
        "named, k=delta+1": [(ConflictIndex(g), g.max_degree + 1) for g in small],
        "k4 infeasible, k=4": [(ConflictIndex(NAMED["k4"]()), 4)] * 50,
    }


def run(work: list[tuple[ConflictIndex, int]], repeat: int) -> tuple[float, list]:
    best = float("inf")
    out: list = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = [idx.solve(k) for idx, k in work]
        best = min(best, time.perf_counter() - t)
    return best, [None if r is None else sorted(r.colors.items(), key=repr) for r in out]


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--repeat", type=int, default=1)
    a = ap.parse_args(argv)
    if not kernels.compiled_available():
        print("compiled kernel not built; nothing to compare", file=sys.stderr)
        return 1
    prev = kernels.BACKEND
    print(f"{'workload':22s} {'instances':>9s} {'python s':>10s} {'cython s':>10s} {'speed-up':>9s}")
    ok = True
    try:
        for name, work in workloads(a.seed, a.count).items():
            kernels.use("python")
            tp, rp = run(work, a.repeat)
            kernels.use("cython")
            tc, rc = run(work, a.repeat)
            same = rp == rc
            ok &= same
            print(f"{name:22s} {len(work):9d} {tp:10.4f} {tc:10.4f} {tp / tc if tc else float('inf'):8.1f}x"
                  + ("" if same else "  OUTPUTS DIFFER"))
    finally:
        kernels.use(prev)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
