"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--sizes 6 8 10] [--graphs 200] [--repeat 3]

Reports microseconds per call for canonical labelling and for edge
classification on random graphs, plus the time to enumerate all 8-vertex
graphs with each backend.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from triedge import _pykernels

try:
    from triedge import _ckernels
except ImportError:
    _ckernels = None


def random_rows(rng: random.Random, n: int, p: float) -> list[int]:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


def per_call(fn, inputs, repeat: int) -> float:
    best = min(timeit.repeat(lambda: [fn(r) for r in inputs], number=1, repeat=repeat))
    return 1e6 * best / len(inputs)


def enumeration_seconds(pure: bool) -> float:
    env = dict(os.environ)
    env.pop("TRIEDGE_PURE_PYTHON", None)
    if pure:
        env["TRIEDGE_PURE_PYTHON"] = "1"
    code = ("import time; from triedge.search import count_classes; t = time.perf_counter(); "
            "count_classes(8); print(time.perf_counter() - t)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main(argv: list[str] | None = None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[6, 8, 10])
    ap.add_argument("--graphs", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--skip-enumeration", action="store_true")
    args = ap.parse_args(argv)

    if _ckernels is None:
        print("compiled kernels are not built; only the Python timings are shown")
    rng = random.Random(args.seed)
    print(f"{'kernel':<22}{'n':>4}{'python us':>12}{'cython us':>12}{'speedup':>9}")
    for n in args.sizes:
        inputs = [random_rows(rng, n, rng.random()) for _ in range(args.graphs)]
        for name in ("canonical_label", "count_nontriangular"):
            py = per_call(getattr(_pykernels, name), inputs, args.repeat)
            if _ckernels is None:
                print(f"{name:<22}{n:>4}{py:>12.1f}{'-':>12}{'-':>9}")
                continue
            cy = per_call(getattr(_ckernels, name), inputs, args.repeat)
            print(f"{name:<22}{n:>4}{py:>12.1f}{cy:>12.1f}{py / cy:>8.1f}x")

    if not args.skip_enumeration:
        py = enumeration_seconds(pure=True)
        cy = enumeration_seconds(pure=False)
        print(f"{'enumerate all, seconds':<22}{8:>4}{py:>12.2f}{cy:>12.2f}{py / cy:>8.1f}x")


if __name__ == "__main__":
    main()
