"""Compare the compiled kernels against the pure-Python fallback.

Run from the repo root after building: ``python3 benchmarks/bench_kernels.py``.
"""

import argparse
import itertools
import time

from crownlib import _kernels_py
from crownlib.canon import _csr, _Partition
from crownlib.constructions import lower_bound_construction, random_linear
from crownlib.core import incidence_structure
from crownlib.search import THEOREM2

try:
    from crownlib import _kernels
except ImportError:
    _kernels = None


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def cases():
    H = random_linear(16, 24, seed=3)
    E = list(H.edges)
    T = list(itertools.combinations(range(H.n), 3))
    L = lower_bound_construction(43)
    adj, colors = incidence_structure(L.n, L.edges)
    graph = _csr(adj)

    def refine(mod):
        p = _Partition.from_colors(colors)
        mod.refine(p.lab, p.start_of, p.cell_end, graph[0], graph[1], p.cell_starts())

    restr = [tuple(r) for r in THEOREM2]
    return {
        "admissible n=16 m=24": lambda mod: mod.admissible(H.n, E, T, ()),
        "admissible thm2 n=16": lambda mod: mod.admissible(H.n, E, T, restr),
        "find_crown lower-bound n=43": lambda mod: mod.find_crown(L.n, list(L.edges)),
        "refine incidence n=43": refine,
    }


def search_time(n):
    import os
    import subprocess
    import sys

    out = {}
    for label, env in (("cython", {}), ("python", {"CROWNLIB_PURE_PYTHON": "1"})):
        code = (
            "import time;from crownlib.search import ex_crown,SearchConfig;"
            f"t=time.perf_counter();ex_crown(SearchConfig({n}));print(time.perf_counter()-t)"
        )
        res = subprocess.run([sys.executable, "-c", code], env={**os.environ, **env},
                             capture_output=True, text=True, check=True)
        out[label] = float(res.stdout)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--search-n", type=int, default=10)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernels not built; only the fallback is available")
        return
    print(f"{'kernel':32s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, fn in cases().items():
        tp = _time(lambda: fn(_kernels_py), args.repeat)
        tc = _time(lambda: fn(_kernels), args.repeat)
        print(f"{name:32s} {tp * 1e3:10.3f} {tc * 1e3:10.3f} {tp / tc:8.1f}x")
    s = search_time(args.search_n)
    name = f"ex_crown exact n={args.search_n}"
    print(f"{name:32s} {s['python'] * 1e3:10.1f} {s['cython'] * 1e3:10.1f} "
          f"{s['python'] / s['cython']:8.1f}x")


if __name__ == "__main__":
    main()
