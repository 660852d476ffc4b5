"""Time the four vertex/edge correspondence operators on growing cross4 grids.

Prints one row per grid size with the incidence count and the best per-call
time of each operator, then the growth of time relative to incidence size.

    python scripts/linear_time.py --sizes 100 250 500 750 1000
"""
from __future__ import annotations

import argparse
import time
import timeit

import numpy as np

from hgmorph import correspondence as K
from hgmorph.grid import gen_grid
from hgmorph.hypergraph import EdgeSet, VertexSet

OPS = {
    "vdelta": (K.vertex_dilate_from_edges, "e"),
    "edelta": (K.edge_dilate_from_vertices, "v"),
    "veps": (K.vertex_erode_from_edges, "e"),
    "eeps": (K.edge_erode_from_vertices, "v"),
}


def best_per_call(fn, arg, budget: float = 0.05, repeat: int = 5) -> float:
    number = 1
    while timeit.timeit(lambda: fn(arg), number=number) < budget:
        number *= 2
    return min(timeit.repeat(lambda: fn(arg), number=number, repeat=repeat)) / number


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 250, 500, 750, 1000])
    ap.add_argument("--density", type=float, default=0.5, help="fraction of elements in the input sets")
    ap.add_argument("--seed", type=int, default=8)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    rows = []
    print(f"{'size':>6} {'incidences':>11} {'build s':>8} " + " ".join(f"{n + ' ms':>10}" for n in OPS))
    for size in args.sizes:
        t0 = time.perf_counter()
        g = gen_grid(size, size)
        build = time.perf_counter() - t0
        sets = {
            "v": VertexSet.from_array(g, rng.random(g.n_vertices) < args.density),
            "e": EdgeSet.from_array(g, rng.random(g.n_edges) < args.density),
        }
        times = [best_per_call(fn, sets[dom]) for fn, dom in OPS.values()]
        rows.append((size, g.n_incidences, times))
        print(f"{size:>6} {g.n_incidences:>11} {build:>8.2f} " + " ".join(f"{t * 1e3:>10.3f}" for t in times))

    print("\ntime growth / incidence growth between consecutive sizes")
    for (s0, i0, t0s), (s1, i1, t1s) in zip(rows, rows[1:]):
        ratios = [(b / a) / (i1 / i0) for a, b in zip(t0s, t1s)]
        print(f"{s0:>5}->{s1:<5} " + " ".join(f"{r:>10.2f}" for r in ratios))


if __name__ == "__main__":
    main()
