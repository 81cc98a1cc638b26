#!/usr/bin/env python3
"""Benchmark the compiled counting kernels against the pure-Python fallback.

Generates a seeded random hypergraph, runs each per-node kernel and the
census once per backend, and prints wall times with speedups.

    python benchmarks/bench_kernels.py --nodes 300 --edges 3000
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hypercc import RandomHypergraphSpec, census_order3, random_hypergraph
from hypercc._kernels import available_backends, get_backend
from hypercc.projection import _build_index


def _timed(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def run(n: int, m: int, max_size: int, seed: int, repeat: int) -> None:
    spec = RandomHypergraphSpec(n=n, m=m, min_size=2, max_size=max_size,
                                seed=seed)
    h = random_hypergraph(spec)
    idx = _build_index(h, None)
    print(f"graph: n={h.n_nodes} m={h.n_edges} memberships={h.bipartite_edges} "
          f"pairs={idx.nbr.size // 2}")

    backends = available_backends()
    if backends == ["pure"]:
        print("compiled kernels not built; benchmarking pure backend only")

    def jobs_for(kernels):
        nn = h.n_nodes
        out = np.zeros(nn)
        closed = np.zeros(nn, dtype=np.int64)
        total = np.zeros(nn, dtype=np.int64)
        return {
            "proposed": lambda: kernels.proposed_range(
                idx.ptr, idx.nbr, idx.wgt, 0, nn, out),
            "opsahl": lambda: kernels.opsahl_range(
                h.inc_ptr, h.inc_edges, h.edge_ptr, h.edge_nodes,
                idx.ptr, idx.nbr, idx.cnt, 0, nn, closed, total),
            "zhou": lambda: kernels.zhou_range(
                h.inc_ptr, h.inc_edges, h.edge_ptr, h.edge_nodes,
                idx.ptr, idx.nbr, 0, nn, out),
            "baseline": lambda: kernels.baseline_range(
                idx.ptr, idx.nbr, 0, nn, out),
            "census": lambda: census_order3(h, kernels=kernels),
        }

    times: dict[str, dict[str, float]] = {}
    for name in backends:
        kernels = get_backend(name)
        times[name] = {label: _timed(job, repeat)
                       for label, job in jobs_for(kernels).items()}

    header = f"{'kernel':<10}" + "".join(f"{b:>14}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label in ("proposed", "opsahl", "zhou", "baseline", "census"):
        row = f"{label:<10}"
        for name in backends:
            row += f"{times[name][label] * 1000:>12.2f}ms"
        if len(backends) == 2:
            ratio = times["pure"][label] / max(times["compiled"][label], 1e-9)
            row += f"{ratio:>9.1f}x"
        print(row)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nodes", type=int, default=300)
    parser.add_argument("--edges", type=int, default=3000)
    parser.add_argument("--max-size", type=int, default=5)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    run(args.nodes, args.edges, args.max_size, args.seed, args.repeat)


if __name__ == "__main__":
    main()
