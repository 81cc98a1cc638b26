"""Shared corpus helpers for the test suite."""

from __future__ import annotations

import random
from collections import defaultdict
from math import comb

from hypercc import RandomHypergraphSpec, random_hypergraph


def corpus_spec(seed: int, max_n: int = 8, max_m: int = 12,
                max_size: int = 4) -> RandomHypergraphSpec:
    """Deterministic small-graph parameters derived from a seed."""
    rng = random.Random(seed * 7919 + 13)
    n = rng.randint(4, max_n)
    top = min(max_size, n)
    feasible = sum(comb(n, s) for s in range(2, top + 1))
    m = rng.randint(1, min(max_m, feasible))
    return RandomHypergraphSpec(n=n, m=m, min_size=2, max_size=top, seed=seed)


def corpus(count: int, **kwargs):
    for seed in range(count):
        yield seed, random_hypergraph(corpus_spec(seed, **kwargs))


def pair_only_spec(seed: int, max_n: int = 30) -> RandomHypergraphSpec:
    rng = random.Random(seed * 104729 + 7)
    n = rng.randint(3, max_n)
    m = rng.randint(1, min(3 * n, comb(n, 2)))
    return RandomHypergraphSpec(n=n, m=m, min_size=2, max_size=2, seed=seed)


def watts_strogatz_reference(pair_edges, label: str) -> float:
    """Simple-graph clustering coefficient, written from scratch on label pairs."""
    adj: dict[str, set[str]] = defaultdict(set)
    for edge in pair_edges:
        a, b = sorted(edge)
        adj[a].add(b)
        adj[b].add(a)
    nb = sorted(adj[label])
    d = len(nb)
    if d < 2:
        return 0.0
    links = sum(1 for i in range(d) for j in range(i + 1, d)
                if nb[j] in adj[nb[i]])
    return 2.0 * links / (d * (d - 1))


ADVERSARIAL_EDGE_SETS = [
    # nested hyperedges
    [{"a", "b", "c", "d", "e"}, {"a", "b", "c"}, {"a", "b"}],
    # star of pair edges
    [{"hub", f"leaf{i}"} for i in range(12)],
    # one giant edge
    [{f"n{i}" for i in range(30)}],
    # giant edge plus internal structure
    [{f"n{i}" for i in range(20)}, {"n0", "n1"}, {"n1", "n2"}, {"n0", "n2", "n3"}],
    # repeated coverage of one pair by many sizes
    [{"x", "y"}, {"x", "y", "z"}, {"x", "y", "w", "z"}, {"x", "y", "q", "w", "z"}],
    # size-1 edges mixed in
    [{"s"}, {"s", "t"}, {"t"}, {"s", "t", "u"}],
]
