"""Small reference hypergraphs and a seeded random generator."""
from __future__ import annotations

import random

from .hypergraph import Hypergraph, build

# seed for the random instance family used by the law suites
RANDOM_SEED = 20131

__all__ = ["h0", "h1", "h2", "canonical", "random_hypergraph", "random_hypergraphs", "RANDOM_SEED"]


def h0() -> Hypergraph:
    """Path-like: e0={0,1}, e1={1,2,3}, e2={3,4}."""
    return build(range(5), [[0, 1], [1, 2, 3], [3, 4]])


def h1() -> Hypergraph:
    """One edge {0,1} and the isolated vertex 2."""
    return build(range(3), [[0, 1]])


def h2() -> Hypergraph:
    """Triangle graph."""
    return build(range(3), [[0, 1], [1, 2], [0, 2]])


def canonical() -> dict[str, Hypergraph]:
    return {"H0": h0(), "H1": h1(), "H2": h2()}


def random_hypergraph(rng: random.Random) -> Hypergraph:
    """2..8 vertices, 1..5 edges, each edge a uniform subset of size 1..4."""
    n = rng.randint(2, 8)
    m = rng.randint(1, 5)
    edges = []
    for _ in range(m):
        size = rng.randint(1, min(4, n))
        edges.append(sorted(rng.sample(range(n), size)))
    return Hypergraph.from_index_lists(n, edges)


def random_hypergraphs(count: int = 50, seed: int = RANDOM_SEED) -> list[Hypergraph]:
    rng = random.Random(seed)
    return [random_hypergraph(rng) for _ in range(count)]
