"""Dilations and erosions on the vertex, edge and subhypergraph lattices.

The operators are defined as compositions of the correspondence maps. The
``*_local`` variants evaluate the equivalent pointwise characterisations
directly from the incidence lists; they exist to be checked against the
compositions, not as the primary path.
"""
from __future__ import annotations

from typing import Callable, TypeVar

from .correspondence import (
    edge_dilate_from_vertices,
    edge_erode_from_vertices,
    vertex_dilate_from_edges,
    vertex_erode_from_edges,
)
from .hypergraph import EdgeSet, SubHypergraph, VertexSet

__all__ = [
    "vertex_dilate",
    "vertex_erode",
    "edge_dilate",
    "edge_erode",
    "hg_dilate",
    "hg_erode",
    "iterate",
    "vertex_dilate_local",
    "vertex_erode_local",
    "edge_dilate_local",
    "edge_erode_local",
]

T = TypeVar("T")


def vertex_dilate(vset: VertexSet) -> VertexSet:
    """Vertices sharing a hyperedge with ``vset``."""
    return vertex_dilate_from_edges(edge_dilate_from_vertices(vset))


def vertex_erode(vset: VertexSet) -> VertexSet:
    """Vertices all of whose incident edges lie inside ``vset``.

    Vertices on no edge pass vacuously, whether or not they are in ``vset``.
    """
    return vertex_erode_from_edges(edge_erode_from_vertices(vset))


def edge_dilate(eset: EdgeSet) -> EdgeSet:
    """Edges meeting some member edge."""
    return edge_dilate_from_vertices(vertex_dilate_from_edges(eset))


def edge_erode(eset: EdgeSet) -> EdgeSet:
    """Member edges disjoint from every non-member edge."""
    return edge_erode_from_vertices(vertex_erode_from_edges(eset))


def hg_dilate(x: SubHypergraph) -> SubHypergraph:
    return SubHypergraph.trusted(vertex_dilate(x.vset), edge_dilate(x.eset))


def hg_erode(x: SubHypergraph) -> SubHypergraph:
    return SubHypergraph.trusted(vertex_erode(x.vset), edge_erode(x.eset))


def iterate(op: Callable[[T], T], times: int) -> Callable[[T], T]:
    """``op`` composed with itself ``times`` times; ``times == 0`` is the identity.

    Stops early once a fixed point is reached.
    """
    if times < 0:
        raise ValueError("iteration count must be non-negative")

    def iterated(x: T) -> T:
        for _ in range(times):
            y = op(x)
            if y == x:
                break
            x = y
        return x

    iterated.__name__ = f"{getattr(op, '__name__', 'op')}^{times}"
    return iterated


# -- pointwise characterisations --------------------------------------------


def vertex_dilate_local(vset: VertexSet) -> VertexSet:
    hg, bits = vset.hg, vset.bits
    masks = hg.edge_masks
    out = [x for x in range(hg.n_vertices) if any(masks[i] & bits for i in hg.incidence(x))]
    return hg.vertices(out)


def vertex_erode_local(vset: VertexSet) -> VertexSet:
    hg, bits = vset.hg, vset.bits
    masks = hg.edge_masks
    out = [x for x in range(hg.n_vertices) if all(masks[i] & ~bits == 0 for i in hg.incidence(x))]
    return hg.vertices(out)


def edge_dilate_local(eset: EdgeSet) -> EdgeSet:
    hg = eset.hg
    masks = hg.edge_masks
    members = list(eset)
    out = [i for i in range(hg.n_edges) if any(masks[i] & masks[j] for j in members)]
    return hg.edges(out)


def edge_erode_local(eset: EdgeSet) -> EdgeSet:
    hg = eset.hg
    masks = hg.edge_masks
    others = [i for i in range(hg.n_edges) if i not in eset]
    out = [j for j in eset if all(not masks[j] & masks[i] for i in others)]
    return hg.edges(out)
