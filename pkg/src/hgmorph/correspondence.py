"""The four vertex <-> hyperedge correspondence operators.

``vertex_dilate_from_edges`` and ``edge_erode_from_vertices`` form one
adjunction, ``vertex_erode_from_edges`` and ``edge_dilate_from_vertices`` the
other; within each lattice direction the pairs are complement-duals.
"""
from __future__ import annotations

from .hypergraph import EdgeSet, VertexSet
from .kernels import edges_meeting, edges_within, union_of_edges

__all__ = [
    "vertex_dilate_from_edges",
    "edge_erode_from_vertices",
    "vertex_erode_from_edges",
    "edge_dilate_from_vertices",
]


def vertex_dilate_from_edges(eset: EdgeSet) -> VertexSet:
    """All vertices lying on some member edge."""
    return VertexSet(eset.hg, union_of_edges(eset.hg, eset.bits))


def edge_erode_from_vertices(vset: VertexSet) -> EdgeSet:
    """All edges whose vertex set is contained in ``vset``."""
    return EdgeSet(vset.hg, edges_within(vset.hg, vset.bits))


def vertex_erode_from_edges(eset: EdgeSet) -> VertexSet:
    """Vertices that belong to no edge outside ``eset``.

    Isolated vertices always qualify.
    """
    hg = eset.hg
    outside = hg.full_edge_bits & ~eset.bits
    return VertexSet(hg, hg.full_vertex_bits & ~union_of_edges(hg, outside))


def edge_dilate_from_vertices(vset: VertexSet) -> EdgeSet:
    """All edges with at least one vertex in ``vset``."""
    return EdgeSet(vset.hg, edges_meeting(vset.hg, vset.bits))
