"""Openings, closings, granulometries and alternating sequential filters.

Naming follows the lattice the operator acts on: ``_v`` on vertex sets,
``_e`` on edge sets and ``hg_`` on subhypergraphs. "half" operators cross
the vertex/edge correspondence only once.
"""
from __future__ import annotations

from dataclasses import dataclass

from .composed import edge_dilate, edge_erode, hg_dilate, hg_erode, iterate, vertex_dilate, vertex_erode
from .correspondence import (
    edge_dilate_from_vertices,
    edge_erode_from_vertices,
    vertex_dilate_from_edges,
    vertex_erode_from_edges,
)
from .hypergraph import EdgeSet, SubHypergraph, VertexSet

__all__ = [
    "GranulometryIndex",
    "open1_v",
    "close1_v",
    "open1_e",
    "close1_e",
    "open_half_v",
    "close_half_v",
    "open_half_e",
    "close_half_e",
    "hg_open_1",
    "hg_close_1",
    "hg_open_half",
    "hg_close_half",
    "granule_open",
    "granule_close",
    "asf",
    "open_half_v_local",
    "close_half_e_local",
]


def open1_v(vset: VertexSet) -> VertexSet:
    return vertex_dilate(vertex_erode(vset))


def close1_v(vset: VertexSet) -> VertexSet:
    return vertex_erode(vertex_dilate(vset))


def open1_e(eset: EdgeSet) -> EdgeSet:
    return edge_dilate(edge_erode(eset))


def close1_e(eset: EdgeSet) -> EdgeSet:
    return edge_erode(edge_dilate(eset))


def open_half_v(vset: VertexSet) -> VertexSet:
    """Union of all edges contained in ``vset``."""
    return vertex_dilate_from_edges(edge_erode_from_vertices(vset))


def close_half_v(vset: VertexSet) -> VertexSet:
    return vertex_erode_from_edges(edge_dilate_from_vertices(vset))


def open_half_e(eset: EdgeSet) -> EdgeSet:
    return edge_dilate_from_vertices(vertex_erode_from_edges(eset))


def close_half_e(eset: EdgeSet) -> EdgeSet:
    """All edges covered by the union of the member edges."""
    return edge_erode_from_vertices(vertex_dilate_from_edges(eset))


def hg_open_1(x: SubHypergraph) -> SubHypergraph:
    return SubHypergraph.trusted(open1_v(x.vset), open1_e(x.eset))


def hg_close_1(x: SubHypergraph) -> SubHypergraph:
    return SubHypergraph.trusted(close1_v(x.vset), close1_e(x.eset))


def hg_open_half(x: SubHypergraph) -> SubHypergraph:
    return SubHypergraph.trusted(open_half_v(x.vset), open_half_e(x.eset))


def hg_close_half(x: SubHypergraph) -> SubHypergraph:
    return SubHypergraph.trusted(close_half_v(x.vset), close_half_e(x.eset))


@dataclass(frozen=True)
class GranulometryIndex:
    """Size parameter counted in half steps: ``lam = 2 * full + half``."""

    lam: int

    def __post_init__(self) -> None:
        if not isinstance(self.lam, int) or self.lam < 0:
            raise ValueError(f"granulometry index must be a non-negative integer, got {self.lam!r}")

    @property
    def full(self) -> int:
        return self.lam // 2

    @property
    def half(self) -> int:
        return self.lam % 2


def _index(lam: int | GranulometryIndex) -> GranulometryIndex:
    return lam if isinstance(lam, GranulometryIndex) else GranulometryIndex(lam)


def granule_open(x: SubHypergraph, lam: int | GranulometryIndex) -> SubHypergraph:
    """Opening of size ``lam / 2``: erode ``lam // 2`` times, half-open if ``lam`` is odd, dilate back."""
    idx = _index(lam)
    y = iterate(hg_erode, idx.full)(x)
    if idx.half:
        y = hg_open_half(y)
    return iterate(hg_dilate, idx.full)(y)


def granule_close(x: SubHypergraph, lam: int | GranulometryIndex) -> SubHypergraph:
    """Closing of size ``lam / 2``, the adjoint mirror of :func:`granule_open`."""
    idx = _index(lam)
    y = iterate(hg_dilate, idx.full)(x)
    if idx.half:
        y = hg_close_half(y)
    return iterate(hg_erode, idx.full)(y)


def asf(x: SubHypergraph, lam: int | GranulometryIndex) -> SubHypergraph:
    """Alternating sequential filter: close then open at sizes 1/2, 1, ..., lam/2."""
    top = _index(lam).lam
    for k in range(1, top + 1):
        x = granule_open(granule_close(x, k), k)
    return x


# -- pointwise characterisations --------------------------------------------


def open_half_v_local(vset: VertexSet) -> VertexSet:
    """Vertices of ``vset`` lying on some edge contained in ``vset``."""
    hg, bits = vset.hg, vset.bits
    masks = hg.edge_masks
    return hg.vertices(x for x in vset if any(masks[i] & ~bits == 0 for i in hg.incidence(x)))


def close_half_e_local(eset: EdgeSet) -> EdgeSet:
    hg = eset.hg
    masks = hg.edge_masks
    covered = 0
    for j in eset:
        covered |= masks[j]
    return hg.edges(i for i in range(hg.n_edges) if masks[i] & ~covered == 0)
