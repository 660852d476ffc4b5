"""Mathematical morphology on hypergraphs.

Dilations, erosions, openings, closings, granulometries and alternating
sequential filters acting on vertex sets, hyperedge sets and subhypergraphs
of a fixed hypergraph.
"""
from .composed import edge_dilate, edge_erode, hg_dilate, hg_erode, iterate, vertex_dilate, vertex_erode
from .correspondence import (
    edge_dilate_from_vertices,
    edge_erode_from_vertices,
    vertex_dilate_from_edges,
    vertex_erode_from_edges,
)
from .filters import (
    GranulometryIndex,
    asf,
    close1_e,
    close1_v,
    close_half_e,
    close_half_v,
    granule_close,
    granule_open,
    hg_close_1,
    hg_close_half,
    hg_open_1,
    hg_open_half,
    open1_e,
    open1_v,
    open_half_e,
    open_half_v,
)
from .hypergraph import (
    BindingError,
    CoverError,
    EdgeSet,
    Hypergraph,
    HypergraphError,
    SubHypergraph,
    VertexSet,
    build,
    complement_edges,
    complement_vertices,
    induced_by_edges,
    induced_by_vertices,
    is_subhypergraph,
)

__version__ = "0.1.0"
