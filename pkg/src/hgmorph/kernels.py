"""Bitmask kernels for the four vertex/edge correspondence maps.

Everything here works on raw int bitmasks. Two code paths exist: small
hypergraphs loop over cached per-edge masks, large ones go through numpy on
the CSR incidence arrays. Both are linear in ``|V| + |E| + sum |v(e)|`` (the
mask loop only because it is confined to small universes).
"""
from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .hypergraph import Hypergraph

# above either bound the numpy path is used
SMALL_VERTICES = 2048
SMALL_INCIDENCES = 4096


def _bits_to_bool(bits: int, n: int) -> np.ndarray:
    if n == 0:
        return np.zeros(0, dtype=bool)
    raw = np.frombuffer(bits.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, count=n, bitorder="little").view(bool)


def _bool_to_bits(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def is_small(hg: Hypergraph) -> bool:
    return hg.n_vertices <= SMALL_VERTICES and hg.n_incidences <= SMALL_INCIDENCES


# -- mask path ---------------------------------------------------------------


def _union_masks(masks: tuple[int, ...], ebits: int) -> int:
    acc = 0
    while ebits:
        low = ebits & -ebits
        acc |= masks[low.bit_length() - 1]
        ebits ^= low
    return acc


def _within_masks(masks: tuple[int, ...], outside: int) -> int:
    out = 0
    for i, mask in enumerate(masks):
        if not mask & outside:
            out |= 1 << i
    return out


def _meeting_masks(masks: tuple[int, ...], vbits: int) -> int:
    out = 0
    for i, mask in enumerate(masks):
        if mask & vbits:
            out |= 1 << i
    return out


# -- CSR path ----------------------------------------------------------------


def _union_csr(hg: Hypergraph, ebits: int) -> int:
    chosen = _bits_to_bool(ebits, hg.n_edges)
    out = np.zeros(hg.n_vertices, dtype=bool)
    out[hg.edge_idx[chosen[hg.incidence_edge]]] = True
    return _bool_to_bits(out)


def _within_csr(hg: Hypergraph, vbits: int) -> int:
    inside = _bits_to_bool(vbits, hg.n_vertices)
    misses = np.bincount(hg.incidence_edge[~inside[hg.edge_idx]], minlength=hg.n_edges)
    return _bool_to_bits(misses == 0)


def _meeting_csr(hg: Hypergraph, vbits: int) -> int:
    inside = _bits_to_bool(vbits, hg.n_vertices)
    hits = np.bincount(hg.incidence_edge[inside[hg.edge_idx]], minlength=hg.n_edges)
    return _bool_to_bits(hits > 0)


# -- dispatch ----------------------------------------------------------------


def union_of_edges(hg: Hypergraph, ebits: int, *, force_csr: bool = False) -> int:
    """Bits of ``∪_{i ∈ ebits} v(e_i)``."""
    if not force_csr and is_small(hg):
        return _union_masks(hg.edge_masks, ebits)
    return _union_csr(hg, ebits)


def edges_within(hg: Hypergraph, vbits: int, *, force_csr: bool = False) -> int:
    """Bits of the edges whose vertices all lie in ``vbits`` (empty edges included)."""
    if not force_csr and is_small(hg):
        return _within_masks(hg.edge_masks, hg.full_vertex_bits & ~vbits)
    return _within_csr(hg, vbits)


def edges_meeting(hg: Hypergraph, vbits: int, *, force_csr: bool = False) -> int:
    """Bits of the edges with at least one vertex in ``vbits``."""
    if not force_csr and is_small(hg):
        return _meeting_masks(hg.edge_masks, vbits)
    return _meeting_csr(hg, vbits)
