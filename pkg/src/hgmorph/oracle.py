"""Definitional reference implementations and exhaustive enumeration.

Nothing in here touches the bitmask kernels. The correspondence operators are
obtained literally by building induced hypergraphs over frozensets and
reading off (or complementing) one of their parts; every composed operator
and filter is then re-derived from those four. The results are converted back
to bound sets only at the boundary so they can be compared with the fast
implementations.
"""
from __future__ import annotations

from typing import Callable, Iterator

from .hypergraph import EdgeSet, Hypergraph, SubHypergraph, VertexSet

__all__ = [
    "MAX_ENUMERABLE",
    "EnumerationTooLarge",
    "check_enumerable",
    "induced_hypergraph_of_vertices",
    "induced_hypergraph_of_edges",
    "oracle_delta_v",
    "oracle_eps_v",
    "oracle_eps_e",
    "oracle_delta_e",
    "ORACLE_OPS",
    "enumerate_vertex_subsets",
    "enumerate_edge_subsets",
    "enumerate_subhypergraphs",
    "count_subhypergraphs",
]

MAX_ENUMERABLE = 20


class EnumerationTooLarge(ValueError):
    """The universe is too large for exhaustive enumeration."""


Pair = tuple[frozenset, frozenset]


def _edges(hg: Hypergraph) -> list[frozenset]:
    return [frozenset(hg.edge_vertices(i)) for i in range(hg.n_edges)]


def _universe(hg: Hypergraph) -> tuple[frozenset, frozenset]:
    return frozenset(range(hg.n_vertices)), frozenset(range(hg.n_edges))


def induced_hypergraph_of_vertices(hg: Hypergraph, xv: frozenset) -> Pair:
    """``(X•, {i | v(e_i) ⊆ X•})``."""
    return frozenset(xv), frozenset(i for i, e in enumerate(_edges(hg)) if e <= xv)


def induced_hypergraph_of_edges(hg: Hypergraph, xe: frozenset) -> Pair:
    """``(∪_{j ∈ J} v(e_j), J)``."""
    edges = _edges(hg)
    vertices: set[int] = set()
    for j in xe:
        vertices |= edges[j]
    return frozenset(vertices), frozenset(xe)


# frozenset-level correspondences ------------------------------------------


def _delta_v(hg: Hypergraph, xe: frozenset) -> frozenset:
    return induced_hypergraph_of_edges(hg, xe)[0]


def _eps_e(hg: Hypergraph, xv: frozenset) -> frozenset:
    return induced_hypergraph_of_vertices(hg, xv)[1]


def _eps_v(hg: Hypergraph, xe: frozenset) -> frozenset:
    all_v, all_e = _universe(hg)
    return all_v - induced_hypergraph_of_edges(hg, all_e - xe)[0]


def _delta_e(hg: Hypergraph, xv: frozenset) -> frozenset:
    all_v, all_e = _universe(hg)
    return all_e - induced_hypergraph_of_vertices(hg, all_v - xv)[1]


def _vs(x: VertexSet) -> frozenset:
    return frozenset(x)


def _es(x: EdgeSet) -> frozenset:
    return frozenset(x)


def oracle_delta_v(eset: EdgeSet) -> VertexSet:
    return eset.hg.vertices(_delta_v(eset.hg, _es(eset)))


def oracle_eps_v(eset: EdgeSet) -> VertexSet:
    return eset.hg.vertices(_eps_v(eset.hg, _es(eset)))


def oracle_eps_e(vset: VertexSet) -> EdgeSet:
    return vset.hg.edges(_eps_e(vset.hg, _vs(vset)))


def oracle_delta_e(vset: VertexSet) -> EdgeSet:
    return vset.hg.edges(_delta_e(vset.hg, _vs(vset)))


# compositions ---------------------------------------------------------------


def _compose(*steps: Callable[[Hypergraph, frozenset], frozenset]) -> Callable[[Hypergraph, frozenset], frozenset]:
    """Apply ``steps`` right to left, like mathematical composition."""

    def run(hg: Hypergraph, x: frozenset) -> frozenset:
        for step in reversed(steps):
            x = step(hg, x)
        return x

    return run


_V = {
    "vertex_dilate": _compose(_delta_v, _delta_e),
    "vertex_erode": _compose(_eps_v, _eps_e),
    "open_half_v": _compose(_delta_v, _eps_e),
    "close_half_v": _compose(_eps_v, _delta_e),
}
_V["open1_v"] = _compose(_V["vertex_dilate"], _V["vertex_erode"])
_V["close1_v"] = _compose(_V["vertex_erode"], _V["vertex_dilate"])

_E = {
    "edge_dilate": _compose(_delta_e, _delta_v),
    "edge_erode": _compose(_eps_e, _eps_v),
    "open_half_e": _compose(_delta_e, _eps_v),
    "close_half_e": _compose(_eps_e, _delta_v),
}
_E["open1_e"] = _compose(_E["edge_dilate"], _E["edge_erode"])
_E["close1_e"] = _compose(_E["edge_erode"], _E["edge_dilate"])


def _pairwise(fv, fe) -> Callable[[Hypergraph, Pair], Pair]:
    return lambda hg, x: (fv(hg, x[0]), fe(hg, x[1]))


_H = {
    "hg_dilate": _pairwise(_V["vertex_dilate"], _E["edge_dilate"]),
    "hg_erode": _pairwise(_V["vertex_erode"], _E["edge_erode"]),
    "hg_open_1": _pairwise(_V["open1_v"], _E["open1_e"]),
    "hg_close_1": _pairwise(_V["close1_v"], _E["close1_e"]),
    "hg_open_half": _pairwise(_V["open_half_v"], _E["open_half_e"]),
    "hg_close_half": _pairwise(_V["close_half_v"], _E["close_half_e"]),
}


def _power(op, hg: Hypergraph, x: Pair, times: int) -> Pair:
    # no fixed-point shortcut here on purpose
    for _ in range(times):
        x = op(hg, x)
    return x


def _granule_open(hg: Hypergraph, x: Pair, lam: int) -> Pair:
    i, j = divmod(lam, 2)
    x = _power(_H["hg_erode"], hg, x, i)
    x = _power(_H["hg_open_half"], hg, x, j)
    return _power(_H["hg_dilate"], hg, x, i)


def _granule_close(hg: Hypergraph, x: Pair, lam: int) -> Pair:
    i, j = divmod(lam, 2)
    x = _power(_H["hg_dilate"], hg, x, i)
    x = _power(_H["hg_close_half"], hg, x, j)
    return _power(_H["hg_erode"], hg, x, i)


def _asf(hg: Hypergraph, x: Pair, lam: int) -> Pair:
    if lam == 0:
        return x
    return _granule_open(hg, _granule_close(hg, _asf(hg, x, lam - 1), lam), lam)


def _wrap_v(f):
    return lambda x: x.hg.vertices(f(x.hg, _vs(x)))


def _wrap_e(f):
    return lambda x: x.hg.edges(f(x.hg, _es(x)))


def _wrap_h(f):
    def run(x: SubHypergraph, *args) -> SubHypergraph:
        v, e = f(x.hg, (_vs(x.vset), _es(x.eset)), *args)
        return SubHypergraph(x.hg.vertices(v), x.hg.edges(e))

    return run


ORACLE_OPS: dict[str, Callable] = {
    "vertex_dilate_from_edges": oracle_delta_v,
    "vertex_erode_from_edges": oracle_eps_v,
    "edge_erode_from_vertices": oracle_eps_e,
    "edge_dilate_from_vertices": oracle_delta_e,
    **{name: _wrap_v(f) for name, f in _V.items()},
    **{name: _wrap_e(f) for name, f in _E.items()},
    **{name: _wrap_h(f) for name, f in _H.items()},
    "granule_open": _wrap_h(_granule_open),
    "granule_close": _wrap_h(_granule_close),
    "asf": _wrap_h(_asf),
}
"""Reference operators keyed by the name of the fast function they mirror.

Subhypergraph-valued entries rebuild a checked :class:`SubHypergraph`, so an
oracle result that broke the cover condition would raise.
"""


# enumeration ------------------------------------------------------------------


def check_enumerable(hg: Hypergraph) -> None:
    """Raise :class:`EnumerationTooLarge` unless ``hg`` is small enough to exhaust."""
    if hg.n_vertices > MAX_ENUMERABLE or hg.n_edges > MAX_ENUMERABLE:
        raise EnumerationTooLarge(
            f"exhaustive enumeration needs |V| <= {MAX_ENUMERABLE} and |E| <= {MAX_ENUMERABLE}, "
            f"got {hg.n_vertices} and {hg.n_edges}"
        )


def enumerate_vertex_subsets(hg: Hypergraph) -> Iterator[VertexSet]:
    check_enumerable(hg)
    for bits in range(1 << hg.n_vertices):
        yield VertexSet(hg, bits)


def enumerate_edge_subsets(hg: Hypergraph) -> Iterator[EdgeSet]:
    check_enumerable(hg)
    for bits in range(1 << hg.n_edges):
        yield EdgeSet(hg, bits)


def _subsets(items: list[int]) -> Iterator[frozenset]:
    for mask in range(1 << len(items)):
        yield frozenset(items[k] for k in range(len(items)) if mask >> k & 1)


def enumerate_subhypergraphs(hg: Hypergraph) -> Iterator[SubHypergraph]:
    """Every pair satisfying the cover condition, grouped by edge part."""
    check_enumerable(hg)
    all_v = frozenset(range(hg.n_vertices))
    for xe in _subsets(list(range(hg.n_edges))):
        covered = induced_hypergraph_of_edges(hg, xe)[0]
        free = sorted(all_v - covered)
        for extra in _subsets(free):
            yield SubHypergraph(hg.vertices(covered | extra), hg.edges(xe))


def count_subhypergraphs(hg: Hypergraph) -> int:
    """Size of the subhypergraph lattice, by summing free-vertex choices per edge part."""
    check_enumerable(hg)
    return sum(
        2 ** (hg.n_vertices - len(induced_hypergraph_of_edges(hg, xe)[0]))
        for xe in _subsets(list(range(hg.n_edges)))
    )
