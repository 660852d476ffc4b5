"""Immutable hypergraphs and the set handles bound to them.

Vertices and hyperedges are dense integer indices; labels (vertex names and
edge ids) only matter at the I/O boundary. Vertex and edge subsets are stored
as Python ints used as bitmasks, which keeps set algebra cheap and makes sets
hashable values.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .kernels import _bits_to_bool, _bool_to_bits, edges_within, union_of_edges

__all__ = [
    "HypergraphError",
    "BindingError",
    "CoverError",
    "Hypergraph",
    "VertexSet",
    "EdgeSet",
    "SubHypergraph",
    "build",
    "induced_by_vertices",
    "induced_by_edges",
    "is_subhypergraph",
    "complement_vertices",
    "complement_edges",
    "iter_bits",
]


class HypergraphError(ValueError):
    """Invalid hypergraph construction input."""


class BindingError(ValueError):
    """Sets bound to different hypergraphs were mixed."""


class CoverError(ValueError):
    """A (vertex set, edge set) pair violates the cover condition."""


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``bits`` in increasing order."""
    if bits.bit_length() > 4096:
        arr = _bits_to_bool(bits, bits.bit_length())
        yield from np.flatnonzero(arr).tolist()
        return
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def _check_label(label: str, what: str) -> None:
    if not label or label.startswith("#") or any(ch.isspace() for ch in label):
        raise HypergraphError(f"invalid {what} label {label!r}: must be a non-empty token without whitespace or a leading '#'")


class Hypergraph:
    """A vertex universe plus an indexed family of hyperedges.

    Edge membership is held in CSR form (``edge_ptr``/``edge_idx``) and its
    transpose (``vertex_ptr``/``vertex_idx``) is computed once at
    construction. Two distinct edge indices may carry the same vertex set, and
    empty edges are allowed (see :attr:`empty_edges`).
    """

    __slots__ = (
        "vertex_labels",
        "edge_ids",
        "edge_ptr",
        "edge_idx",
        "incidence_edge",
        "vertex_ptr",
        "vertex_idx",
        "_vertex_lookup",
        "_edge_lookup",
        "__dict__",
    )

    def __init__(
        self,
        vertex_labels: Sequence[str],
        edge_ids: Sequence[str],
        edge_ptr: np.ndarray,
        edge_idx: np.ndarray,
    ) -> None:
        n = len(vertex_labels)
        m = len(edge_ids)
        edge_ptr = np.ascontiguousarray(edge_ptr, dtype=np.int64)
        edge_idx = np.ascontiguousarray(edge_idx, dtype=np.int64)
        if edge_ptr.shape != (m + 1,) or edge_ptr[0] != 0 or edge_ptr[-1] != edge_idx.size:
            raise HypergraphError("edge_ptr does not describe edge_idx")
        sizes = np.diff(edge_ptr)
        if (sizes < 0).any():
            raise HypergraphError("edge_ptr must be non-decreasing")
        if edge_idx.size and (edge_idx.min() < 0 or edge_idx.max() >= n):
            raise HypergraphError("edge references a vertex outside the universe")
        incidence_edge = np.repeat(np.arange(m, dtype=np.int64), sizes)
        if edge_idx.size:
            # duplicate vertex inside one edge
            key = incidence_edge * max(n, 1) + edge_idx
            if np.unique(key).size != key.size:
                raise HypergraphError("an edge lists the same vertex twice")

        self.vertex_labels: tuple[str, ...] = tuple(vertex_labels)
        self.edge_ids: tuple[str, ...] = tuple(edge_ids)
        self._vertex_lookup = {label: i for i, label in enumerate(self.vertex_labels)}
        self._edge_lookup = {eid: i for i, eid in enumerate(self.edge_ids)}
        if len(self._vertex_lookup) != n:
            raise HypergraphError("duplicate vertex label")
        if len(self._edge_lookup) != m:
            raise HypergraphError("duplicate edge id")

        order = np.argsort(edge_idx, kind="stable")
        self.edge_ptr = edge_ptr
        self.edge_idx = edge_idx
        self.incidence_edge = incidence_edge
        self.vertex_idx = incidence_edge[order]
        self.vertex_ptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(edge_idx, minlength=n), out=self.vertex_ptr[1:])
        for arr in (self.edge_ptr, self.edge_idx, self.incidence_edge, self.vertex_ptr, self.vertex_idx):
            arr.flags.writeable = False

    # -- construction -----------------------------------------------------

    @classmethod
    def from_index_lists(
        cls,
        n_vertices: int,
        edges: Iterable[Iterable[int]],
        vertex_labels: Sequence[str] | None = None,
        edge_ids: Sequence[str] | None = None,
    ) -> Hypergraph:
        """Build from vertex indices; labels default to ``"0".."n-1"`` and ``"e0"..``."""
        edge_lists = [list(e) for e in edges]
        if vertex_labels is None:
            vertex_labels = [str(i) for i in range(n_vertices)]
        if edge_ids is None:
            edge_ids = [f"e{i}" for i in range(len(edge_lists))]
        if len(vertex_labels) != n_vertices:
            raise HypergraphError("vertex_labels length differs from n_vertices")
        if len(edge_ids) != len(edge_lists):
            raise HypergraphError("edge_ids length differs from the number of edges")
        for label in vertex_labels:
            _check_label(label, "vertex")
        for eid in edge_ids:
            _check_label(eid, "edge")
        ptr = np.zeros(len(edge_lists) + 1, dtype=np.int64)
        np.cumsum([len(e) for e in edge_lists], out=ptr[1:])
        flat = np.fromiter((x for e in edge_lists for x in e), dtype=np.int64, count=int(ptr[-1]))
        return cls(vertex_labels, edge_ids, ptr, flat)

    # -- sizes and lookups --------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_labels)

    @property
    def n_edges(self) -> int:
        return len(self.edge_ids)

    @property
    def n_incidences(self) -> int:
        return int(self.edge_idx.size)

    def vertex_index(self, label: str) -> int:
        try:
            return self._vertex_lookup[label]
        except KeyError:
            raise KeyError(f"unknown vertex {label!r}") from None

    def edge_index(self, eid: str) -> int:
        try:
            return self._edge_lookup[eid]
        except KeyError:
            raise KeyError(f"unknown edge {eid!r}") from None

    def edge_vertices(self, i: int) -> tuple[int, ...]:
        """Vertex indices of edge ``i`` in their construction order."""
        return tuple(self.edge_idx[self.edge_ptr[i] : self.edge_ptr[i + 1]].tolist())

    def incidence(self, x: int) -> tuple[int, ...]:
        """Indices of the edges containing vertex ``x``, increasing."""
        return tuple(self.vertex_idx[self.vertex_ptr[x] : self.vertex_ptr[x + 1]].tolist())

    @cached_property
    def empty_edges(self) -> tuple[int, ...]:
        """Indices of edges with no vertices. Accepted, but callers may want to know."""
        return tuple(np.flatnonzero(np.diff(self.edge_ptr) == 0).tolist())

    @cached_property
    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(np.flatnonzero(np.diff(self.vertex_ptr) == 0).tolist())

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        """Per-edge vertex bitmasks. Only sensible for small hypergraphs."""
        return tuple(sum(1 << x for x in self.edge_vertices(i)) for i in range(self.n_edges))

    @cached_property
    def full_vertex_bits(self) -> int:
        return (1 << self.n_vertices) - 1

    @cached_property
    def full_edge_bits(self) -> int:
        return (1 << self.n_edges) - 1

    # -- set handles --------------------------------------------------------

    def vertices(self, indices: Iterable[int] = ()) -> VertexSet:
        return VertexSet.from_indices(self, indices)

    def edges(self, indices: Iterable[int] = ()) -> EdgeSet:
        return EdgeSet.from_indices(self, indices)

    def vertices_by_label(self, labels: Iterable[str]) -> VertexSet:
        return VertexSet.from_indices(self, (self.vertex_index(str(label)) for label in labels))

    def edges_by_id(self, ids: Iterable[str]) -> EdgeSet:
        return EdgeSet.from_indices(self, (self.edge_index(str(eid)) for eid in ids))

    def all_vertices(self) -> VertexSet:
        return VertexSet(self, self.full_vertex_bits)

    def all_edges(self) -> EdgeSet:
        return EdgeSet(self, self.full_edge_bits)

    def whole(self) -> SubHypergraph:
        """The greatest element ``(H•, H×)`` of the subhypergraph lattice."""
        return SubHypergraph(self.all_vertices(), self.all_edges())

    def empty(self) -> SubHypergraph:
        return SubHypergraph(VertexSet(self, 0), EdgeSet(self, 0))

    def subhypergraph(self, vertex_labels: Iterable[str], edge_ids: Iterable[str]) -> SubHypergraph:
        return SubHypergraph(self.vertices_by_label(vertex_labels), self.edges_by_id(edge_ids))

    # -- value semantics ----------------------------------------------------

    def _key(self) -> tuple:
        return (self.vertex_labels, self.edge_ids, self.edge_ptr.tobytes(), self.edge_idx.tobytes())

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash((self.n_vertices, self.n_edges, self.n_incidences))

    def __repr__(self) -> str:
        return f"Hypergraph(|V|={self.n_vertices}, |E|={self.n_edges}, incidences={self.n_incidences})"

    def __reduce__(self):
        return (Hypergraph, (self.vertex_labels, self.edge_ids, np.array(self.edge_ptr), np.array(self.edge_idx)))


def build(
    vertex_labels: Iterable[object],
    edge_vertex_lists: Iterable[Iterable[object]],
    edge_ids: Iterable[object] | None = None,
) -> Hypergraph:
    """Build a hypergraph from vertex labels and per-edge lists of vertex labels.

    Labels are normalised with ``str``. Edge ``i`` is the ``i``-th list.

    >>> h = build(range(5), [[0, 1], [1, 2, 3], [3, 4]])
    >>> h.n_vertices, h.n_edges
    (5, 3)
    """
    labels = [str(v) for v in vertex_labels]
    lookup: dict[str, int] = {}
    for i, label in enumerate(labels):
        _check_label(label, "vertex")
        if label in lookup:
            raise HypergraphError(f"duplicate vertex label {label!r}")
        lookup[label] = i
    edges = []
    for pos, edge in enumerate(edge_vertex_lists):
        members = []
        for v in edge:
            key = str(v)
            if key not in lookup:
                raise HypergraphError(f"edge {pos} references unknown vertex {key!r}")
            members.append(lookup[key])
        if len(set(members)) != len(members):
            raise HypergraphError(f"edge {pos} lists a vertex twice")
        edges.append(members)
    ids = None if edge_ids is None else [str(e) for e in edge_ids]
    if ids is not None and len(set(ids)) != len(ids):
        raise HypergraphError("duplicate edge id")
    return Hypergraph.from_index_lists(len(labels), edges, labels, ids)


class _BoundSet:
    """Bitmask subset of one of a hypergraph's two universes."""

    __slots__ = ("hg", "bits")
    _universe = ""

    def __init__(self, hg: Hypergraph, bits: int = 0) -> None:
        if bits < 0 or bits > self._full(hg):
            raise ValueError(f"bits outside the {self._universe} universe")
        self.hg = hg
        self.bits = bits

    @staticmethod
    def _full(hg: Hypergraph) -> int:
        raise NotImplementedError

    @classmethod
    def _size(cls, hg: Hypergraph) -> int:
        raise NotImplementedError

    @classmethod
    def from_indices(cls, hg: Hypergraph, indices: Iterable[int]):
        bits = 0
        size = cls._size(hg)
        for i in indices:
            if not 0 <= i < size:
                raise IndexError(f"{cls._universe} index {i} out of range")
            bits |= 1 << i
        return cls(hg, bits)

    @classmethod
    def from_array(cls, hg: Hypergraph, mask: np.ndarray):
        return cls(hg, _bool_to_bits(np.asarray(mask, dtype=bool)))

    def to_array(self) -> np.ndarray:
        return _bits_to_bool(self.bits, self._size(self.hg))

    def _same(self, other: _BoundSet) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.hg is not self.hg and other.hg != self.hg:
            raise BindingError("sets are bound to different hypergraphs")

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and i >= 0 and bool(self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other):
        self._same(other)
        return type(self)(self.hg, self.bits | other.bits)

    def __and__(self, other):
        self._same(other)
        return type(self)(self.hg, self.bits & other.bits)

    def __sub__(self, other):
        self._same(other)
        return type(self)(self.hg, self.bits & ~other.bits)

    def __xor__(self, other):
        self._same(other)
        return type(self)(self.hg, self.bits ^ other.bits)

    def __invert__(self):
        return type(self)(self.hg, self._full(self.hg) & ~self.bits)

    def __le__(self, other) -> bool:
        self._same(other)
        return self.bits & ~other.bits == 0

    def __ge__(self, other) -> bool:
        return other <= self

    def __lt__(self, other) -> bool:
        return self <= other and self.bits != other.bits

    def __gt__(self, other) -> bool:
        return other < self

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.bits == other.bits and (self.hg is other.hg or self.hg == other.hg)

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.bits))

    def labels(self) -> list[str]:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}({{{', '.join(self.labels())}}})"


class VertexSet(_BoundSet):
    """A subset of the vertex universe of a bound hypergraph."""

    __slots__ = ()
    _universe = "vertex"

    @staticmethod
    def _full(hg: Hypergraph) -> int:
        return hg.full_vertex_bits

    @classmethod
    def _size(cls, hg: Hypergraph) -> int:
        return hg.n_vertices

    def labels(self) -> list[str]:
        return [self.hg.vertex_labels[i] for i in self]


class EdgeSet(_BoundSet):
    """A subset of the edge index range of a bound hypergraph."""

    __slots__ = ()
    _universe = "edge"

    @staticmethod
    def _full(hg: Hypergraph) -> int:
        return hg.full_edge_bits

    @classmethod
    def _size(cls, hg: Hypergraph) -> int:
        return hg.n_edges

    def labels(self) -> list[str]:
        return [self.hg.edge_ids[i] for i in self]


@dataclass(frozen=True)
class SubHypergraph:
    """A pair ``(X•, X×)`` with every member edge covered by ``X•``.

    The cover condition is checked on construction; :meth:`trusted` skips
    the check for operator outputs (asserted instead).
    """

    vset: VertexSet
    eset: EdgeSet

    def __post_init__(self) -> None:
        if not is_subhypergraph(self.vset, self.eset):
            raise CoverError(f"edges {self._uncovered()} are not covered by the vertex part")

    @classmethod
    def trusted(cls, vset: VertexSet, eset: EdgeSet) -> SubHypergraph:
        obj = object.__new__(cls)
        object.__setattr__(obj, "vset", vset)
        object.__setattr__(obj, "eset", eset)
        assert is_subhypergraph(vset, eset), "operator produced a pair violating the cover condition"
        return obj

    @property
    def hg(self) -> Hypergraph:
        return self.vset.hg

    def _uncovered(self) -> list[str]:
        bad = self.eset.bits & ~edges_within(self.hg, self.vset.bits)
        return [self.hg.edge_ids[i] for i in iter_bits(bad)]

    def __le__(self, other: SubHypergraph) -> bool:
        return self.vset <= other.vset and self.eset <= other.eset

    def __ge__(self, other: SubHypergraph) -> bool:
        return other <= self

    def __lt__(self, other: SubHypergraph) -> bool:
        return self <= other and self != other

    def __or__(self, other: SubHypergraph) -> SubHypergraph:
        return SubHypergraph.trusted(self.vset | other.vset, self.eset | other.eset)

    def __and__(self, other: SubHypergraph) -> SubHypergraph:
        return SubHypergraph.trusted(self.vset & other.vset, self.eset & other.eset)

    def __repr__(self) -> str:
        return f"SubHypergraph({{{', '.join(self.vset.labels())}}}, {{{', '.join(self.eset.labels())}}})"


def is_subhypergraph(vset: VertexSet, eset: EdgeSet) -> bool:
    """True iff every edge of ``eset`` has all its vertices in ``vset``."""
    if not isinstance(vset, VertexSet) or not isinstance(eset, EdgeSet):
        raise TypeError("expected a VertexSet and an EdgeSet")
    if vset.hg is not eset.hg and vset.hg != eset.hg:
        raise BindingError("vertex and edge parts are bound to different hypergraphs")
    return eset.bits & ~edges_within(vset.hg, vset.bits) == 0


def induced_by_vertices(vset: VertexSet) -> SubHypergraph:
    """Largest subhypergraph with vertex part ``vset``: keep edges inside it."""
    return SubHypergraph.trusted(vset, EdgeSet(vset.hg, edges_within(vset.hg, vset.bits)))


def induced_by_edges(eset: EdgeSet) -> SubHypergraph:
    """Smallest subhypergraph with edge part ``eset``: the union of its edges."""
    return SubHypergraph.trusted(VertexSet(eset.hg, union_of_edges(eset.hg, eset.bits)), eset)


def complement_vertices(vset: VertexSet) -> VertexSet:
    return ~vset


def complement_edges(eset: EdgeSet) -> EdgeSet:
    return ~eset
