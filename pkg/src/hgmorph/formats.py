"""Text formats for hypergraphs and subsets.

Hypergraph documents::

    # comments start with '#'
    hg v1
    vertex a
    vertex b
    edge e0 a b

Subset documents hold a ``vset`` line, an ``eset`` line, or both (in that
order) for a subhypergraph::

    vset a b
    eset e0
"""
from __future__ import annotations

from .hypergraph import EdgeSet, Hypergraph, HypergraphError, SubHypergraph, VertexSet, build

__all__ = [
    "FormatError",
    "parse_hypergraph",
    "serialize_hypergraph",
    "parse_subset",
    "serialize_subset",
]

HEADER = "hg v1"


class FormatError(ValueError):
    """Malformed document; ``line`` is 1-based, or 0 when not tied to a line."""

    def __init__(self, message: str, line: int = 0) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line.split()


def parse_hypergraph(text: str) -> Hypergraph:
    vertices: list[str] = []
    seen_vertices: set[str] = set()
    edge_ids: list[str] = []
    edge_lists: list[list[str]] = []
    seen_edges: set[str] = set()
    header_seen = False
    for number, tokens in _content_lines(text):
        if not header_seen:
            if tokens != HEADER.split():
                raise FormatError(f"expected header {HEADER!r}, got {' '.join(tokens)!r}", number)
            header_seen = True
            continue
        kind = tokens[0]
        if kind == "vertex":
            if len(tokens) != 2:
                raise FormatError("a vertex line takes exactly one label", number)
            if edge_ids:
                raise FormatError("vertex lines must precede edge lines", number)
            if tokens[1] in seen_vertices:
                raise FormatError(f"duplicate vertex label {tokens[1]!r}", number)
            seen_vertices.add(tokens[1])
            vertices.append(tokens[1])
        elif kind == "edge":
            if len(tokens) < 2:
                raise FormatError("an edge line needs an id", number)
            eid, members = tokens[1], tokens[2:]
            if eid in seen_edges:
                raise FormatError(f"duplicate edge id {eid!r}", number)
            for label in members:
                if label not in seen_vertices:
                    raise FormatError(f"edge {eid!r} references unknown vertex {label!r}", number)
            if len(set(members)) != len(members):
                raise FormatError(f"edge {eid!r} lists a vertex twice", number)
            seen_edges.add(eid)
            edge_ids.append(eid)
            edge_lists.append(members)
        else:
            raise FormatError(f"unknown record {kind!r}", number)
    if not header_seen:
        raise FormatError(f"missing header {HEADER!r}")
    try:
        return build(vertices, edge_lists, edge_ids)
    except HypergraphError as exc:
        raise FormatError(str(exc)) from exc


def serialize_hypergraph(hg: Hypergraph) -> str:
    lines = [HEADER]
    lines += [f"vertex {label}" for label in hg.vertex_labels]
    for i, eid in enumerate(hg.edge_ids):
        members = " ".join(hg.vertex_labels[x] for x in hg.edge_vertices(i))
        lines.append(f"edge {eid} {members}".rstrip())
    return "\n".join(lines) + "\n"


def parse_subset(text: str, hg: Hypergraph) -> VertexSet | EdgeSet | SubHypergraph:
    vset: VertexSet | None = None
    eset: EdgeSet | None = None
    for number, tokens in _content_lines(text):
        kind, labels = tokens[0], tokens[1:]
        try:
            if kind == "vset":
                if vset is not None or eset is not None:
                    raise FormatError("vset must be the first record and appear once", number)
                vset = hg.vertices_by_label(labels)
            elif kind == "eset":
                if eset is not None:
                    raise FormatError("eset may appear once", number)
                eset = hg.edges_by_id(labels)
            else:
                raise FormatError(f"unknown record {kind!r}", number)
        except KeyError as exc:
            raise FormatError(exc.args[0], number) from None
    if vset is not None and eset is not None:
        try:
            return SubHypergraph(vset, eset)
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    if vset is not None:
        return vset
    if eset is not None:
        return eset
    raise FormatError("empty subset document")


def serialize_subset(x: VertexSet | EdgeSet | SubHypergraph) -> str:
    if isinstance(x, SubHypergraph):
        return serialize_subset(x.vset) + serialize_subset(x.eset)
    kind = "vset" if isinstance(x, VertexSet) else "eset"
    return " ".join([kind, *x.labels()]) + "\n"
