"""Graphviz export as a bipartite vertex/edge incidence graph."""
from __future__ import annotations

from .hypergraph import Hypergraph, SubHypergraph

HIGHLIGHT = 'color="#c0392b", style=filled, fillcolor="#f5b7b1"'


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(hg: Hypergraph, highlight: SubHypergraph | None = None) -> str:
    """Vertices as circles, hyperedges as boxes, one arc per incidence.

    Members of ``highlight`` are filled. Output order follows vertex and edge
    indices, so it is deterministic.
    """
    if highlight is not None and highlight.hg is not hg and highlight.hg != hg:
        raise ValueError("highlight is bound to a different hypergraph")
    hv = set(highlight.vset) if highlight is not None else set()
    he = set(highlight.eset) if highlight is not None else set()
    lines = ["graph hypergraph {"]
    for x, label in enumerate(hg.vertex_labels):
        attrs = f"shape=circle, label={_quote(label)}"
        if x in hv:
            attrs += ", " + HIGHLIGHT
        lines.append(f"  v{x} [{attrs}];")
    for i, eid in enumerate(hg.edge_ids):
        attrs = f"shape=box, label={_quote(eid)}"
        if i in he:
            attrs += ", " + HIGHLIGHT
        lines.append(f"  e{i} [{attrs}];")
    for i in range(hg.n_edges):
        for x in hg.edge_vertices(i):
            lines.append(f"  e{i} -- v{x};")
    lines.append("}")
    return "\n".join(lines) + "\n"
