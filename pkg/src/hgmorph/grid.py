"""Grid hypergraphs for image-like experiments."""
from __future__ import annotations

import numpy as np

from .hypergraph import Hypergraph

EDGE_MODELS = ("cross4",)


def gen_grid(width: int, height: int, edge_model: str = "cross4") -> Hypergraph:
    """Pixels of a ``width x height`` grid as vertices, numbered row-major.

    ``cross4``: every interior pixel contributes one hyperedge made of its four
    axis neighbours (the pixel itself is not included), so each edge has
    exactly four vertices. Vertex labels are ``r<row>c<col>``, edge ids
    ``x<row>_<col>`` after the interior pixel.
    """
    if width < 1 or height < 1:
        raise ValueError("grid dimensions must be at least 1")
    if edge_model not in EDGE_MODELS:
        raise ValueError(f"unsupported edge model {edge_model!r}; choose from {', '.join(EDGE_MODELS)}")
    rows, cols = np.mgrid[1 : max(height - 1, 1), 1 : max(width - 1, 1)]
    rows, cols = rows.ravel(), cols.ravel()
    centre = rows * width + cols
    # up, left, right, down: keeps each edge's vertex list increasing
    members = np.stack([centre - width, centre - 1, centre + 1, centre + width], axis=1)
    ptr = np.arange(0, 4 * centre.size + 1, 4, dtype=np.int64)
    vertex_labels = [f"r{r}c{c}" for r in range(height) for c in range(width)]
    edge_ids = [f"x{r}_{c}" for r, c in zip(rows.tolist(), cols.tolist())]
    return Hypergraph(vertex_labels, edge_ids, ptr, members.ravel())

