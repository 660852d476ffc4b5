"""Render the main operators on a small cross4 grid as Graphviz files.

Writes one ``.dot`` file per operator into ``--out`` (default ``figures/``):
the input object, its dilation, erosion, opening, closing and ASF. Render
with ``dot -Kneato -Tpng``; the node positions follow the pixel grid.
"""
from __future__ import annotations

import argparse
from pathlib import Path

from hgmorph import asf, hg_dilate, hg_erode, hg_close_1, hg_open_1, induced_by_vertices
from hgmorph.dot import export_dot
from hgmorph.grid import gen_grid


def with_positions(dot: str, width: int) -> str:
    # pin vertex nodes to their pixel so neato draws a grid
    out = []
    for line in dot.splitlines():
        head = line.strip().split(" ", 1)[0]
        if head.startswith("v") and head[1:].isdigit() and "[" in line:
            r, c = divmod(int(head[1:]), width)
            line = line.replace("];", f', pos="{c},{-r}!"];')
        out.append(line)
    return "\n".join(out) + "\n"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=8)
    ap.add_argument("--out", type=Path, default=Path("figures"))
    args = ap.parse_args()

    n = args.size
    g = gen_grid(n, n)
    # a square object with one hole and one stray pixel
    square = {r * n + c for r in range(1, n - 2) for c in range(1, n - 2)}
    pixels = (square - {2 * n + 2}) | {(n - 1) * n + (n - 1)}
    x = induced_by_vertices(g.vertices(pixels))

    views = {
        "input": x,
        "dilation": hg_dilate(x),
        "erosion": hg_erode(x),
        "opening": hg_open_1(x),
        "closing": hg_close_1(x),
        "asf2": asf(x, 2),
    }
    args.out.mkdir(parents=True, exist_ok=True)
    for name, view in views.items():
        path = args.out / f"{name}.dot"
        path.write_text(with_positions(export_dot(g, view), n))
        print(f"{path}: |V|={len(view.vset)} |E|={len(view.eset)}")


if __name__ == "__main__":
    main()
