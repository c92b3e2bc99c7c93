"""ASCII and SVG pictures of tilings, fault lines and paths."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Sequence

from .board import (
    FaultLine,
    GridPath,
    Orientation,
    PathVariant,
    Tiling,
    domino_labels,
    tiling_to_text,
)

SVG_NS = "http://www.w3.org/2000/svg"

PALETTE = {
    Orientation.HORIZONTAL: ("#f2c14e", "#a87d12"),
    Orientation.VERTICAL: ("#5b8fd6", "#25508f"),
}
FAULT_COLOUR = "#d1495b"
PATH_COLOUR = "#1b1b1b"
ARROW_COLOUR = "#7a7a7a"


@dataclass(frozen=True)
class RenderOptions:
    cell_size: int = 40
    show_fault_lines: bool = True
    show_path: bool = True
    show_orientations: bool = False
    variant: PathVariant = PathVariant.A

    def __post_init__(self):
        if self.cell_size < 8:
            raise ValueError("cell_size must be at least 8 pixels")

    @property
    def margin(self) -> int:
        return self.cell_size // 2


def render_ascii(t: Tiling, p: GridPath | None = None) -> str:
    """Letter grid; with a path, an interleaved vertex/cell grid.

    In the overlay, even text rows and columns hold lattice vertices
    (``+`` when on the path) and path edges (``-`` and ``|``); odd ones
    hold the domino letters.
    """
    if p is None:
        return tiling_to_text(t)
    rows, cols = t.dims.rows, t.dims.cols
    canvas = [[" "] * (2 * cols + 1) for _ in range(2 * rows + 1)]
    labels = domino_labels(t)
    for (r, c), i in t.owner.items():
        canvas[2 * (rows - 1 - r) + 1][2 * c + 1] = labels[i]
    for w in p.vertices:
        canvas[2 * (rows - w.y)][2 * w.x] = "+"
    for a, b in zip(p.vertices, p.vertices[1:]):
        if a.y == b.y:
            canvas[2 * (rows - a.y)][a.x + b.x] = "-"
        else:
            canvas[2 * rows - (a.y + b.y)][2 * a.x] = "|"
    return "".join("".join(line).rstrip() + "\n" for line in canvas)


def _fmt(v: float) -> str:
    return f"{v:g}"


def render_svg(
    t: Tiling,
    p: GridPath | None = None,
    faults: Sequence[FaultLine] | None = None,
    opts: RenderOptions | None = None,
) -> bytes:
    """SVG 1.1 document; identical inputs give identical bytes."""
    opts = opts or RenderOptions()
    rows, cols = t.dims.rows, t.dims.cols
    cs, m = opts.cell_size, opts.margin
    width, height = cols * cs + 2 * m, rows * cs + 2 * m

    def px(x: float, y: float) -> tuple[str, str]:
        return _fmt(m + x * cs), _fmt(m + (rows - y) * cs)

    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": str(width),
            "height": str(height),
            "viewBox": f"0 0 {width} {height}",
        },
    )
    board = ET.SubElement(root, "g", {"id": "dominoes"})
    inset = max(1, cs // 16)
    for d in t.dominoes:
        r, c = d.anchor
        w_cells, h_cells = (2, 1) if d.horizontal else (1, 2)
        x0, y0 = px(c, r + h_cells)
        fill, stroke = PALETTE[d.orientation]
        ET.SubElement(
            board,
            "rect",
            {
                "x": _fmt(float(x0) + inset),
                "y": _fmt(float(y0) + inset),
                "width": _fmt(w_cells * cs - 2 * inset),
                "height": _fmt(h_cells * cs - 2 * inset),
                "rx": _fmt(cs / 6),
                "fill": fill,
                "stroke": stroke,
            },
        )

    if opts.show_orientations:
        _draw_orientations(root, t, opts, px)

    if opts.show_fault_lines and faults:
        group = ET.SubElement(root, "g", {"id": "fault-lines"})
        for f in faults:
            if f.axis is Orientation.HORIZONTAL:
                (x1, y1), (x2, y2) = px(0, f.index), px(cols, f.index)
            else:
                (x1, y1), (x2, y2) = px(f.index, 0), px(f.index, rows)
            ET.SubElement(
                group,
                "line",
                {
                    "x1": x1, "y1": y1, "x2": x2, "y2": y2,
                    "stroke": FAULT_COLOUR,
                    "stroke-width": _fmt(max(2, cs / 12)),
                    "stroke-dasharray": f"{_fmt(cs / 4)} {_fmt(cs / 8)}",
                },
            )

    if opts.show_path and p is not None:
        points = " ".join(",".join(px(w.x, w.y)) for w in p.vertices)
        ET.SubElement(
            root,
            "polyline",
            {
                "id": "path",
                "points": points,
                "fill": "none",
                "stroke": PATH_COLOUR,
                "stroke-width": _fmt(max(2, cs / 10)),
                "stroke-linejoin": "round",
            },
        )
    return ET.tostring(root, encoding="utf-8", xml_declaration=True) + b"\n"


def _draw_orientations(root, t: Tiling, opts: RenderOptions, px) -> None:
    """One small arrowhead per lattice line showing its direction."""
    rows, cols = t.dims.rows, t.dims.cols
    size = opts.cell_size / 8
    group = ET.SubElement(root, "g", {"id": "orientations", "fill": ARROW_COLOUR})
    for x in range(cols + 1):
        sx, sy = (float(v) for v in px(x, rows / 2))
        d = -1 if PathVariant.northward(x) else 1  # screen y grows downward
        pts = [(sx, sy + d * size), (sx - size, sy - d * size), (sx + size, sy - d * size)]
        ET.SubElement(group, "polygon", {"points": " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in pts)})
    for y in range(rows + 1):
        sx, sy = (float(v) for v in px(cols / 2, y))
        d = 1 if opts.variant.eastward(y) else -1
        pts = [(sx + d * size, sy), (sx - d * size, sy - size), (sx - d * size, sy + size)]
        ET.SubElement(group, "polygon", {"points": " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in pts)})
