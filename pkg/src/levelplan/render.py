"""Byte-deterministic SVG rendering of a drawing.

Vertex v sits at x = 40 * (position + 1), y = 60 * level. Dummy
vertices are drawn as small unlabeled dots; every crossing gets a marker
at the geometric intersection of its two segments.
"""

from __future__ import annotations

from .crossings import check_drawing, crossing_pairs
from .model import Drawing, ProperLevelGraph

X_STEP = 40
Y_STEP = 60


def _fmt(value: float) -> str:
    text = f"{value:.2f}"
    return text.rstrip("0").rstrip(".") if "." in text else text


def render_svg(graph: ProperLevelGraph, drawing: Drawing, *, label_dummies: bool = False) -> str:
    check_drawing(graph, drawing)
    pos = drawing.positions()
    levels = graph.level_map()

    def xy(v: str) -> tuple[int, int]:
        return X_STEP * (pos[v] + 1), Y_STEP * levels[v]

    max_width = max((len(seq) for seq in drawing.orders.values()), default=0)
    width = X_STEP * (max_width + 1)
    height = Y_STEP * (max(graph.levels(), default=0) + 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    for a, b in sorted(graph.edges):
        xa, ya = xy(a)
        xb, yb = xy(b)
        parts.append(
            f'<line x1="{xa}" y1="{ya}" x2="{xb}" y2="{yb}" stroke="black" stroke-width="1"/>'
        )
    for lvl in graph.levels():
        for v in drawing.orders[lvl]:
            x, y = xy(v)
            if graph.is_original(v):
                parts.append(
                    f'<circle cx="{x}" cy="{y}" r="10" fill="white" stroke="black"/>'
                )
                parts.append(
                    f'<text x="{x}" y="{y + 4}" font-size="10" text-anchor="middle">{v}</text>'
                )
            else:
                parts.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')
                if label_dummies:
                    parts.append(
                        f'<text x="{x}" y="{y - 6}" font-size="7" text-anchor="middle">{v}</text>'
                    )
    for e, f in crossing_pairs(graph, drawing):
        x, y = _intersection(xy(e[0]), xy(e[1]), xy(f[0]), xy(f[1]))
        parts.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="5" fill="red" fill-opacity="0.7"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _intersection(p1, p2, p3, p4) -> tuple[float, float]:
    # Both segments run between the same two horizontals, so a single
    # parameter places the intersection; crossing edges guarantee the
    # denominator is nonzero.
    (x1, y1), (x2, y2) = p1, p2
    (x3, _), (x4, _) = p3, p4
    t = (x3 - x1) / ((x2 - x1) - (x4 - x3))
    return x1 + t * (x2 - x1), y1 + t * (y2 - y1)
