"""Line-based text formats: LGF for graphs, LDF for drawings.

Both are whitespace-separated and ASCII; ``#`` starts a comment line and
blank lines are skipped. Serialization is canonical (vertices by
(level, id), edges lexicographic, levels ascending), so serializing
anything just parsed is byte-stable.
"""

from __future__ import annotations

from .model import Drawing, LevelGraph, ProperLevelGraph

LGF_HEADER = "LGF 1"
LDF_HEADER = "LDF 1"


class FormatError(ValueError):
    """Input text does not conform to the requested format."""


def _significant_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line.split()))
    return out


def _expect_header(lines, header):
    if not lines or " ".join(lines[0][1]) != header:
        raise FormatError(f"missing {header!r} header")
    return lines[1:]


def serialize_lgf(graph: LevelGraph | ProperLevelGraph) -> str:
    base = graph.base if isinstance(graph, ProperLevelGraph) else graph
    lines = [LGF_HEADER]
    for v, lvl in sorted(base.vertices, key=lambda p: (p[1], p[0])):
        lines.append(f"v {v} {lvl}")
    for a, b in sorted(base.edges):
        lines.append(f"e {a} {b}")
    return "\n".join(lines) + "\n"


def parse_lgf(text: str) -> LevelGraph:
    lines = _expect_header(_significant_lines(text), LGF_HEADER)
    vertices: list[tuple[str, int]] = []
    edges: list[tuple[str, str]] = []
    for lineno, fields in lines:
        kind = fields[0]
        if kind == "v":
            if len(fields) != 3:
                raise FormatError(f"line {lineno}: vertex line needs id and level")
            try:
                level = int(fields[2])
            except ValueError:
                raise FormatError(f"line {lineno}: level {fields[2]!r} is not an integer") from None
            vertices.append((fields[1], level))
        elif kind == "e":
            if len(fields) != 3:
                raise FormatError(f"line {lineno}: edge line needs two ids")
            edges.append((fields[1], fields[2]))
        else:
            raise FormatError(f"line {lineno}: unknown directive {kind!r}")
    return LevelGraph(tuple(vertices), tuple(edges))


def serialize_ldf(drawing: Drawing) -> str:
    lines = [LDF_HEADER]
    for lvl, seq in drawing.orders.items():
        lines.append("l " + " ".join((str(lvl), *seq)))
    return "\n".join(lines) + "\n"


def parse_ldf(text: str) -> Drawing:
    lines = _expect_header(_significant_lines(text), LDF_HEADER)
    orders: dict[int, tuple[str, ...]] = {}
    for lineno, fields in lines:
        if fields[0] != "l":
            raise FormatError(f"line {lineno}: unknown directive {fields[0]!r}")
        if len(fields) < 3:
            raise FormatError(f"line {lineno}: level line needs a level and at least one id")
        try:
            level = int(fields[1])
        except ValueError:
            raise FormatError(f"line {lineno}: level {fields[1]!r} is not an integer") from None
        if level in orders:
            raise FormatError(f"line {lineno}: duplicate level {level}")
        ids = tuple(fields[2:])
        if len(set(ids)) != len(ids):
            raise FormatError(f"line {lineno}: repeated id on level {level}")
        orders[level] = ids
    return Drawing(orders)
