"""Static SVG drawings: squares, bold matched edges, shaded face sets."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DanglingReference
from .grid import PolyominoGraph
from .matching import Matching

MARGIN = 10
EDGE_WIDTH = 2


@dataclass(frozen=True)
class RenderSpec:
    graph: PolyominoGraph
    matching: Optional[Matching] = None
    faces: frozenset[int] = frozenset()
    scale: int = 40

    def __post_init__(self):
        object.__setattr__(self, "faces", frozenset(self.faces))


def _check(spec: RenderSpec) -> None:
    g = spec.graph
    if spec.matching is not None:
        if spec.matching.graph != g:
            raise DanglingReference("matching belongs to another graph")
        bad = [e for e in spec.matching.edges if not 0 <= e < len(g.edges)]
        if bad:
            raise DanglingReference(f"unknown edge ids {sorted(bad)}")
    bad = [s for s in spec.faces if not 0 <= s < len(g.squares)]
    if bad:
        raise DanglingReference(f"unknown square ids {sorted(bad)}")


def render_svg(spec: RenderSpec) -> str:
    _check(spec)
    g, k = spec.graph, spec.scale
    w = g.width * k + 2 * MARGIN
    h = g.height * k + 2 * MARGIN

    def px(x, y):
        # lattice origin is bottom-left; SVG grows downward
        return MARGIN + x * k, MARGIN + (g.height - y) * k

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
    ]
    for s, (x, y) in enumerate(g.squares):
        sx, sy = px(x, y + 1)
        if s in spec.faces:
            cls, fill = "square resonant", "#b0b0b0"
        elif s in g.hole_squares:
            cls, fill = "square hole", "none"
        else:
            cls, fill = "square", "#ffffff"
        out.append(f'<rect class="{cls}" x="{sx}" y="{sy}" width="{k}" height="{k}" fill="{fill}"/>')
    matched = spec.matching.edges if spec.matching is not None else frozenset()
    for e in range(len(g.edges)):
        (x1, y1), (x2, y2) = (px(*p) for p in g.edge_points(e))
        if e in matched:
            cls, width = "edge matched", 2 * EDGE_WIDTH
        else:
            cls, width = "edge", EDGE_WIDTH
        out.append(
            f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="#000000" stroke-width="{width}" stroke-linecap="round"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(g: PolyominoGraph, matching: Optional[Matching] = None, faces: Iterable[int] = (), scale: int = 40) -> str:
    return render_svg(RenderSpec(g, matching, frozenset(faces), scale))
