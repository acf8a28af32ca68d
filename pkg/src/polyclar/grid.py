"""Polyomino graphs built from unit cells of the square lattice.

A cell ``(x, y)`` is the unit square with lower-left corner ``(x, y)``; the
origin is bottom-left and ``y`` grows upward.  The graph has one vertex per
cell corner and one edge per cell side.  Its bounded faces are the cells plus
any *unit* hole (an absent cell whose four sides are all present); such a hole
is a square face of the graph and is listed among :attr:`PolyominoGraph.squares`.
Holes larger than one cell give a face that is not a unit square; the graph is
still built, but :attr:`PolyominoGraph.is_polyomino_graph` is ``False``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import BadCharacter, Disconnected, EmptyInput, NotSimple

Cell = tuple[int, int]
Point = tuple[int, int]

EDGE_MODE = "edge"
VERTEX_MODE = "vertex"
MODES = (EDGE_MODE, VERTEX_MODE)

_SIDE4 = ((1, 0), (-1, 0), (0, 1), (0, -1))
_KING8 = _SIDE4 + ((1, 1), (1, -1), (-1, 1), (-1, -1))


def _row_major(p: Point) -> tuple[int, int]:
    return (p[1], p[0])


def normalize_cells(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    """Translate so that min x = min y = 0 and sort row-major."""
    cells = {(int(x), int(y)) for x, y in cells}
    if not cells:
        raise EmptyInput("no cells given")
    mx = min(x for x, _ in cells)
    my = min(y for _, y in cells)
    return tuple(sorted(((x - mx, y - my) for x, y in cells), key=_row_major))


def _connected(cells: set[Cell], steps) -> bool:
    start = next(iter(cells))
    seen = {start}
    todo = [start]
    while todo:
        x, y = todo.pop()
        for dx, dy in steps:
            c = (x + dx, y + dy)
            if c in cells and c not in seen:
                seen.add(c)
                todo.append(c)
    return len(seen) == len(cells)


def cells_connected(cells: Iterable[Cell], mode: str = EDGE_MODE) -> bool:
    cells = set(cells)
    if not cells:
        return False
    return _connected(cells, _SIDE4 if mode == EDGE_MODE else _KING8)


class PolyominoGraph:
    """Immutable polyomino graph with dense, row-major integer ids.

    Vertex ids index :attr:`vertices`, edge ids index :attr:`edges` (pairs of
    vertex ids, smaller first) and square ids index :attr:`squares`.  Two
    graphs compare equal when their normalized cell sets agree.
    """

    def __init__(self, cells: Iterable[Cell], mode: str = EDGE_MODE):
        if mode not in MODES:
            raise ValueError(f"unknown connectivity mode {mode!r}")
        self.mode = mode
        self.cells: tuple[Cell, ...] = normalize_cells(cells)
        cell_set = set(self.cells)
        if not cells_connected(cell_set, mode):
            raise Disconnected(f"cells are not {mode}-connected")
        self.width = max(x for x, _ in self.cells) + 1
        self.height = max(y for _, y in self.cells) + 1

        outer, holes = self._classify_empty(cell_set)
        unit_holes = {h[0] for h in holes if len(h) == 1}
        self.non_square_faces = sum(1 for h in holes if len(h) > 1)
        self.squares: tuple[Cell, ...] = tuple(sorted(cell_set | unit_holes, key=_row_major))
        self.square_id = {c: i for i, c in enumerate(self.squares)}
        self.hole_squares = frozenset(self.square_id[c] for c in unit_holes)

        corners = set()
        for x, y in self.cells:
            corners.update(((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)))
        self.vertices: tuple[Point, ...] = tuple(sorted(corners, key=_row_major))
        self.vertex_id = {p: i for i, p in enumerate(self.vertices)}

        sides = set()
        for x, y in self.cells:
            for a, b in self._cell_sides(x, y):
                sides.add((self.vertex_id[a], self.vertex_id[b]))
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(sides))
        self.edge_id = {e: i for i, e in enumerate(self.edges)}

        self.square_vertices = tuple(
            tuple(self.vertex_id[p] for p in ((x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)))
            for x, y in self.squares
        )
        self.square_edges = tuple(
            tuple(self.edge_id[self._key(a, b)] for a, b in self._cell_sides(x, y))
            for x, y in self.squares
        )
        edge_squares: list[list[int]] = [[] for _ in self.edges]
        for s, es in enumerate(self.square_edges):
            for e in es:
                edge_squares[e].append(s)
        self.edge_squares = tuple(tuple(s) for s in edge_squares)

        adj: list[list[tuple[int, int]]] = [[] for _ in self.vertices]
        for e, (u, v) in enumerate(self.edges):
            adj[u].append((v, e))
            adj[v].append((u, e))
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self.color = tuple((x + y) % 2 for x, y in self.vertices)

        boundary = set()
        for e, (u, v) in enumerate(self.edges):
            if any(c in outer for c in self._cells_beside(self.vertices[u], self.vertices[v])):
                boundary.add(e)
        self.boundary_edges = frozenset(boundary)
        self.external_vertices = frozenset(w for e in boundary for w in self.edges[e])
        self.internal_squares = frozenset(
            s for s, vs in enumerate(self.square_vertices)
            if not any(v in self.external_vertices for v in vs)
        )

    # -- construction helpers -------------------------------------------

    @staticmethod
    def _cell_sides(x: int, y: int):
        # bottom, right, top, left
        return (
            ((x, y), (x + 1, y)),
            ((x + 1, y), (x + 1, y + 1)),
            ((x, y + 1), (x + 1, y + 1)),
            ((x, y), (x, y + 1)),
        )

    def _key(self, a: Point, b: Point) -> tuple[int, int]:
        u, v = self.vertex_id[a], self.vertex_id[b]
        return (u, v) if u < v else (v, u)

    @staticmethod
    def _cells_beside(a: Point, b: Point) -> tuple[Cell, Cell]:
        (x0, y0), (x1, y1) = sorted((a, b))
        if y0 == y1:
            return (x0, y0), (x0, y0 - 1)
        return (x0, y0), (x0 - 1, y0)

    def _classify_empty(self, cell_set: set[Cell]):
        """Split the empty lattice cells of the padded box into faces."""
        lo_x, lo_y, hi_x, hi_y = -1, -1, self.width, self.height
        empty = {
            (x, y)
            for x in range(lo_x, hi_x + 1)
            for y in range(lo_y, hi_y + 1)
            if (x, y) not in cell_set
        }
        comps = []
        seen: set[Cell] = set()
        for start in sorted(empty, key=_row_major):
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            queue = deque([start])
            while queue:
                x, y = queue.popleft()
                for dx, dy in _SIDE4:
                    c = (x + dx, y + dy)
                    if c in empty and c not in seen:
                        seen.add(c)
                        comp.append(c)
                        queue.append(c)
            comps.append(comp)
        outer = set(next(c for c in comps if (lo_x, lo_y) in c))
        holes = [c for c in comps if (lo_x, lo_y) not in c]
        return outer, holes

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, PolyominoGraph):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        return f"PolyominoGraph({len(self.cells)} cells, {len(self.vertices)} vertices, {len(self.edges)} edges)"

    # -- queries ----------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def is_polyomino_graph(self) -> bool:
        """False when some bounded face is not a unit square."""
        return self.non_square_faces == 0

    @cached_property
    def black(self) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.color) if c == 0)

    @cached_property
    def white(self) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.color) if c == 1)

    def edge_points(self, e: int) -> tuple[Point, Point]:
        u, v = self.edges[e]
        return self.vertices[u], self.vertices[v]

    def is_horizontal(self, e: int) -> bool:
        a, b = self.edge_points(e)
        return a[1] == b[1]

    def vertices_of_squares(self, squares: Iterable[int]) -> frozenset[int]:
        return frozenset(v for s in squares for v in self.square_vertices[s])

    def vertices_of_edges(self, edges: Iterable[int]) -> frozenset[int]:
        return frozenset(v for e in edges for v in self.edges[e])

    @cached_property
    def whole(self) -> "Subgraph":
        return Subgraph(self, frozenset(range(len(self.vertices))))

    def minus(self, vertices: Iterable[int]) -> "Subgraph":
        """Vertex-deleted subgraph ``g - vertices``."""
        return Subgraph(self, frozenset(range(len(self.vertices))) - frozenset(vertices))

    @cached_property
    def cut_vertices(self) -> frozenset[int]:
        n = len(self.vertices)
        cuts = set()
        for v in range(n):
            if n <= 2:
                break
            start = 0 if v != 0 else 1
            seen = {start, v}
            todo = [start]
            while todo:
                u = todo.pop()
                for w, _ in self.adj[u]:
                    if w not in seen:
                        seen.add(w)
                        todo.append(w)
            if len(seen) < n:
                cuts.add(v)
        return frozenset(cuts)

    @property
    def is_two_connected(self) -> bool:
        return len(self.vertices) >= 3 and not self.cut_vertices

    # -- serialization ----------------------------------------------------

    def to_ascii(self) -> str:
        rows = []
        cells = set(self.cells)
        for y in range(self.height - 1, -1, -1):
            rows.append("".join("#" if (x, y) in cells else "." for x in range(self.width)))
        return "\n".join(rows)

    def to_json(self) -> dict:
        return {"cells": [[x, y] for x, y in self.cells]}


@dataclass(frozen=True)
class Subgraph:
    """Vertex-induced subgraph of a :class:`PolyominoGraph`."""

    graph: PolyominoGraph
    vertices: frozenset[int]

    def neighbors(self, v: int) -> Iterator[tuple[int, int]]:
        alive = self.vertices
        for w, e in self.graph.adj[v]:
            if w in alive:
                yield w, e

    def minus(self, vertices: Iterable[int]) -> "Subgraph":
        return Subgraph(self.graph, self.vertices - frozenset(vertices))

    @property
    def edges(self) -> list[int]:
        alive = self.vertices
        return [e for e, (u, v) in enumerate(self.graph.edges) if u in alive and v in alive]

    def __len__(self):
        return len(self.vertices)


def build_from_cells(cells: Iterable[Cell], mode: str = EDGE_MODE) -> PolyominoGraph:
    return PolyominoGraph(cells, mode)


def parse_ascii(text: str, mode: str = EDGE_MODE) -> PolyominoGraph:
    """Parse rows of ``#``/``.`` (top row first) into a graph."""
    lines = [ln.rstrip() for ln in text.strip("\n").splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    while lines and not lines[0]:
        lines.pop(0)
    cells = []
    n_rows = len(lines)
    for r, line in enumerate(lines):
        for c, ch in enumerate(line):
            if ch == "#":
                cells.append((c, n_rows - 1 - r))
            elif ch != ".":
                raise BadCharacter(f"unexpected character {ch!r} at row {r}, column {c}")
    if not cells:
        raise EmptyInput("no '#' cells in input")
    return build_from_cells(cells, mode)


def parse_json(data, mode: str = EDGE_MODE) -> PolyominoGraph:
    if isinstance(data, str):
        import json

        data = json.loads(data)
    try:
        cells = [(int(x), int(y)) for x, y in data["cells"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise EmptyInput(f"expected {{'cells': [[x, y], ...]}}: {exc}") from None
    return build_from_cells(cells, mode)


def boundary_cycle(g: PolyominoGraph) -> list[int]:
    """Vertices of the outer face in counterclockwise order.

    The walk starts at the smallest vertex id and does not repeat it at the
    end.  Raises :class:`NotSimple` when the walk would revisit a vertex.
    """
    succ: dict[int, int] = {}
    for s, (x, y) in enumerate(g.squares):
        ring = g.square_vertices[s]  # bl, br, tr, tl: counterclockwise
        for e, a, b in zip(g.square_edges[s], ring, ring[1:] + ring[:1]):
            if e in g.boundary_edges:
                if a in succ:
                    raise NotSimple(f"boundary passes vertex {g.vertices[a]} twice")
                succ[a] = b
    start = min(succ)
    walk = [start]
    v = succ[start]
    while v != start:
        walk.append(v)
        v = succ[v]
    if len(walk) != len(succ):
        raise NotSimple("outer boundary is not a single closed walk")
    return walk
