"""Allowed and forbidden edges, elementary components, nice cycles and the
weakly-elementary property.

Interiors are decided on the lattice embedding.  A square lies inside a
cycle when a ray from its centre to the right crosses an odd number of the
cycle's vertical edges; with centres at half-integers this is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import config
from .errors import NoPerfectMatching, TooLarge
from .grid import PolyominoGraph, build_from_cells
from .matching import Cycle, cycle_from_walk, has_perfect_matching, has_unique_perfect_matching
from .resonance import maximum_resonant_sets


@dataclass(frozen=True)
class EdgeClassification:
    allowed: frozenset[int]
    forbidden: frozenset[int]

    @property
    def elementary(self) -> bool:
        return not self.forbidden


@dataclass(frozen=True)
class Component:
    vertices: frozenset[int]
    edges: frozenset[int]
    squares: frozenset[int]


@dataclass(frozen=True)
class ElementaryDecomposition:
    components: tuple[Component, ...]
    isolated: int


def classify_edges(g: PolyominoGraph) -> EdgeClassification:
    """An edge uv is allowed iff ``g - {u, v}`` has a perfect matching."""
    if not has_perfect_matching(g):
        raise NoPerfectMatching("edge classification needs a perfect matching")
    allowed = frozenset(e for e, (u, v) in enumerate(g.edges) if has_perfect_matching(g.minus((u, v))))
    return EdgeClassification(allowed, frozenset(range(len(g.edges))) - allowed)


def is_elementary(g: PolyominoGraph) -> bool:
    return has_perfect_matching(g) and classify_edges(g).elementary


def elementary_components(g: PolyominoGraph) -> ElementaryDecomposition:
    """Connected pieces left after deleting the forbidden edges."""
    allowed = classify_edges(g).allowed
    adj: dict[int, list[int]] = {v: [] for v in range(g.n_vertices)}
    for e in allowed:
        u, v = g.edges[e]
        adj[u].append(v)
        adj[v].append(u)
    seen: set[int] = set()
    comps = []
    isolated = 0
    for root in range(g.n_vertices):
        if root in seen:
            continue
        seen.add(root)
        todo, verts = [root], {root}
        while todo:
            u = todo.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    verts.add(w)
                    todo.append(w)
        if len(verts) == 1:
            isolated += 1
            continue
        edges = frozenset(e for e in allowed if g.edges[e][0] in verts)
        squares = frozenset(s for s, es in enumerate(g.square_edges) if edges.issuperset(es))
        comps.append(Component(frozenset(verts), edges, squares))
    return ElementaryDecomposition(tuple(comps), isolated)


def enumerate_cycles(g: PolyominoGraph, max_vertices: Optional[int] = None) -> list[Cycle]:
    """All simple cycles, each once, grown from their smallest vertex."""
    limit = config.max_cycle_vertices(max_vertices)
    if g.n_vertices > limit:
        raise TooLarge(f"{g.n_vertices} vertices exceeds the cycle-enumeration limit of {limit}")
    found = []
    for a in range(g.n_vertices):
        path = [a]
        on_path = {a}

        def grow(v):
            for w, _ in g.adj[v]:
                if w == a:
                    if len(path) >= 4 and path[1] < path[-1]:
                        found.append(cycle_from_walk(g, list(path)))
                elif w > a and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    grow(w)
                    path.pop()
                    on_path.discard(w)

        grow(a)
    return sorted(found, key=lambda c: (len(c), c.vertices))


def is_nice(g: PolyominoGraph, c: Cycle) -> bool:
    """Nice: the rest of the graph has a perfect matching (or is empty), so the
    cycle alternates under some perfect matching of g."""
    return has_perfect_matching(g.minus(c.vertices))


def nice_cycles(g: PolyominoGraph, max_vertices: Optional[int] = None) -> list[Cycle]:
    return [c for c in enumerate_cycles(g, max_vertices) if is_nice(g, c)]


def interior_squares(g: PolyominoGraph, c: Cycle) -> frozenset[int]:
    verticals: dict[int, list[int]] = {}
    for e in c.edges:
        (x0, y0), (x1, y1) = sorted(g.edge_points(e))
        if x0 == x1:
            verticals.setdefault(y0, []).append(x0)
    inside = []
    for s, (x, y) in enumerate(g.squares):
        if sum(1 for X in verticals.get(y, ()) if X > x) % 2:
            inside.append(s)
    return frozenset(inside)


def interior_edges(g: PolyominoGraph, c: Cycle) -> frozenset[int]:
    """Edges strictly inside the cycle (not on it)."""
    inside = interior_squares(g, c)
    return frozenset(
        e for e in range(len(g.edges)) if e not in c.edges and any(s in inside for s in g.edge_squares[e])
    )


def closed_interior(g: PolyominoGraph, c: Cycle) -> PolyominoGraph:
    """I[C]: the cycle together with everything inside it."""
    return build_from_cells([g.squares[s] for s in interior_squares(g, c)])


def is_weakly_elementary(g: PolyominoGraph, max_vertices: Optional[int] = None) -> bool:
    """Every nice cycle with an edge inside has an allowed inside edge that
    touches the cycle."""
    allowed = classify_edges(g).allowed
    for c in nice_cycles(g, max_vertices):
        inner = interior_edges(g, c)
        if not inner:
            continue
        on_cycle = set(c.vertices)
        if not any(e in allowed and on_cycle.intersection(g.edges[e]) for e in inner):
            return False
    return True


@dataclass(frozen=True)
class InteriorCheck:
    holds: bool
    cycles_checked: int
    failures: tuple[tuple, ...]  # interior cell tuples where uniqueness failed


def interior_uniqueness(g: PolyominoGraph, max_vertices: Optional[int] = None) -> InteriorCheck:
    """For every nice cycle C and every maximum resonant set K of I[C], check
    that I[C] - K has a unique perfect matching."""
    memo: dict[tuple, bool] = {}
    count = 0
    for c in nice_cycles(g, max_vertices):
        cells = tuple(sorted(g.squares[s] for s in interior_squares(g, c)))
        count += 1
        if cells in memo:
            continue
        inner = build_from_cells(cells)
        _, sets = maximum_resonant_sets(inner)
        memo[cells] = all(
            has_unique_perfect_matching(inner.minus(inner.vertices_of_squares(k))) for k in sets
        )
    failures = tuple(k for k, ok in memo.items() if not ok)
    return InteriorCheck(not failures, count, failures)
