"""Reference implementations used only by the tests.

Each one computes its answer by a route that shares no code with the
package beyond the graph model itself.
"""
from itertools import combinations, product
from math import ceil, cos, pi

import networkx as nx
from hypothesis import strategies as st

from polyclar.grid import build_from_cells, cells_connected


def to_nx(g, vertices=None):
    G = nx.Graph()
    alive = set(range(g.n_vertices)) if vertices is None else set(vertices)
    G.add_nodes_from(alive)
    for e, (u, v) in enumerate(g.edges):
        if u in alive and v in alive:
            G.add_edge(u, v, eid=e)
    return G


def brute_perfect_matchings(g, vertices=None):
    """Edge subsets of size |V|/2 that cover every vertex."""
    alive = set(range(g.n_vertices)) if vertices is None else set(vertices)
    if len(alive) % 2:
        return []
    edges = [e for e, (u, v) in enumerate(g.edges) if u in alive and v in alive]
    out = []
    for combo in combinations(edges, len(alive) // 2):
        covered = set()
        for e in combo:
            covered.update(g.edges[e])
        if covered == alive:
            out.append(frozenset(combo))
    return out


def all_cycles(g):
    """Every simple cycle as a frozenset of edge ids, via networkx."""
    G = to_nx(g)
    out = set()
    for cyc in nx.simple_cycles(G):
        n = len(cyc)
        out.add(frozenset(G[cyc[i]][cyc[(i + 1) % n]]["eid"] for i in range(n)))
    return out


def cycle_alternates(g, matching_edges, cycle_edges):
    """Alternation test on an edge set: every cycle vertex meets exactly one
    matched cycle edge."""
    deg = {}
    for e in cycle_edges:
        if e in matching_edges:
            for v in g.edges[e]:
                deg[v] = deg.get(v, 0) + 1
    verts = {v for e in cycle_edges for v in g.edges[e]}
    return all(deg.get(v, 0) == 1 for v in verts)


def kasteleyn_grid_count(rows, cols):
    """Closed-form dimer count of the rows x cols grid graph (vertices)."""
    if rows * cols % 2:
        return 0
    total = 1.0
    for j in range(1, ceil(rows / 2) + 1):
        for k in range(1, ceil(cols / 2) + 1):
            total *= 4 * cos(pi * j / (rows + 1)) ** 2 + 4 * cos(pi * k / (cols + 1)) ** 2
    return round(total)


def bounding_box_polyominoes(n, mode="edge"):
    """Fixed polyominoes by brute force: every n-subset of every w x h box that
    touches all four sides of the box and is connected."""
    found = set()
    for w in range(1, n + 1):
        for h in range(1, n + 1):
            if w * h < n or (mode == "edge" and w + h - 1 > n):
                continue
            box = [(x, y) for y in range(h) for x in range(w)]
            for subset in combinations(box, n):
                xs = {x for x, _ in subset}
                ys = {y for _, y in subset}
                if 0 not in xs or w - 1 not in xs or 0 not in ys or h - 1 not in ys:
                    continue
                if cells_connected(subset, mode):
                    found.add(tuple(sorted(subset, key=lambda c: (c[1], c[0]))))
    return found


def rect(w, h):
    return build_from_cells([(x, y) for x in range(w) for y in range(h)])


def row(n):
    return build_from_cells([(x, 0) for x in range(n)])


@st.composite
def polyomino_cells(draw, max_cells=6, min_cells=1):
    """Random edge-connected cell set grown one neighbour at a time."""
    n = draw(st.integers(min_cells, max_cells))
    cells = [(0, 0)]
    while len(cells) < n:
        frontier = sorted(
            {(x + dx, y + dy) for x, y in cells for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))} - set(cells)
        )
        cells.append(draw(st.sampled_from(frontier)))
    return cells


@st.composite
def polyominoes(draw, max_cells=6, min_cells=1):
    return build_from_cells(draw(polyomino_cells(max_cells, min_cells)))


def cycle_node_lists(g):
    """Every simple cycle as an ordered vertex list, via networkx."""
    return [list(c) for c in nx.simple_cycles(to_nx(g))]


def weakly_elementary_by_definition(g):
    """Definitional check with shapely geometry and brute-force matchings."""
    from shapely.geometry import Point, Polygon

    matchings = brute_perfect_matchings(g)
    allowed = frozenset().union(*matchings) if matchings else frozenset()
    for cyc in cycle_node_lists(g):
        n = len(cyc)
        edges = frozenset(g.edge_id[(min(a, b), max(a, b))] for a, b in ((cyc[i], cyc[(i + 1) % n]) for i in range(n)))
        if not any(cycle_alternates(g, m, edges) for m in matchings):
            continue
        poly = Polygon([g.vertices[v] for v in cyc])
        inner = []
        for e in range(len(g.edges)):
            (x0, y0), (x1, y1) = g.edge_points(e)
            if e not in edges and poly.contains(Point((x0 + x1) / 2, (y0 + y1) / 2)):
                inner.append(e)
        if inner and not any(e in allowed and set(g.edges[e]) & set(cyc) for e in inner):
            return False
    return True
