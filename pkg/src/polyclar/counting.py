"""Exact perfect-matching (dimer) counts by broken-profile dynamic programming."""
from __future__ import annotations

from typing import Optional

from .config import DEFAULT_MAX_PROFILE
from .errors import TooWide
from .matching import GraphLike, as_subgraph


def count_perfect_matchings(h: GraphLike, max_profile: Optional[int] = None) -> int:
    """Number of perfect matchings of ``h`` as a Python int.

    Lattice vertices are swept column by column across the narrow side of the
    bounding box.  Bit ``j`` of the profile says whether the vertex in row
    ``j`` is already covered by an edge coming from the previous column (rows
    not yet visited in the current column) or will be covered from the
    current column (rows already visited).
    """
    sub = as_subgraph(h)
    if not sub.vertices:
        return 1
    g = sub.graph
    limit = DEFAULT_MAX_PROFILE if max_profile is None else max_profile
    if min(g.width, g.height) > limit:
        raise TooWide(f"narrow side is {min(g.width, g.height)} cells; limit is {limit}")

    if g.height <= g.width:
        n_major, n_minor = g.width, g.height

        def point(i, j):
            return (i, j)
    else:
        n_major, n_minor = g.height, g.width

        def point(i, j):
            return (j, i)

    alive = sub.vertices
    vid = g.vertex_id

    def vertex(i, j):
        v = vid.get(point(i, j))
        return v if v is not None and v in alive else None

    def linked(u, v):
        return u is not None and v is not None and (min(u, v), max(u, v)) in g.edge_id

    states = {0: 1}
    for i in range(n_major + 1):
        for j in range(n_minor + 1):
            v = vertex(i, j)
            right = vertex(i + 1, j)
            up = vertex(i, j + 1) if j < n_minor else None
            bit = 1 << j
            nxt: dict[int, int] = {}
            for mask, ways in states.items():
                if v is None or mask & bit:
                    key = mask & ~bit
                    nxt[key] = nxt.get(key, 0) + ways
                    continue
                if linked(v, right):
                    key = mask | bit
                    nxt[key] = nxt.get(key, 0) + ways
                if linked(v, up) and not mask & (bit << 1):
                    key = mask | (bit << 1)
                    nxt[key] = nxt.get(key, 0) + ways
            states = nxt
    return states.get(0, 0)
