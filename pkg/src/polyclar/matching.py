"""Perfect matchings of polyomino graphs and their vertex-deleted subgraphs."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from . import config
from .errors import MismatchedGraphs, NoPerfectMatching, TooLarge
from .grid import PolyominoGraph, Subgraph

GraphLike = Union[PolyominoGraph, Subgraph]


def as_subgraph(h: GraphLike) -> Subgraph:
    return h.whole if isinstance(h, PolyominoGraph) else h


@dataclass(frozen=True)
class Matching:
    graph: PolyominoGraph = field(repr=False)
    edges: frozenset[int]

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.edges))

    @property
    def covered(self) -> frozenset[int]:
        return self.graph.vertices_of_edges(self.edges)

    def is_perfect(self, h: Optional[GraphLike] = None) -> bool:
        verts = as_subgraph(h).vertices if h is not None else range(self.graph.n_vertices)
        return self.covered == frozenset(verts) and 2 * len(self.edges) == len(self.covered)

    def mate(self) -> dict[int, int]:
        out = {}
        for e in self.edges:
            u, v = self.graph.edges[e]
            out[u] = v
            out[v] = u
        return out

    def flip(self, cycle: "AlternatingCycle") -> "Matching":
        return Matching(self.graph, self.edges ^ cycle.edges)

    def to_json(self) -> list:
        pts = sorted(tuple(sorted(self.graph.edge_points(e))) for e in self.edges)
        return [[list(a), list(b)] for a, b in pts]

    def __len__(self):
        return len(self.edges)

    def __lt__(self, other: "Matching"):
        return self.key < other.key


@dataclass(frozen=True)
class Cycle:
    """Simple cycle given by its vertices in order, smallest id first and the
    smaller neighbour second."""

    vertices: tuple[int, ...]
    edges: frozenset[int]
    witness: Optional[Matching] = field(default=None, compare=False, repr=False)

    def __len__(self):
        return len(self.vertices)


AlternatingCycle = Cycle


def cycle_from_walk(g: PolyominoGraph, walk: list[int], witness=None) -> Cycle:
    i = walk.index(min(walk))
    walk = walk[i:] + walk[:i]
    if len(walk) > 2 and walk[-1] < walk[1]:
        walk = walk[:1] + walk[1:][::-1]
    n = len(walk)
    edges = frozenset(
        g.edge_id[(min(a, b), max(a, b))] for a, b in ((walk[k], walk[(k + 1) % n]) for k in range(n))
    )
    return AlternatingCycle(tuple(walk), edges, witness)


def max_matching(h: GraphLike) -> Matching:
    """Maximum matching by Hopcroft-Karp (black side searches)."""
    sub = as_subgraph(h)
    g = sub.graph
    left = sorted(v for v in sub.vertices if g.color[v] == 0)
    nbrs = {u: [w for w, _ in sub.neighbors(u)] for u in left}
    pair_l: dict[int, int] = {}
    pair_r: dict[int, int] = {}
    inf = len(sub.vertices) + 1

    # greedy start
    for u in left:
        for w in nbrs[u]:
            if w not in pair_r:
                pair_l[u] = w
                pair_r[w] = u
                break

    while True:
        dist = {}
        queue = deque()
        for u in left:
            if u not in pair_l:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                x = pair_r.get(w)
                if x is None:
                    found = True
                elif x not in dist:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        if not found:
            break

        def augment(u) -> bool:
            # iterative DFS along the layered graph
            stack = [(u, iter(nbrs[u]))]
            path = []
            while stack:
                x, it = stack[-1]
                advanced = False
                for w in it:
                    y = pair_r.get(w)
                    if y is None:
                        path.append((x, w))
                        for a, b in path:
                            pair_l[a] = b
                            pair_r[b] = a
                        return True
                    if dist.get(y, inf) == dist[x] + 1:
                        path.append((x, w))
                        stack.append((y, iter(nbrs[y])))
                        advanced = True
                        break
                if not advanced:
                    dist[x] = inf
                    stack.pop()
                    if path:
                        path.pop()
            return False

        for u in left:
            if u not in pair_l:
                augment(u)

    edges = frozenset(g.edge_id[(min(u, w), max(u, w))] for u, w in pair_l.items())
    return Matching(g, edges)


def perfect_matching(h: GraphLike) -> Optional[Matching]:
    sub = as_subgraph(h)
    m = max_matching(sub)
    return m if 2 * len(m) == len(sub.vertices) else None


def has_perfect_matching(h: GraphLike) -> bool:
    sub = as_subgraph(h)
    if len(sub.vertices) % 2:
        return False
    return perfect_matching(sub) is not None


def _guard(sub: Subgraph, limit: Optional[int]):
    limit = config.max_vertices(limit)
    if len(sub.vertices) > limit:
        raise TooLarge(f"{len(sub.vertices)} vertices exceeds the limit of {limit}")


def iter_perfect_matchings(h: GraphLike, max_vertices: Optional[int] = None) -> Iterator[Matching]:
    """Yield every perfect matching once, always extending at the uncovered
    vertex of smallest id."""
    sub = as_subgraph(h)
    _guard(sub, max_vertices)
    g = sub.graph
    order = sorted(sub.vertices)
    local = {v: i for i, v in enumerate(order)}
    nbrs = [[(local[w], e) for w, e in sub.neighbors(v)] for v in order]
    n = len(order)
    full = (1 << n) - 1
    n_black = sum(1 for v in order if g.color[v] == 0)
    if 2 * n_black != n:
        return
    chosen: list[int] = []

    def rec(covered: int):
        if covered == full:
            yield Matching(g, frozenset(chosen))
            return
        low = (~covered & (covered + 1)).bit_length() - 1
        for j, e in nbrs[low]:
            if not covered >> j & 1:
                chosen.append(e)
                yield from rec(covered | (1 << low) | (1 << j))
                chosen.pop()

    yield from rec(0)


def enumerate_perfect_matchings(h: GraphLike, max_vertices: Optional[int] = None) -> list[Matching]:
    return list(iter_perfect_matchings(h, max_vertices))


def find_alternating_cycle(h: GraphLike, m: Matching) -> Optional[AlternatingCycle]:
    """Some m-alternating cycle inside ``h``, or None.

    Unmatched edges are directed black to white and matched edges white to
    black; alternating cycles are exactly the directed cycles.
    """
    sub = as_subgraph(h)
    g = sub.graph
    mate = m.mate()
    verts = sorted(sub.vertices)

    def out(v):
        if g.color[v] == 0:
            return [w for w, _ in sub.neighbors(v) if mate.get(v) != w]
        w = mate.get(v)
        return [w] if w is not None and w in sub.vertices else []

    state: dict[int, int] = {}  # 1 on stack, 2 finished
    for root in verts:
        if root in state:
            continue
        stack = [(root, iter(out(root)))]
        path = [root]
        state[root] = 1
        while stack:
            v, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                state[v] = 2
                stack.pop()
                path.pop()
            elif state.get(nxt) == 1:
                walk = path[path.index(nxt):]
                return cycle_from_walk(g, walk, m)
            elif nxt not in state:
                state[nxt] = 1
                stack.append((nxt, iter(out(nxt))))
                path.append(nxt)
    return None


def has_unique_perfect_matching(h: GraphLike) -> bool:
    """True iff ``h`` has exactly one perfect matching.

    The empty graph counts as having one (the empty matching).  Raises
    :class:`NoPerfectMatching` when there is none at all.
    """
    sub = as_subgraph(h)
    if not sub.vertices:
        return True
    m = perfect_matching(sub)
    if m is None:
        raise NoPerfectMatching("graph has no perfect matching")
    return find_alternating_cycle(sub, m) is None


def symmetric_difference_cycles(m1: Matching, m2: Matching) -> list[AlternatingCycle]:
    """The vertex-disjoint (m1, m2)-alternating cycles making up m1 xor m2."""
    if m1.graph != m2.graph:
        raise MismatchedGraphs("matchings belong to different graphs")
    g = m1.graph
    diff = m1.edges ^ m2.edges
    inc: dict[int, list[int]] = {}
    for e in diff:
        for v in g.edges[e]:
            inc.setdefault(v, []).append(e)
    cycles = []
    seen: set[int] = set()
    for start in sorted(inc):
        if start in seen:
            continue
        walk = [start]
        seen.add(start)
        prev_e = inc[start][0]
        v = next(w for w in g.edges[prev_e] if w != start)
        while v != start:
            walk.append(v)
            seen.add(v)
            prev_e = next(e for e in inc[v] if e != prev_e)
            v = next(w for w in g.edges[prev_e] if w != v)
        cycles.append(cycle_from_walk(g, walk))
    return sorted(cycles, key=lambda c: c.vertices)


def alternating_squares(g: PolyominoGraph, m: Matching) -> frozenset[int]:
    """Squares whose boundary 4-cycle is m-alternating."""
    out = []
    edges = m.edges
    for s, (b, r, t, l) in enumerate(g.square_edges):
        if (b in edges and t in edges) or (l in edges and r in edges):
            out.append(s)
    return frozenset(out)


def is_alternating_cycle(m: Matching, cycle: AlternatingCycle) -> bool:
    g = m.graph
    vs = cycle.vertices
    n = len(vs)
    if n < 4 or n % 2:
        return False
    flags = []
    for k in range(n):
        a, b = vs[k], vs[(k + 1) % n]
        e = g.edge_id.get((min(a, b), max(a, b)))
        if e is None:
            return False
        flags.append(e in m.edges)
    return all(flags[k] != flags[(k + 1) % n] for k in range(n))


def enumerate_alternating_cycles(
    g: PolyominoGraph, m: Matching, max_vertices: Optional[int] = None
) -> list[AlternatingCycle]:
    """Every simple m-alternating cycle of ``g`` exactly once.

    Each cycle is grown from its smallest vertex, leaving along the matched
    edge first, which fixes one traversal direction per cycle.
    """
    _guard(g.whole, max_vertices)
    mate = m.mate()
    found = []
    for a in range(g.n_vertices):
        b = mate[a]
        if b < a:
            continue
        path = [a, b]
        on_path = {a, b}

        def grow(v):
            # v was just reached along a matched edge
            for w, _ in g.adj[v]:
                if w == mate[v]:
                    continue
                if w == a:
                    if len(path) >= 4:
                        found.append(cycle_from_walk(g, list(path), m))
                    continue
                if w < a or w in on_path:
                    continue
                x = mate[w]
                if x < a or x in on_path:
                    continue
                path.extend((w, x))
                on_path.update((w, x))
                grow(x)
                path.pop()
                path.pop()
                on_path.discard(w)
                on_path.discard(x)

        grow(b)
    return sorted(found, key=lambda c: (len(c), c.vertices))
