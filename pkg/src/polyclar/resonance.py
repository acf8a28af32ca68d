"""Resonant sets, alternating sets and the Clar number by exhaustive search.

A set of pairwise vertex-disjoint squares ``K`` is resonant exactly when
``g - V(K)`` has a perfect matching (or is empty): given such a matching N,
add one opposite pair of sides from every square of K and every square of K
alternates with respect to the result.  Conversely an M-resonant K leaves M
restricted to ``g - V(K)`` perfect.  The search below relies on this and never
looks for witnesses square by square.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import NoPerfectMatching
from .grid import PolyominoGraph
from .matching import (
    Matching,
    alternating_squares,
    has_perfect_matching,
    has_unique_perfect_matching,
    iter_perfect_matchings,
    perfect_matching,
)

RESONANT = "resonant-candidate"
ALTERNATING = "alternating-candidate"


@dataclass(frozen=True)
class FaceSet:
    squares: frozenset[int]
    kind: str = RESONANT
    witness: Optional[Matching] = field(default=None, compare=False, repr=False)

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.squares))

    def __len__(self):
        return len(self.squares)

    def to_json(self, g: PolyominoGraph) -> list:
        return [list(g.squares[s]) for s in self.key]


@dataclass(frozen=True)
class ClarResult:
    clar_number: int
    witness_sets: tuple[FaceSet, ...]
    backend: str = "exhaustive"


@dataclass(frozen=True)
class SetCheck:
    ok: bool
    reason: str = ""
    witness: Optional[Matching] = None

    def __bool__(self):
        return self.ok


def squares_disjoint(g: PolyominoGraph, squares: Iterable[int]) -> bool:
    seen: set[int] = set()
    for s in squares:
        vs = g.square_vertices[s]
        if seen.intersection(vs):
            return False
        seen.update(vs)
    return True


def extend_to_witness(g: PolyominoGraph, squares: Iterable[int], rest: Matching) -> Matching:
    """Add the two vertical sides of every square to a matching of the rest."""
    edges = set(rest.edges)
    for s in squares:
        _, r, _, l = g.square_edges[s]
        edges.update((r, l))
    return Matching(g, frozenset(edges))


def is_resonant_set(g: PolyominoGraph, k: Iterable[int]) -> SetCheck:
    k = frozenset(k)
    if not squares_disjoint(g, k):
        return SetCheck(False, "overlap")
    rest = perfect_matching(g.minus(g.vertices_of_squares(k)))
    if rest is None:
        return SetCheck(False, "no-matching")
    return SetCheck(True, witness=extend_to_witness(g, k, rest))


def is_alternating_set(g: PolyominoGraph, k: Iterable[int], max_vertices: Optional[int] = None) -> SetCheck:
    """Search the perfect matchings for one under which every square of k
    alternates."""
    k = frozenset(k)
    for m in iter_perfect_matchings(g, max_vertices):
        if k <= alternating_squares(g, m):
            return SetCheck(True, witness=m)
    return SetCheck(False, "no-matching")


def _require_matching(g: PolyominoGraph):
    if not has_perfect_matching(g):
        raise NoPerfectMatching("Clar number is undefined without a perfect matching")


def maximum_resonant_sets(g: PolyominoGraph) -> tuple[int, list[frozenset[int]]]:
    """Clar number and every maximum resonant set, by branch and bound.

    Squares are taken in id order.  A set that is not resonant has no
    resonant superset, so infeasible branches are cut at once.
    """
    _require_matching(g)
    n = len(g.squares)
    verts = g.square_vertices
    best = [0]
    winners: list[frozenset[int]] = [frozenset()]

    def rec(start: int, chosen: list[int], used: frozenset[int]):
        candidates = [s for s in range(start, n) if not used.intersection(verts[s])]
        if len(chosen) + len(candidates) < best[0]:
            return
        if not candidates:
            if len(chosen) > best[0]:
                best[0] = len(chosen)
                winners.clear()
            if len(chosen) == best[0]:
                winners.append(frozenset(chosen))
            return
        s = candidates[0]
        grown = used | frozenset(verts[s])
        if has_perfect_matching(g.minus(grown)):
            chosen.append(s)
            rec(s + 1, chosen, grown)
            chosen.pop()
        rec(s + 1, chosen, used)

    rec(0, [], frozenset())
    # maximal-but-not-maximum leaves are recorded before a larger set is found
    winners = sorted({w for w in winners if len(w) == best[0]}, key=lambda w: sorted(w))
    return best[0], winners


def clar_exhaustive(g: PolyominoGraph) -> ClarResult:
    value, sets = maximum_resonant_sets(g)
    faces = []
    for k in sets:
        rest = perfect_matching(g.minus(g.vertices_of_squares(k)))
        faces.append(FaceSet(k, RESONANT, extend_to_witness(g, k, rest)))
    return ClarResult(value, tuple(faces), "exhaustive")


def alternating_families(g: PolyominoGraph, max_vertices: Optional[int] = None) -> list[tuple[Matching, frozenset[int]]]:
    return [(m, alternating_squares(g, m)) for m in iter_perfect_matchings(g, max_vertices)]


def maximal_alternating_sets(g: PolyominoGraph, max_vertices: Optional[int] = None) -> list[FaceSet]:
    """Inclusion-maximal members of {A(M)}: A(M) is the set of M-alternating
    squares.  Any alternating set sits inside A(M) of its witness M, so these
    are exactly the maximal alternating sets."""
    family: dict[frozenset[int], Matching] = {}
    for m, a in alternating_families(g, max_vertices):
        family.setdefault(a, m)
    if not family:
        raise NoPerfectMatching("graph has no perfect matching")
    maximal = [a for a in family if not any(a < b for b in family)]
    maximal.sort(key=lambda a: sorted(a))
    return [FaceSet(a, ALTERNATING, family[a]) for a in maximal]


def verify_unique_after_deletion(g: PolyominoGraph, k: FaceSet | Iterable[int]) -> bool:
    squares = k.squares if isinstance(k, FaceSet) else frozenset(k)
    return has_unique_perfect_matching(g.minus(g.vertices_of_squares(squares)))
