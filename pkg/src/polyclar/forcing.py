"""Forcing sets, forcing numbers and the alternating-cycle packing number.

Two routes are kept apart on purpose.  :func:`forcing_number` finds minimum
forcing sets by subset search; :func:`max_disjoint_alternating_cycles` packs
alternating cycles via an exact maximum independent set.  They meet only in
:class:`ForcingResult`, where their agreement is checked.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import NoPerfectMatching, NotSubset, TheoremViolation
from .grid import PolyominoGraph
from .matching import (
    Cycle,
    Matching,
    enumerate_alternating_cycles,
    has_unique_perfect_matching,
    iter_perfect_matchings,
)


@dataclass(frozen=True)
class ForcingResult:
    matching: Matching
    forcing_number: int
    min_forcing_sets: tuple[frozenset[int], ...]
    c_value: int
    disjoint_cycle_witness: tuple[Cycle, ...]

    @property
    def minimax_holds(self) -> bool:
        return self.forcing_number == self.c_value

    def to_json(self) -> dict:
        g = self.matching.graph

        def pairs(edges):
            return sorted([list(p) for p in sorted(g.edge_points(e))] for e in edges)

        return {
            "matching": self.matching.to_json(),
            "forcing_number": self.forcing_number,
            "c": self.c_value,
            "min_forcing_sets": [pairs(s) for s in self.min_forcing_sets],
            "disjoint_cycles": [[list(g.vertices[v]) for v in c.vertices] for c in self.disjoint_cycle_witness],
        }


def is_forcing_set(g: PolyominoGraph, m: Matching, s: Iterable[int]) -> bool:
    s = frozenset(s)
    if not s <= m.edges:
        raise NotSubset("forcing set candidates must be edges of the matching")
    return has_unique_perfect_matching(g.minus(g.vertices_of_edges(s)))


def max_independent_set(conflicts: list[int]) -> list[int]:
    """Exact maximum independent set; ``conflicts[i]`` is the neighbour
    bitmask of node i.

    Branch and bound; the bound greedily covers the candidates with cliques,
    each of which can contribute at most one node.
    """
    n = len(conflicts)
    best: list[int] = []

    def clique_cover(cands: int) -> int:
        classes: list[int] = []
        rest = cands
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            for k, cls in enumerate(classes):
                if cls & ~conflicts[v] == 0:
                    classes[k] = cls | low
                    break
            else:
                classes.append(low)
        return len(classes)

    def rec(chosen: list[int], cands: int):
        nonlocal best
        if not cands:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + clique_cover(cands) <= len(best):
            return
        low = cands & -cands
        v = low.bit_length() - 1
        chosen.append(v)
        rec(chosen, cands & ~conflicts[v] & ~low)
        chosen.pop()
        rec(chosen, cands & ~low)

    rec([], (1 << n) - 1)
    return best


def max_disjoint_alternating_cycles(
    g: PolyominoGraph, m: Matching, max_vertices: Optional[int] = None
) -> tuple[int, tuple[Cycle, ...]]:
    """c(M): the largest number of pairwise vertex-disjoint m-alternating cycles."""
    cycles = enumerate_alternating_cycles(g, m, max_vertices)
    masks = [sum(1 << v for v in c.vertices) for c in cycles]
    conflicts = [
        sum(1 << j for j in range(len(cycles)) if j != i and masks[i] & masks[j]) for i in range(len(cycles))
    ]
    chosen = max_independent_set(conflicts)
    return len(chosen), tuple(cycles[i] for i in sorted(chosen))


def _forcing_sets_of_size(g, m, edges, k, first_only):
    out = []
    for combo in combinations(edges, k):
        if is_forcing_set(g, m, combo):
            out.append(frozenset(combo))
            if first_only:
                break
    return out


def forcing_number(
    g: PolyominoGraph,
    m: Matching,
    lower_bound: Optional[int] = None,
    all_sets: bool = True,
    strict: bool = False,
    max_vertices: Optional[int] = None,
) -> ForcingResult:
    """Minimum forcing sets of ``m`` by increasing-size subset search.

    The search starts at ``lower_bound`` (default: the independently computed
    c(M)).  Once a level with forcing sets is found, the level below is also
    searched; since supersets of forcing sets are forcing, an empty level
    below certifies the minimum without trusting the starting point.  With
    ``strict`` a disagreement between f and c(M) raises TheoremViolation.
    """
    if not m.is_perfect():
        raise NoPerfectMatching("forcing number needs a perfect matching")
    c_value, witness = max_disjoint_alternating_cycles(g, m, max_vertices)
    edges = sorted(m.edges)
    level = c_value if lower_bound is None else lower_bound
    level = max(0, min(level, len(edges)))
    found = _forcing_sets_of_size(g, m, edges, level, not all_sets)
    while not found:
        level += 1
        found = _forcing_sets_of_size(g, m, edges, level, not all_sets)
    while level > 0:
        below = _forcing_sets_of_size(g, m, edges, level - 1, not all_sets)
        if not below:
            break
        level -= 1
        found = below
    found.sort(key=lambda s: sorted(s))
    result = ForcingResult(m, level, tuple(found), c_value, witness)
    if strict and not result.minimax_holds:
        raise TheoremViolation(f"f(G,M)={level} but c(M)={c_value}")
    return result


@dataclass(frozen=True)
class MaxForcing:
    value: int
    witness: ForcingResult
    per_matching: tuple[ForcingResult, ...]


def max_forcing_number(g: PolyominoGraph, max_vertices: Optional[int] = None) -> MaxForcing:
    """F(G) by brute force over all perfect matchings.

    Among maximizers the witness is the matching with the smallest sorted
    edge-id tuple, so the answer does not depend on enumeration order.
    """
    results = [forcing_number(g, m, max_vertices=max_vertices) for m in iter_perfect_matchings(g, max_vertices)]
    if not results:
        raise NoPerfectMatching("graph has no perfect matching")
    value = max(r.forcing_number for r in results)
    witness = min((r for r in results if r.forcing_number == value), key=lambda r: r.matching.key)
    return MaxForcing(value, witness, tuple(results))


def max_forcing_via_clar(g: PolyominoGraph) -> int:
    """F(G) as the sum of Clar numbers of the elementary components, each
    solved with the integer program."""
    from .clar_ip import build_clar_ip, solve_ip
    from .structure import elementary_components

    total = 0
    for comp in elementary_components(g).components:
        ip = build_clar_ip(g, comp.vertices, comp.edges)
        total += solve_ip(ip, g).optimum
    return total
