"""The Clar number as a 0/1 integer program, solved exactly.

Variables: one per square (face) and one per edge.  For every vertex v::

    sum(edges at v) + sum(squares containing v) == 1

and the objective maximizes the number of selected squares.  A 0/1 solution
is a resonant set together with a perfect matching of what is left, so the
optimum is the Clar number.  The LP relaxation is solved with the exact
rational simplex in :mod:`polyclar.simplex` and integrality is recovered by
depth-first branch and bound on face variables.

Text listing produced by :meth:`IntegerProgram.to_text`::

    maximize
      obj: f0 + f1 + ...
    subject to
      v<id>: <var> + <var> + ... = 1      (one line per vertex)
    binary
      <var> <var> ...
    end

Face variables are named ``f<square id>``, edge variables ``e<edge id>``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable, Optional

from . import simplex
from .errors import Infeasible, TheoremViolation
from .grid import PolyominoGraph
from .matching import perfect_matching


@dataclass(frozen=True)
class IntegerProgram:
    names: tuple[str, ...]
    n_faces: int
    rows: tuple[tuple[int, ...], ...]
    row_names: tuple[str, ...]
    faces: tuple[int, ...]  # square id of each face variable
    edges: tuple[int, ...]  # edge id of each edge variable

    @property
    def n_vars(self) -> int:
        return len(self.names)

    @property
    def face_vars(self) -> range:
        return range(self.n_faces)

    def objective(self, x) -> Fraction:
        return sum((Fraction(x[j]) for j in self.face_vars), Fraction(0))

    def residuals(self, x) -> list[Fraction]:
        return [sum((Fraction(x[j]) for j in row), Fraction(0)) - 1 for row in self.rows]

    def to_text(self) -> str:
        lines = ["maximize"]
        obj = " + ".join(self.names[: self.n_faces]) or "0"
        lines.append(f"  obj: {obj}")
        lines.append("subject to")
        for name, row in zip(self.row_names, self.rows):
            lines.append(f"  {name}: {' + '.join(self.names[j] for j in row)} = 1")
        lines.append("binary")
        lines.append("  " + " ".join(self.names))
        lines.append("end")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RationalLPSolution:
    values: tuple[Fraction, ...]
    objective: Fraction
    basis: tuple[str, ...]


@dataclass(frozen=True)
class IPSolution:
    optimum: int
    assignment: tuple[int, ...]
    faces: frozenset[int]  # selected square ids
    nodes: int


def build_clar_ip(
    g: PolyominoGraph,
    vertices: Optional[Iterable[int]] = None,
    edges: Optional[Iterable[int]] = None,
) -> IntegerProgram:
    """Clar program of ``g``, or of the subgraph given by ``vertices`` and
    ``edges``; a square takes part only if its four sides are all present."""
    vertices = sorted(range(g.n_vertices) if vertices is None else set(vertices))
    edges = sorted(range(len(g.edges)) if edges is None else set(edges))
    edge_set = set(edges)
    faces = [s for s, es in enumerate(g.square_edges) if edge_set.issuperset(es)]
    names = [f"f{s}" for s in faces] + [f"e{e}" for e in edges]
    col_face = {s: j for j, s in enumerate(faces)}
    col_edge = {e: len(faces) + j for j, e in enumerate(edges)}
    at_vertex: dict[int, list[int]] = {v: [] for v in vertices}
    for s in faces:
        for v in g.square_vertices[s]:
            at_vertex[v].append(col_face[s])
    for e in edges:
        for v in g.edges[e]:
            at_vertex[v].append(col_edge[e])
    rows = tuple(tuple(sorted(at_vertex[v])) for v in vertices)
    return IntegerProgram(
        names=tuple(names),
        n_faces=len(faces),
        rows=rows,
        row_names=tuple(f"v{v}" for v in vertices),
        faces=tuple(faces),
        edges=tuple(edges),
    )


def solve_lp_exact(ip: IntegerProgram, fixed: Optional[dict[int, int]] = None) -> RationalLPSolution:
    """Optimum of the continuous relaxation (variables in [0, 1]).

    Upper bounds are implied: every variable sits in some row with all
    coefficients 1 and right-hand side 1.  ``fixed`` pins variables to 0 or 1.
    """
    fixed = fixed or {}
    one = Fraction(1)
    rows = []
    rhs = []
    for row in ip.rows:
        rows.append({j: one for j in row})
        rhs.append(one - sum(fixed.get(j, 0) for j in row))
    cost = [one] * ip.n_faces + [Fraction(0)] * (ip.n_vars - ip.n_faces)
    allowed = [j for j in range(ip.n_vars) if j not in fixed]
    res = simplex.solve(rows, rhs, cost, allowed)
    values = list(res.x)
    for j, v in fixed.items():
        values[j] = Fraction(v)
    objective = sum(values[: ip.n_faces], Fraction(0))
    return RationalLPSolution(tuple(values), objective, tuple(ip.names[b] for b in res.basis))


def _most_fractional(ip: IntegerProgram, values) -> Optional[int]:
    half = Fraction(1, 2)
    best = None
    for j in ip.face_vars:
        v = values[j]
        if v.denominator != 1:
            score = abs(v - half)
            if best is None or score < best[0]:
                best = (score, j)
    return None if best is None else best[1]


def solve_ip(
    ip: IntegerProgram,
    g: Optional[PolyominoGraph] = None,
    root: Optional[RationalLPSolution] = None,
) -> IPSolution:
    """Exact integer optimum by depth-first branch and bound.

    The bound at each node is the exact LP value; the branching variable is
    the most fractional face variable (lowest id on ties), and the ``= 1``
    branch is explored first.  ``g`` is only needed to repair fractional edge
    values under integral faces, which a vertex solution should never show.
    ``root`` is an already solved relaxation of ``ip`` to reuse at the root.
    """
    best_val = -1
    best_x: Optional[tuple[int, ...]] = None
    nodes = 0
    stack: list[dict[int, int]] = [{}]
    while stack:
        fixed = stack.pop()
        nodes += 1
        try:
            lp = root if (root is not None and not fixed) else solve_lp_exact(ip, fixed)
        except Infeasible:
            continue
        if floor(lp.objective) <= best_val:
            continue
        j = _most_fractional(ip, lp.values)
        if j is not None:
            stack.append({**fixed, j: 0})
            stack.append({**fixed, j: 1})
            continue
        values = lp.values
        if any(v.denominator != 1 for v in values):
            values = _repair_edges(ip, values, g)
        best_val = int(lp.objective)
        best_x = tuple(int(v) for v in values)
    if best_x is None:
        raise Infeasible("no 0/1 point satisfies the vertex equalities")
    faces = frozenset(ip.faces[j] for j in ip.face_vars if best_x[j])
    return IPSolution(best_val, best_x, faces, nodes)


def _repair_edges(ip: IntegerProgram, values, g: Optional[PolyominoGraph]):
    if g is None:
        raise TheoremViolation("integral faces with fractional edges and no graph to repair them")
    faces = [ip.faces[j] for j in ip.face_vars if values[j] == 1]
    covered = g.vertices_of_squares(faces)
    rows_v = {int(name[1:]) for name in ip.row_names}
    rest = g.minus(set(range(g.n_vertices)) - (rows_v - covered))
    m = perfect_matching(rest)
    if m is None:
        raise TheoremViolation("selected faces leave no perfect matching")
    col = {e: ip.n_faces + k for k, e in enumerate(ip.edges)}
    out = [Fraction(1 if j < ip.n_faces and values[j] == 1 else 0) for j in range(ip.n_vars)]
    for e in m.edges:
        out[col[e]] = Fraction(1)
    return out


def clar_ip(g: PolyominoGraph) -> IPSolution:
    return solve_ip(build_clar_ip(g), g)
