"""Two-phase primal simplex over exact rationals with Bland's rule.

Solves ``max c.x  s.t.  A x = b, x >= 0`` where every number is a
:class:`fractions.Fraction`.  Bland's rule (lowest-index entering column,
lowest-index leaving basic variable on ratio ties) rules out cycling.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import Infeasible, PolyclarError

ZERO = Fraction(0)
ONE = Fraction(1)


class Unbounded(PolyclarError):
    pass


@dataclass(frozen=True)
class LPResult:
    x: tuple[Fraction, ...]
    objective: Fraction
    basis: tuple[int, ...]
    pivots: int


def _pivot(T: list[list[Fraction]], r: int, c: int) -> None:
    row = T[r]
    p = row[c]
    if p != ONE:
        T[r] = row = [v / p if v else v for v in row]
    nz = [k for k, v in enumerate(row) if v]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                for k in nz:
                    other[k] -= f * row[k]


def _run(T, basis, cost, allowed) -> int:
    """Primal simplex on tableau ``T`` (last row holds reduced costs)."""
    m = len(T) - 1
    z = T[m]
    for j in range(len(z) - 1):
        z[j] = Fraction(cost[j])
    z[-1] = ZERO
    for i, b in enumerate(basis):
        cb = cost[b]
        if cb:
            z[:] = [a - cb * v if v else a for a, v in zip(z, T[i])]
    pivots = 0
    while True:
        in_basis = set(basis)
        entering = next((j for j in allowed if z[j] > 0 and j not in in_basis), -1)
        if entering < 0:
            return pivots
        leave = -1
        best = None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave < 0:
            raise Unbounded("objective is unbounded")
        _pivot(T, leave, entering)
        basis[leave] = entering
        pivots += 1


def solve(
    rows: Sequence[dict[int, Fraction]],
    rhs: Sequence[Fraction],
    cost: Sequence[Fraction],
    allowed: Sequence[int] | None = None,
) -> LPResult:
    """Maximize ``cost . x`` subject to ``rows . x == rhs`` and ``x >= 0``.

    ``rows`` holds sparse coefficient maps; columns outside ``allowed`` are
    pinned to zero.
    """
    n = len(cost)
    m = len(rows)
    allowed = list(range(n)) if allowed is None else sorted(allowed)
    allowed_set = set(allowed)

    T: list[list[Fraction]] = []
    for i, (row, b) in enumerate(zip(rows, rhs)):
        b = Fraction(b)
        sign = -1 if b < 0 else 1
        dense = [ZERO] * (n + m + 1)
        for j, a in row.items():
            if j in allowed_set:
                dense[j] = sign * Fraction(a)
        dense[n + i] = ONE
        dense[-1] = sign * b
        T.append(dense)
    basis = [n + i for i in range(m)]

    T.append([ZERO] * (n + m + 1))
    phase1_cost = [ZERO] * n + [-ONE] * m
    pivots = _run(T, basis, phase1_cost, allowed + [n + i for i in range(m)])
    T.pop()
    if any(T[i][-1] != 0 for i in range(m) if basis[i] >= n):
        raise Infeasible("no feasible point")

    # drive zero-level artificials out of the basis; drop redundant rows
    keep = []
    for i in range(len(T)):
        if basis[i] >= n:
            col = next((j for j in allowed if T[i][j] != 0 and j not in basis), None)
            if col is None:
                continue
            _pivot(T, i, col)
            basis[i] = col
            pivots += 1
        keep.append(i)
    T = [T[i][:n] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    T.append([ZERO] * (n + 1))

    pivots += _run(T, basis, [Fraction(c) for c in cost], allowed)
    T.pop()
    x = [ZERO] * n
    for i, b in enumerate(basis):
        x[b] = T[i][-1]
    objective = sum((Fraction(c) * v for c, v in zip(cost, x)), ZERO)
    return LPResult(tuple(x), objective, tuple(basis), pivots)
