"""Fixed polyominoes (distinct up to translation) by Redelmeier's method."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfRange
from .grid import EDGE_MODE, MODES, Cell, _KING8, _SIDE4, normalize_cells

MAX_CELLS = 10


@dataclass(frozen=True)
class GeneratorConfig:
    max_cells: int = 7
    connectivity_mode: str = EDGE_MODE
    dedup: str = "translation"


def generate_polyominoes(n: int, cfg: GeneratorConfig | None = None) -> list[tuple[Cell, ...]]:
    """Every fixed polyomino with exactly ``n`` cells, normalized and sorted.

    Cells are grown from an origin that is the lowest (then leftmost) cell,
    so only cells with ``y > 0`` or ``y == 0, x >= 0`` are ever added.  Each
    polyomino is reached exactly once, no dedup pass needed.
    """
    cfg = cfg or GeneratorConfig()
    if cfg.connectivity_mode not in MODES:
        raise ValueError(f"unknown connectivity mode {cfg.connectivity_mode!r}")
    limit = min(cfg.max_cells, MAX_CELLS)
    if not 1 <= n <= limit:
        raise OutOfRange(f"n must lie in 1..{limit}, got {n}")
    steps = _SIDE4 if cfg.connectivity_mode == EDGE_MODE else _KING8
    out: list[tuple[Cell, ...]] = []
    poly: list[Cell] = []

    def rec(untried: list[Cell], reached: set[Cell]):
        untried = list(untried)
        while untried:
            c = untried.pop()
            poly.append(c)
            if len(poly) == n:
                out.append(normalize_cells(poly))
            else:
                x, y = c
                fresh = []
                for dx, dy in steps:
                    nb = (x + dx, y + dy)
                    if (nb[1] > 0 or (nb[1] == 0 and nb[0] >= 0)) and nb not in reached:
                        fresh.append(nb)
                rec(untried + fresh, reached | set(fresh))
            poly.pop()

    rec([(0, 0)], {(0, 0)})
    out.sort()
    return out


def generate_up_to(n_max: int, cfg: GeneratorConfig | None = None) -> list[tuple[Cell, ...]]:
    out = []
    for n in range(1, n_max + 1):
        out.extend(generate_polyominoes(n, cfg))
    return out
