"""Exact matching theory on polyomino graphs: perfect matchings, resonant and
alternating sets, Clar numbers, forcing numbers."""

__version__ = "0.1.0"

from .clar_ip import IntegerProgram, build_clar_ip, solve_ip, solve_lp_exact
from .counting import count_perfect_matchings
from .forcing import (
    ForcingResult,
    forcing_number,
    is_forcing_set,
    max_disjoint_alternating_cycles,
    max_forcing_number,
    max_forcing_via_clar,
)
from .generate import GeneratorConfig, generate_polyominoes
from .grid import PolyominoGraph, boundary_cycle, build_from_cells, parse_ascii, parse_json
from .harness import run_battery, verify_graph
from .matching import (
    AlternatingCycle,
    Matching,
    alternating_squares,
    enumerate_alternating_cycles,
    enumerate_perfect_matchings,
    has_unique_perfect_matching,
    max_matching,
    symmetric_difference_cycles,
)
from .resonance import (
    ClarResult,
    FaceSet,
    clar_exhaustive,
    is_alternating_set,
    is_resonant_set,
    maximal_alternating_sets,
    verify_unique_after_deletion,
)
from .structure import classify_edges, elementary_components, is_weakly_elementary, nice_cycles
from .svg import RenderSpec, render_svg
