from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from polyclar import simplex
from polyclar.clar_ip import build_clar_ip, clar_ip, solve_ip, solve_lp_exact
from polyclar.errors import Infeasible
from polyclar.grid import build_from_cells, parse_ascii
from polyclar.matching import has_perfect_matching
from polyclar.resonance import maximum_resonant_sets

from oracles import polyominoes, rect, row

SQUARE = build_from_cells([(0, 0)])
DOMINO = parse_ascii("##")


def float_lp(ip):
    """Same relaxation through HiGHS, as a floating-point second opinion."""
    a_eq = [[1 if j in r else 0 for j in range(ip.n_vars)] for r in ip.rows]
    c = [-1] * ip.n_faces + [0] * (ip.n_vars - ip.n_faces)
    res = linprog(c, A_eq=a_eq, b_eq=[1] * len(ip.rows), bounds=(0, 1), method="highs")
    return res


# -- program construction ---------------------------------------------------------


@pytest.mark.parametrize("g, n_vars, n_rows, optimum", [(SQUARE, 5, 4, 1), (DOMINO, 9, 6, 1), (row(3), 13, 8, 2)])
def test_build_examples(g, n_vars, n_rows, optimum):
    ip = build_clar_ip(g)
    assert (ip.n_vars, len(ip.rows), ip.n_faces) == (n_vars, n_rows, len(g.squares))
    assert solve_ip(ip, g).optimum == optimum


def test_text_listing():
    text = build_clar_ip(SQUARE).to_text()
    assert text.splitlines() == [
        "maximize",
        "  obj: f0",
        "subject to",
        "  v0: f0 + e0 + e1 = 1",
        "  v1: f0 + e0 + e2 = 1",
        "  v2: f0 + e1 + e3 = 1",
        "  v3: f0 + e2 + e3 = 1",
        "binary",
        "  f0 e0 e1 e2 e3",
        "end",
    ]


def test_each_vertex_row_lists_its_faces_and_edges():
    g = rect(2, 3)
    ip = build_clar_ip(g)
    for v, row_ in enumerate(ip.rows):
        faces = {ip.faces[j] for j in row_ if j < ip.n_faces}
        edges = {ip.edges[j - ip.n_faces] for j in row_ if j >= ip.n_faces}
        assert faces == {s for s in range(len(g.squares)) if v in g.square_vertices[s]}
        assert edges == {e for e, pair in enumerate(g.edges) if v in pair}


# -- LP relaxation -----------------------------------------------------------------


def test_lp_single_square():
    lp = solve_lp_exact(build_clar_ip(SQUARE))
    assert lp.objective == 1
    assert all(isinstance(v, Fraction) for v in lp.values)


def test_lp_infeasible_without_matching():
    with pytest.raises(Infeasible):
        solve_lp_exact(build_clar_ip(rect(2, 2)))
    with pytest.raises(Infeasible):
        clar_ip(rect(2, 2))


@settings(max_examples=40, deadline=None)
@given(polyominoes(max_cells=7))
def test_lp_against_highs(g):
    ip = build_clar_ip(g)
    ref = float_lp(ip)
    if not has_perfect_matching(g):
        # an odd graph can still have a fractional point; the two solvers
        # must agree on feasibility either way
        try:
            lp = solve_lp_exact(ip)
        except Infeasible:
            assert ref.status == 2
            return
    else:
        lp = solve_lp_exact(ip)
    assert ref.status == 0
    assert abs(float(lp.objective) + ref.fun) < 1e-9
    assert all(v >= 0 for v in lp.values)
    assert all(r == 0 for r in ip.residuals(lp.values))


@settings(max_examples=40, deadline=None)
@given(polyominoes(max_cells=7))
def test_ip_against_exhaustive(g):
    if not has_perfect_matching(g):
        return
    ip = build_clar_ip(g)
    sol = solve_ip(ip, g)
    assert sol.optimum == maximum_resonant_sets(g)[0]
    assert all(v in (0, 1) for v in sol.assignment)
    assert all(r == 0 for r in ip.residuals(sol.assignment))
    assert sol.optimum == ip.objective(sol.assignment)
    assert solve_lp_exact(ip).objective >= sol.optimum


def test_ip_row_picks_outer_squares():
    sol = clar_ip(row(3))
    assert sol.optimum == 2
    assert sol.faces == {0, 2}


def test_root_reuse_gives_same_answer():
    g = rect(3, 2)
    ip = build_clar_ip(g)
    root = solve_lp_exact(ip)
    assert solve_ip(ip, g, root=root) == solve_ip(ip, g)


def test_subprogram_drops_faces_without_all_sides():
    g = row(2)
    left = g.square_edges[0]
    verts = g.vertices_of_edges(left)
    ip = build_clar_ip(g, verts, left)
    assert ip.faces == (0,)
    assert solve_ip(ip, g).optimum == 1


# -- the simplex on its own --------------------------------------------------------


def test_simplex_small_program():
    # max x + y  s.t.  x + 2y + s = 4,  3x + y + t = 6
    rows = [{0: 1, 1: 2, 2: 1}, {0: 3, 1: 1, 3: 1}]
    res = simplex.solve(rows, [4, 6], [1, 1, 0, 0])
    assert res.objective == Fraction(14, 5)
    assert res.x[:2] == (Fraction(8, 5), Fraction(6, 5))


def test_simplex_unbounded_and_infeasible():
    with pytest.raises(simplex.Unbounded):
        simplex.solve([{0: 1, 1: -1}], [0], [1, 0])
    with pytest.raises(Infeasible):
        simplex.solve([{0: 1}, {0: 1}], [1, 2], [0])


@settings(max_examples=80, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda m: st.integers(1, 5).flatmap(
            lambda n: st.tuples(
                st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=m, max_size=m),
                st.lists(st.integers(-4, 6), min_size=m, max_size=m),
                st.lists(st.integers(-2, 3), min_size=n, max_size=n),
            )
        )
    )
)
def test_simplex_against_highs(case):
    a, b, c = case
    n = len(c)
    ref = linprog([-v for v in c], A_eq=a, b_eq=b, bounds=(0, None), method="highs")
    rows = [{j: v for j, v in enumerate(r) if v} for r in a]
    try:
        res = simplex.solve(rows, b, c)
    except Infeasible:
        assert ref.status == 2
        return
    except simplex.Unbounded:
        assert ref.status == 3
        return
    assert ref.status == 0
    assert abs(float(res.objective) + ref.fun) < 1e-7
    for r, rhs in zip(a, b):
        assert sum(Fraction(v) * x for v, x in zip(r, res.x)) == rhs
    assert len(res.x) == n and all(x >= 0 for x in res.x)
