from itertools import combinations

import pytest
from hypothesis import given, settings

from polyclar.clar_ip import clar_ip
from polyclar.errors import NoPerfectMatching
from polyclar.grid import build_from_cells, parse_ascii
from polyclar.matching import has_perfect_matching
from polyclar.resonance import (
    clar_exhaustive,
    is_alternating_set,
    is_resonant_set,
    maximal_alternating_sets,
    maximum_resonant_sets,
    squares_disjoint,
    verify_unique_after_deletion,
)

from oracles import brute_perfect_matchings, polyominoes, rect, row

SQUARE = build_from_cells([(0, 0)])
DOMINO = parse_ascii("##")


def brute_alternating(g, m_edges):
    out = set()
    for s, (b, r, t, l) in enumerate(g.square_edges):
        if {b, t} <= m_edges or {l, r} <= m_edges:
            out.add(s)
    return frozenset(out)


def brute_families(g):
    return [brute_alternating(g, set(m)) for m in brute_perfect_matchings(g)]


def brute_clar(g):
    best = 0
    for a in brute_families(g):
        for k in range(len(a), best, -1):
            if any(squares_disjoint(g, c) for c in combinations(sorted(a), k)):
                best = k
                break
    return best


# -- resonant and alternating sets --------------------------------------------


def test_is_resonant_set_examples():
    check = is_resonant_set(SQUARE, {0})
    assert check and check.witness.is_perfect()
    check = is_resonant_set(DOMINO, {0, 1})
    assert not check and check.reason == "overlap"
    assert is_resonant_set(row(3), {0, 2})


def test_is_resonant_set_without_matching():
    # the two end squares of the S tetromino are disjoint, but deleting them
    # strands the two middle vertices on different sides
    g = parse_ascii(".##\n##.")
    check = is_resonant_set(g, {g.square_id[(0, 0)], g.square_id[(2, 1)]})
    assert not check and check.reason == "no-matching"


def test_is_alternating_set_examples():
    assert is_alternating_set(SQUARE, {0})
    check = is_alternating_set(DOMINO, {0, 1})
    assert check and {0, 1} <= brute_alternating(DOMINO, set(check.witness.edges))
    # all-vertical matching of the 1x3 row makes every square alternate
    assert is_alternating_set(row(3), {0, 1, 2})
    # the two arms of the L tromino never alternate together
    g = parse_ascii("#.\n##")
    check = is_alternating_set(g, {g.square_id[(1, 0)], g.square_id[(0, 1)]})
    assert not check and check.reason == "no-matching"


@settings(max_examples=40, deadline=None)
@given(polyominoes(max_cells=6))
def test_resonant_sets_against_brute_force(g):
    families = brute_families(g)
    for k in range(1, 3):
        for combo in combinations(range(len(g.squares)), k):
            want = squares_disjoint(g, combo) and any(set(combo) <= a for a in families)
            check = is_resonant_set(g, combo)
            assert bool(check) == want
            if check:
                assert check.witness.is_perfect()
                assert set(combo) <= brute_alternating(g, set(check.witness.edges))
            assert bool(is_alternating_set(g, combo)) == any(set(combo) <= a for a in families)


# -- Clar number ------------------------------------------------------------


@pytest.mark.parametrize(
    "g, value",
    [(SQUARE, 1), (DOMINO, 1), (row(3), 2), (row(4), 2), (rect(3, 3), 4), (parse_ascii("#.\n##"), 1)],
)
def test_clar_examples(g, value):
    res = clar_exhaustive(g)
    assert res.clar_number == value
    assert res.clar_number == clar_ip(g).optimum
    for fs in res.witness_sets:
        assert len(fs) == value
        assert fs.witness.is_perfect()
        assert fs.squares <= brute_alternating(g, set(fs.witness.edges))


def test_clar_row_witness():
    res = clar_exhaustive(row(3))
    assert [fs.squares for fs in res.witness_sets] == [frozenset({0, 2})]
    assert res.witness_sets[0].to_json(row(3)) == [[0, 0], [2, 0]]


def test_ring_equals_block():
    # the unit hole is a square face, so the ring's graph is the block's
    ring = parse_ascii("###\n#.#\n###")
    assert maximum_resonant_sets(ring) == maximum_resonant_sets(rect(3, 3))


def test_clar_requires_perfect_matching():
    with pytest.raises(NoPerfectMatching):
        clar_exhaustive(rect(2, 2))


@settings(max_examples=40, deadline=None)
@given(polyominoes(max_cells=6))
def test_clar_against_brute_force(g):
    if not has_perfect_matching(g):
        return
    value, sets = maximum_resonant_sets(g)
    assert value == brute_clar(g)
    # every listed set is resonant and of maximum size; the list is complete
    everything = {
        frozenset(c)
        for c in combinations(range(len(g.squares)), value)
        if squares_disjoint(g, c) and is_resonant_set(g, c)
    }
    assert set(sets) == everything


# -- maximal alternating sets -------------------------------------------------


@pytest.mark.parametrize(
    "g, expected",
    [
        (SQUARE, [{0}]),
        (DOMINO, [{0, 1}]),
        # all-vertical matching alternates all three squares
        (row(3), [{0, 1, 2}]),
    ],
)
def test_maximal_alternating_examples(g, expected):
    assert [set(fs.squares) for fs in maximal_alternating_sets(g)] == expected


@settings(max_examples=40, deadline=None)
@given(polyominoes(max_cells=6))
def test_maximal_alternating_against_brute_force(g):
    families = set(brute_families(g))
    if not families:
        with pytest.raises(NoPerfectMatching):
            maximal_alternating_sets(g)
        return
    want = {a for a in families if not any(a < b for b in families)}
    got = maximal_alternating_sets(g)
    assert {fs.squares for fs in got} == want
    for fs in got:
        assert brute_alternating(g, set(fs.witness.edges)) == fs.squares


# -- uniqueness after deletion ------------------------------------------------


def test_verify_unique_examples():
    assert verify_unique_after_deletion(SQUARE, {0})
    assert verify_unique_after_deletion(row(3), {0, 2})
    # the middle square leaves two separate edges: still unique
    assert verify_unique_after_deletion(row(3), {1})
    # non-maximum sets can leave several matchings
    assert not verify_unique_after_deletion(row(4), {0})
    assert not verify_unique_after_deletion(SQUARE, set())


@settings(max_examples=40, deadline=None)
@given(polyominoes(max_cells=6))
def test_verify_unique_against_brute_force(g):
    if not has_perfect_matching(g):
        return
    for fs in maximal_alternating_sets(g):
        rest = set(range(g.n_vertices)) - g.vertices_of_squares(fs.squares)
        assert verify_unique_after_deletion(g, fs) == (len(brute_perfect_matchings(g, rest)) == 1)
