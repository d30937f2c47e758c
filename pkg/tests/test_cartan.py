"""Cartan triples, their quivers and the valued-graph classification.

Claims checked here:
  * validation names the failing condition (C1, C2, C3, covering, acyclic);
  * the minimal symmetrizer is unique up to a positive rational per component;
  * Q(C, Omega) has gcd(c_ij, c_ji) parallel arrows per oriented pair;
  * definiteness of DC separates Dynkin, Euclidean and indefinite types.
"""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eicartan.cartan import (DYNKIN, EUCLIDEAN, INDEFINITE, CartanMatrix, CartanTriple,
                             build_quiver, classify, definiteness, find_minimal_symmetrizer,
                             quadratic_form, recognize_simply_laced, validate_cartan,
                             validate_orientation, valued_graph)
from eicartan.errors import InputError, NotSymmetrizable
from eicartan.sampling import random_triple


# -- Helpers -------------------------------------------------------------------

def _simply_laced(n, edges, mult=None):
    rows = [[2 if a == b else 0 for b in range(n)] for a in range(n)]
    for a, b in edges:
        m = (mult or {}).get((a, b), 1)
        rows[a][b] = rows[b][a] = -m
    return CartanMatrix.from_rows(rows)


# -- Validation ----------------------------------------------------------------

def test_c1_violation_named():
    rep = validate_cartan([[3, -1], [-1, 2]])
    assert not rep.ok and "C1" in rep.failures()


def test_c2_violation_named():
    rep = validate_cartan([[2, -1], [0, 2]])
    assert "C2" in rep.failures()
    rep = validate_cartan([[2, 1], [1, 2]])
    assert "C2" in rep.failures()


def test_c3_violation_named():
    # a 3-cycle whose ratios multiply to 2
    rep = validate_cartan([[2, -1, -1], [-1, 2, -1], [-2, -1, 2]])
    assert "C3" in rep.failures()
    with pytest.raises(NotSymmetrizable):
        find_minimal_symmetrizer([[2, -1, -1], [-1, 2, -1], [-2, -1, 2]])


def test_non_square_rejected():
    with pytest.raises(InputError):
        validate_cartan([[2, -1], [-1]])


def test_orientation_cycle_rejected():
    C = [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    rep = validate_orientation(CartanMatrix.from_rows(C), {(1, 2), (2, 3), (3, 1)})
    assert "acyclic" in rep.failures()


def test_orientation_must_cover_edges():
    rep = validate_orientation(CartanMatrix.from_rows([[2, -1], [-1, 2]]), set())
    assert "covering" in rep.failures()
    rep = validate_orientation(CartanMatrix.from_rows([[2, 0], [0, 2]]), {(1, 2)})
    assert "covering" in rep.failures()


def test_triple_rejects_non_symmetrizer():
    with pytest.raises(InputError):
        CartanTriple.create([[2, -1], [-3, 2]], (1, 3))


# -- Symmetrizers --------------------------------------------------------------

@pytest.mark.parametrize("rows,expected", [
    ([[2, -1], [-3, 2]], (3, 1)),
    ([[2, -2], [-1, 2]], (1, 2)),
    ([[2, -1, 0], [-1, 2, -1], [0, -2, 2]], (2, 2, 1)),
    ([[2, 0], [0, 2]], (1, 1)),
    ([[2, -4], [-1, 2]], (1, 4)),
])
def test_minimal_symmetrizer(rows, expected):
    assert find_minimal_symmetrizer(rows) == expected


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_symmetrizer_unique_up_to_scale(seed):
    t = random_triple(random.Random(seed))
    D0 = find_minimal_symmetrizer(t.C)
    ratios = {Fraction(d, d0) for d, d0 in zip(t.D, D0)}
    comps = {frozenset(c) for c in _components(t)}
    if len(comps) == 1:
        assert len(ratios) == 1
    for comp in comps:
        idx = [t.C.index(v) for v in comp]
        assert math.gcd(*(D0[i] for i in idx)) == 1
        assert len({Fraction(t.D[i], D0[i]) for i in idx}) == 1


def _components(t):
    from eicartan.cartan import connected_components
    return connected_components(valued_graph(t.C))


# -- Quivers -------------------------------------------------------------------

def test_g2_quiver(g2):
    q = build_quiver(g2)
    assert len(q.arrows) == 1 and q.loops == (1, 2)
    a = q.arrows[0]
    assert (a.target, a.source) == (1, 2)


def test_kronecker_multiplicity():
    t = CartanTriple.create([[2, -2], [-2, 2]], (1, 1))
    assert len(build_quiver(t).arrows) == 2
    t = CartanTriple.create([[2, -4], [-2, 2]], (1, 2))
    assert len(build_quiver(t).arrows) == 2


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_arrow_count_is_gcd(seed):
    t = random_triple(random.Random(seed))
    q = build_quiver(t)
    for i, j in t.Omega:
        assert len(q.arrows_between(i, j)) == math.gcd(t.C(i, j), t.C(j, i))
        assert not q.arrows_between(j, i)
    assert q.is_acyclic()


def test_paths_closed_under_extension():
    t = CartanTriple.create([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], None, [(1, 2), (2, 3)])
    paths = build_quiver(t).paths()
    assert len(paths) == 3
    assert max(len(p) for p in paths) == 2


# -- Classification ------------------------------------------------------------

def test_definiteness_basic():
    assert definiteness([[2, -1], [-1, 2]]) == DYNKIN
    assert definiteness([[2, -2], [-2, 2]]) == EUCLIDEAN
    assert definiteness([[2, -3], [-3, 2]]) == INDEFINITE


@pytest.mark.parametrize("name,expected", [
    ("g2", DYNKIN), ("b3", DYNKIN), ("f4", DYNKIN), ("a11_tilde", EUCLIDEAN),
    ("c2_tilde", EUCLIDEAN), ("g22_tilde", EUCLIDEAN),
])
def test_fixture_classes(name, expected):
    from eicartan.io import load_fixture
    t = load_fixture(name)
    assert [c.tag for c in classify(t.C, t.D)] == [expected]


@pytest.mark.parametrize("n,edges,name", [
    (3, [(0, 1), (1, 2)], "A_3"),
    (4, [(0, 1), (1, 2), (1, 3)], "D_4"),
    (5, [(0, 1), (1, 2), (1, 3), (1, 4)], "~D_4"),
    (6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)], "E_6"),
    (4, [(0, 1), (1, 2), (2, 3), (3, 0)], "~A_3"),
    (6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)], "~D_5"),
    (6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)], "D_6"),
])
def test_simply_laced_names(n, edges, name):
    g = valued_graph(_simply_laced(n, edges))
    assert recognize_simply_laced(g).name == name


def test_double_edge_is_a1_tilde():
    g = valued_graph(_simply_laced(2, [(0, 1)], {(0, 1): 2}))
    assert recognize_simply_laced(g).name == "~A_1"


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_quadratic_form_matches_bilinear(seed, x):
    from eicartan.cartan import bilinear_form
    t = random_triple(random.Random(seed))
    x = x[: t.n]
    assert 2 * quadratic_form(t.C, t.D, x) == bilinear_form(t.C, t.D, x, x)
