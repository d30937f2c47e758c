"""Free EI categories of Cartan type.

Claims checked here:
  * the normal-form enumeration has exactly as many morphisms as the biset
    oracle (raw exponent tuples modulo the balancing moves);
  * composition agrees with the oracle on every composable pair;
  * the category is an EI category with associative, unital composition;
  * X(i) x_G X(j) is free on both sides with c_i c_j / g elements;
  * T_A(V) -> kC is an isomorphism;
  * recognition recovers (C, D, Omega) and names the failing condition
    (EC1, EC2, EC3) on hand-built counterexamples.
"""

import math
import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from eicartan.algebra import check_associativity, is_algebra_homomorphism, is_bijective
from eicartan.cartan import CartanTriple
from eicartan.ei_category import (Biset, FreeEICategory, build_ei_quiver, category_algebra,
                                  category_document, enumerate_category, recognize_cartan_type,
                                  tensor_form)
from eicartan.errors import InputError, NotCartanType
from eicartan.ffield import make_field
from eicartan.sampling import random_triple, triple_dimension

from oracles import BisetOracle


# -- Helpers -------------------------------------------------------------------

def _category(objects, morphisms, compose, identities, generators):
    """FreeEICategory from labelled morphisms (source, target, tag) and a compose rule."""
    index = {m: k for k, m in enumerate(morphisms)}
    table = {}
    for gi, g in enumerate(morphisms):
        for fi, f in enumerate(morphisms):
            if g[0] == f[1]:
                table[(gi, fi)] = index[compose(g, f)]
    return FreeEICategory(objects, morphisms, [m[0] for m in morphisms],
                          [m[1] for m in morphisms], table,
                          {x: index[identities[x]] for x in objects},
                          {x: index[g] for x, g in generators.items()})


def _two_object(cx, cy, hom, act):
    """Objects x, y with Aut = Z/cx, Z/cy and Hom(y, x) = ``hom`` acted on by
    ``act(a, h, b)`` = eta_x^a h eta_y^b."""
    auts = [("x", "x", ("e", a)) for a in range(cx)] + [("y", "y", ("e", b)) for b in range(cy)]
    ms = auts + [("y", "x", h) for h in hom]
    order = {"x": cx, "y": cy}

    def compose(g, f):
        if g[2][0] == "e" and f[2][0] == "e":
            return (f[0], g[1], ("e", (g[2][1] + f[2][1]) % order[g[0]]))
        if g[2][0] == "e":
            return ("y", "x", act(g[2][1], f[2], 0))
        return ("y", "x", act(0, g[2], f[2][1]))

    ident = {"x": ("x", "x", ("e", 0)), "y": ("y", "y", ("e", 0))}
    gens = {"x": ("x", "x", ("e", 1 % cx)), "y": ("y", "y", ("e", 1 % cy))}
    return _category(("x", "y"), ms, compose, ident, gens)


# -- Oracle agreement ----------------------------------------------------------

def test_counts_match_oracle(fixture_triple, oracle_factory):
    q = build_ei_quiver(fixture_triple)
    if triple_dimension(fixture_triple) > 120:
        pytest.skip("large fixture")
    oracle = oracle_factory(q.quiver, q.group_order)
    assert len(enumerate_category(q)) == oracle.count()


@pytest.mark.parametrize("rows,D,omega", [
    ([[2, -1], [-3, 2]], (3, 1), [(1, 2)]),
    ([[2, -2], [-1, 2]], (1, 2), [(2, 1)]),
    ([[2, -1, 0], [-2, 2, -2], [0, -1, 2]], (4, 2, 4), [(1, 2), (3, 2)]),
    ([[2, -2, 0], [-3, 2, -3], [0, -2, 2]], (3, 2, 3), [(1, 2), (2, 3)]),
    ([[2, -4], [-2, 2]], (1, 2), [(1, 2)]),
])
def test_composition_matches_oracle(rows, D, omega, oracle_factory):
    t = CartanTriple.create(rows, D, omega)
    q = build_ei_quiver(t)
    cat = enumerate_category(q)
    oracle = oracle_factory(q.quiver, q.group_order)
    keys = [oracle.key(m) for m in cat.morphisms]
    assert len(set(keys)) == len(keys) == oracle.count()
    for (g, f), h in cat.compose_table.items():
        assert oracle.compose(cat.morphisms[g], cat.morphisms[f]) == keys[h]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_random_counts_match_oracle(seed):
    t = random_triple(random.Random(seed), max_c=4)
    if triple_dimension(t) > 150:
        return
    q = build_ei_quiver(t)
    assert len(enumerate_category(q)) == BisetOracle(q.quiver, q.group_order).count()


def test_g2_has_seven_morphisms(g2):
    assert len(enumerate_category(build_ei_quiver(g2))) == 7


# -- Category axioms -----------------------------------------------------------

def test_category_axioms(fixture_triple):
    if triple_dimension(fixture_triple) > 80:
        pytest.skip("large fixture")
    cat = enumerate_category(build_ei_quiver(fixture_triple))
    assert cat.check_associativity()
    assert cat.check_identities()
    assert cat.is_ei()


def test_compose_rejects_mismatch(g2):
    q = build_ei_quiver(g2)
    with pytest.raises(InputError):
        q.compose(q.identity(1), q.identity(2))


@pytest.mark.parametrize("ci,cj", [(1, 1), (3, 1), (2, 4), (4, 6), (6, 6), (5, 3)])
def test_biset_is_free_both_sides(ci, cj):
    b = Biset.balanced_product(ci, cj)
    assert len(b) == ci * cj // math.gcd(ci, cj)
    assert b.is_free("left") and b.is_free("right")
    assert b.orbit_count("left") == cj // math.gcd(ci, cj)


# -- Tensor form ---------------------------------------------------------------

def test_tensor_form_is_isomorphism(fixture_triple):
    if triple_dimension(fixture_triple) > 80:
        pytest.skip("large fixture")
    f = make_field(5, 12)
    _, phi = tensor_form(build_ei_quiver(fixture_triple), f)
    assert phi.source.dim == phi.target.dim
    assert check_associativity(phi.source)
    assert is_algebra_homomorphism(phi) and is_bijective(phi)


# -- Recognition ---------------------------------------------------------------

def test_recognition_round_trip(fixture_triple):
    if triple_dimension(fixture_triple) > 80:
        pytest.skip("large fixture")
    cat = enumerate_category(build_ei_quiver(fixture_triple))
    t = recognize_cartan_type(cat)
    assert t.C.entries == fixture_triple.C.entries
    assert t.D == fixture_triple.D
    assert t.Omega == fixture_triple.Omega


def test_recognition_searches_generators(g2):
    cat = enumerate_category(build_ei_quiver(g2))
    cat.generators = {}
    with pytest.raises(InputError):
        recognize_cartan_type(cat)
    assert recognize_cartan_type(cat, search_generators=True).D == (3, 1)


def test_non_free_action_named_ec2():
    # Aut(x) = Z/2 fixes the single morphism y -> x
    cat = _two_object(2, 1, ["b"], lambda a, h, b: h)
    assert cat.check_associativity() and cat.is_ei()
    with pytest.raises(NotCartanType) as exc:
        recognize_cartan_type(cat)
    assert exc.value.condition == "EC2"


def test_unbalanced_biset_named_ec3():
    # Hom(y, x) = Z/2 x Z/2 with independent left and right actions
    hom = list(product(range(2), range(2)))
    cat = _two_object(2, 2, hom, lambda a, h, b: ((h[0] + a) % 2, (h[1] + b) % 2))
    assert cat.check_associativity()
    with pytest.raises(NotCartanType) as exc:
        recognize_cartan_type(cat)
    assert exc.value.condition == "EC3"


def test_non_cyclic_aut_named_ec1():
    els = list(product(range(2), range(2)))
    ms = [("x", "x", e) for e in els]
    cat = _category(("x",), ms,
                    lambda g, f: ("x", "x", ((g[2][0] + f[2][0]) % 2, (g[2][1] + f[2][1]) % 2)),
                    {"x": ("x", "x", (0, 0))}, {})
    with pytest.raises(NotCartanType) as exc:
        recognize_cartan_type(cat, search_generators=True)
    assert exc.value.condition == "EC1"


def test_category_document(g2):
    doc = category_document(enumerate_category(build_ei_quiver(g2)))
    assert len(doc["morphisms"]) == 7
    assert all(len(row) == 3 for row in doc["composition"])


def test_unfactorizable_are_single_arrows(fixture_triple):
    if triple_dimension(fixture_triple) > 80:
        pytest.skip("large fixture")
    cat = enumerate_category(build_ei_quiver(fixture_triple))
    single = [k for k, m in enumerate(cat.morphisms) if len(m.path) == 1]
    assert sorted(cat.unfactorizable()) == single


def test_category_algebra_is_monomial(fixture_triple):
    kc = category_algebra(enumerate_category(build_ei_quiver(fixture_triple)), make_field(2))
    assert kc.is_monomial()
