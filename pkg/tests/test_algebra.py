"""Structure-constant algebras, linear maps and balanced tensor products.

Claims checked here:
  * kC, H and T_A(V) are unital and associative;
  * a corrupted structure constant is caught by the associativity check;
  * a random invertible matrix is (almost always) not an algebra map;
  * k[x]/(x^a - lam) (x)_R k[y]/(y^b - lam) has dimension a b / gcd(a, b)
    for lam = 1 and lam = 0, and the surviving basis has b < cj/g.
"""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from eicartan import linalg
from eicartan.algebra import (CyclicAlgebra, LinearMap, StructureConstantAlgebra,
                              balanced_tensor, check_associativity, check_unit, corrupt_table,
                              homomorphism_failures, idempotent_corner, is_algebra_homomorphism,
                              is_bijective, rank, to_document)
from eicartan.ei_category import build_ei_quiver, category_algebra, enumerate_category
from eicartan.errors import InputError
from eicartan.ffield import make_field
from eicartan.gls import build_H


# -- Helpers -------------------------------------------------------------------

def _kc(t, f):
    return category_algebra(enumerate_category(build_ei_quiver(t)), f)


def _random_invertible(f, n, rng):
    while True:
        M = [[f.gen_power(rng.randrange(f.q)) if rng.random() < 0.6 else 0 for _ in range(n)]
             for _ in range(n)]
        if linalg.mat_inv(f, M) is not None:
            return M


# -- Structure constants -------------------------------------------------------

def test_kc_and_h_are_unital_associative(fixture_triple):
    f = make_field(2, 3)
    for alg in (_kc(fixture_triple, f), build_H(fixture_triple, f).algebra):
        if alg.dim > 60:
            continue
        assert check_unit(alg)
        assert check_associativity(alg)


@pytest.mark.parametrize("name", ["g2", "c2", "b3"])
def test_corrupted_table_fails_associativity(name):
    from eicartan.io import load_fixture
    f = make_field(2, 3)
    alg = build_H(load_fixture(name), f).algebra
    # move a product of two arrows-with-loops to a wrong basis element
    bad = corrupt_table(alg)
    assert check_associativity(alg)
    assert not check_associativity(bad)


def test_duplicate_labels_rejected():
    f = make_field(2)
    with pytest.raises(InputError):
        StructureConstantAlgebra(f, ["a", "a"], {}, {0: 1})


def test_identity_map_is_iso(g2):
    f = make_field(2, 3)
    kc = _kc(g2, f)
    ident = LinearMap.identity(kc)
    assert is_algebra_homomorphism(ident) and is_bijective(ident)
    assert rank(ident) == kc.dim


def test_random_linear_bijection_is_not_homomorphism(g2):
    f = make_field(2, 3)
    kc = _kc(g2, f)
    M = _random_invertible(f, kc.dim, random.Random(4))
    phi = LinearMap.from_matrix(kc, kc, M)
    assert is_bijective(phi)
    assert homomorphism_failures(phi)


def test_corner_of_h(c2):
    f = make_field(2)
    h = build_H(c2, f)
    for v in c2.labels:
        e = idempotent_corner(h.algebra, h.idempotent(v))
        assert e.dim == c2.c(v)
        assert check_associativity(e) and check_unit(e)


def test_non_idempotent_corner_rejected(c2):
    f = make_field(3)
    h = build_H(c2, f)
    with pytest.raises(InputError):
        idempotent_corner(h.algebra, h.eps(2))


def test_document_shape(g2):
    f = make_field(2, 3)
    doc = to_document(_kc(g2, f))
    assert doc["dim"] == 7 and len(doc["basis"]) == 7
    assert doc["field"]["p"] == 2 and doc["field"]["m"] == 2


# -- Tensor building blocks ----------------------------------------------------

def test_cyclic_algebra_wraps_or_dies():
    f = make_field(3)
    assert CyclicAlgebra(1, 3, 1).mul_exponents(f, 2, 2) == (1, 1)
    assert CyclicAlgebra(1, 3, 0).mul_exponents(f, 2, 2) is None
    assert CyclicAlgebra(1, 3, 0).mul_exponents(f, 1, 1) == (f.one, 2)


@pytest.mark.parametrize("lam", [0, 1])
@pytest.mark.parametrize("ci,cj", [(1, 1), (2, 3), (4, 6), (6, 4), (3, 3), (8, 2), (5, 1)])
def test_balanced_tensor_dimension(ci, cj, lam):
    f = make_field(2, 105)
    mod = balanced_tensor(f, "k", 1, 2, ci, cj, lam)
    g = math.gcd(ci, cj)
    assert mod.dim == ci * cj // g
    assert all(b < cj // g for _, b in mod.labels)
    assert mod.actions_commute()
    assert mod.check_reps()


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8), st.integers(0, 7), st.integers(0, 7))
def test_balanced_relation_holds(ci, cj, a, b):
    f = make_field(3, 8 * 5 * 7)
    mod = balanced_tensor(f, "k", 1, 2, ci, cj, 1)
    g = math.gcd(ci, cj)
    assert mod.coords_of(a + ci // g, b) == mod.coords_of(a, b + cj // g)
