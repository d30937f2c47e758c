"""(C, D, Omega) -> (C', D', Omega') relative to a prime p or p = 0.

Claims checked here:
  * |M| = sum d_i and D' = (p^{r_i}) blockwise;
  * the result is again a valid Cartan triple (C', D' symmetric, Omega'
    acyclic) for random inputs and p in {0, 2, 3, 5};
  * |Sigma_ij| = d_i d_j / gcd(d_i, d_j) and gcd(c'_uv, c'_vu) = gcd(c_ij, c_ji);
  * q_C(x) = q_C'(theta x);
  * known small cases: G2 -> D4 at p = 2, C2 -> A3 at p = 3, a triple with
    all c_i powers of p is returned unchanged.
"""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from eicartan.cartan import CartanTriple, is_symmetrizer, recognize_simply_laced, valued_graph
from eicartan.errors import InputError
from eicartan.sampling import random_triple
from eicartan.transform.prime_triple import (PrimeFactoredSymmetrizer, check_prime,
                                             construct_prime_triple, gcd_preserved,
                                             quadratic_forms, sigma_cardinalities_ok, sigma_set,
                                             theta_embedding)


def _same_triple(pt, t):
    relabel = {(i, 0): i for i in t.labels}
    return (len(pt.M) == t.n and pt.D == t.D
            and pt.C.relabel(relabel).entries == t.C.entries
            and {(relabel[u], relabel[v]) for u, v in pt.Omega} == set(t.Omega))


@pytest.mark.parametrize("p", [1, 4, -3, 2.0, "2"])
def test_bad_primes_rejected(p):
    with pytest.raises(InputError):
        check_prime(p)


def test_factorization():
    t = CartanTriple.create([[2, -1], [-3, 2]], (12, 4))  # not minimal: 4 * (3, 1)
    fs = PrimeFactoredSymmetrizer.of(t, 2)
    assert fs.r == (2, 2) and fs.d == (3, 1)
    fs0 = PrimeFactoredSymmetrizer.of(t, 0)
    assert fs0.r == (0, 0) and fs0.d == (12, 4)


def test_g2_at_two_is_d4(g2):
    pt = construct_prime_triple(g2, 2)
    assert len(pt.M) == 4 and pt.D == (1, 1, 1, 1)
    assert recognize_simply_laced(valued_graph(pt.C)).name == "D_4"


def test_g2_at_three_is_itself(g2):
    assert _same_triple(construct_prime_triple(g2, 3), g2)


def test_c2_at_three_is_a3(c2):
    pt = construct_prime_triple(c2, 3)
    assert recognize_simply_laced(valued_graph(pt.C)).name == "A_3"


def test_c2_at_two_is_itself(c2):
    assert _same_triple(construct_prime_triple(c2, 2), c2)


def test_p_zero_splits_everything(b3):
    pt = construct_prime_triple(b3, 0)
    assert len(pt.M) == sum(b3.D) and set(pt.D) == {1}


@pytest.fixture
def b3():
    from eicartan.io import load_fixture
    return load_fixture("b3")


def test_sigma_set_small():
    t = CartanTriple.create([[2, -2], [-3, 2]], (3, 2))
    fs = PrimeFactoredSymmetrizer.of(t, 0)
    # gcd(3, 2) = 1: every pair
    assert len(sigma_set(fs, 1, 2)) == 6
    t = CartanTriple.create([[2, -2], [-2, 2]], (2, 2))
    fs = PrimeFactoredSymmetrizer.of(t, 3)
    assert sigma_set(fs, 1, 2) == [(0, 0), (1, 1)]


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([0, 2, 3, 5]))
def test_construction_properties(seed, p):
    t = random_triple(random.Random(seed))
    pt = construct_prime_triple(t, p)
    fs = pt.factors
    assert len(pt.M) == sum(fs.d)
    assert is_symmetrizer(pt.C, pt.D)
    pt.as_triple()  # validates C', D', Omega'
    assert sigma_cardinalities_ok(pt)
    assert gcd_preserved(pt)
    for i in t.labels:
        k = t.labels.index(i)
        assert len(pt.block(i)) == fs.d[k]
        assert fs.pr(k) * fs.d[k] == t.D[k]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([0, 2, 3, 5]),
       st.lists(st.integers(-20, 20), min_size=3, max_size=3))
def test_quadratic_form_compatibility(seed, p, x):
    t = random_triple(random.Random(seed))
    pt = construct_prime_triple(t, p)
    q, q2 = quadratic_forms(pt, x[: t.n])
    assert q == q2


def test_theta_shape(g2):
    pt = construct_prime_triple(g2, 2)
    assert theta_embedding(pt, [5, 7]) == [5, 5, 5, 7]
    with pytest.raises(InputError):
        theta_embedding(pt, [1])


def test_prime_power_symmetrizer_is_fixed():
    t = CartanTriple.create([[2, -1, 0], [-2, 2, -1], [0, -4, 2]], (8, 4, 1), [(2, 1), (2, 3)])
    pt = construct_prime_triple(t, 2)
    assert _same_triple(pt, t)
    assert math.prod(pt.D) == math.prod(t.D)
