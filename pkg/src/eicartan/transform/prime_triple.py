"""(C, D, Omega) -> (C', D', Omega') relative to a prime p (or p = 0)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from sympy import isprime

from ..cartan import CartanMatrix, CartanTriple, quadratic_form
from ..errors import InputError
from ..ffield import split_order


def check_prime(p):
    if p != 0 and not (isinstance(p, int) and p > 1 and isprime(p)):
        raise InputError(f"p must be a prime or 0, got {p!r}")
    return p


@dataclass(frozen=True)
class PrimeFactoredSymmetrizer:
    """c_i = p^{r_i} d_i with gcd(p, d_i) = 1; p = 0 gives r_i = 0, d_i = c_i."""

    p: int
    labels: tuple
    r: tuple
    d: tuple

    @classmethod
    def of(cls, t, p):
        check_prime(p)
        rs, ds = zip(*(split_order(c, p) for c in t.D))
        return cls(p, t.labels, rs, ds)

    def pr(self, k):
        return self.p ** self.r[k] if self.p else 1


def sigma_set(fs, i, j):
    """Sigma_ij: pairs (l_i, l_j) with l_i p^{r_i} = l_j p^{r_j} mod gcd(d_i, d_j)."""
    a, b = fs.labels.index(i), fs.labels.index(j)
    g = math.gcd(fs.d[a], fs.d[b])
    pa, pb = fs.pr(a), fs.pr(b)
    return [(li, lj) for li in range(fs.d[a]) for lj in range(fs.d[b])
            if (li * pa - lj * pb) % g == 0]


@dataclass(frozen=True)
class PrimeTriple:
    source: CartanTriple
    factors: PrimeFactoredSymmetrizer
    M: tuple  # ((i, l_i), ...) lexicographic in (position of i, l_i)
    C: CartanMatrix
    D: tuple
    Omega: frozenset

    @property
    def p(self):
        return self.factors.p

    def as_triple(self):
        return CartanTriple(self.C, self.D, self.Omega)

    def block(self, i):
        return [v for v in self.M if v[0] == i]


def construct_prime_triple(t, p):
    fs = PrimeFactoredSymmetrizer.of(t, p)
    labels = t.labels
    M = tuple((i, l) for k, i in enumerate(labels) for l in range(fs.d[k]))
    pos = {v: n for n, v in enumerate(M)}
    rows = [[2 if a == b else 0 for b in range(len(M))] for a in range(len(M))]
    for a, i in enumerate(labels):
        for b, j in enumerate(labels):
            if i == j or t.C(i, j) == 0:
                continue
            g = math.gcd(t.C(i, j), t.C(j, i))
            e = fs.r[b] - min(fs.r[a], fs.r[b])
            entry = -g * (fs.p ** e if fs.p else 1)
            for li, lj in sigma_set(fs, i, j):
                rows[pos[(i, li)]][pos[(j, lj)]] = entry
    C = CartanMatrix.from_rows(rows, M)
    D = tuple(fs.pr(labels.index(v[0])) for v in M)
    Omega = frozenset(((i, li), (j, lj)) for (i, j) in t.Omega for li, lj in sigma_set(fs, i, j))
    return PrimeTriple(t, fs, M, C, D, Omega)


def theta_embedding(pt, x):
    """e_i -> sum_l e_(i,l), as an integer vector over M."""
    t = pt.source
    if len(x) != t.n:
        raise InputError("vector length does not match the rank")
    return [x[t.C.index(i)] for i, _ in pt.M]


def quadratic_forms(pt, x):
    """(q_C(x), q_C'(theta x))."""
    t = pt.source
    return quadratic_form(t.C, t.D, list(x)), quadratic_form(pt.C, pt.D, theta_embedding(pt, x))


def gcd_preserved(pt):
    t = pt.source
    for (u, v) in pt.Omega:
        if math.gcd(pt.C(u, v), pt.C(v, u)) != math.gcd(t.C(u[0], v[0]), t.C(v[0], u[0])):
            return False
    return True


def sigma_cardinalities_ok(pt):
    fs, t = pt.factors, pt.source
    for (i, j) in t.Omega:
        a, b = t.C.index(i), t.C.index(j)
        if len(sigma_set(fs, i, j)) != fs.d[a] * fs.d[b] // math.gcd(fs.d[a], fs.d[b]):
            return False
    return True
