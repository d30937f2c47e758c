"""Finite fields F_{p^m} with one fixed multiplicative generator, and the
splitting of k[x]/(x^a - 1) into local factors k[x]/(x - zeta^i)^{p^r}.

Field elements are plain ints in *log encoding*: ``0`` is zero and ``k + 1``
stands for ``g**k`` where ``g`` is the field's generator.  In particular the
integer ``1`` is the multiplicative identity.  Multiplication is addition of
exponents; addition goes through a Zech logarithm table.  Use
:meth:`FieldSpec.to_vector` / :meth:`FieldSpec.from_vector` to move between
this encoding and coefficient vectors over F_p.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from sympy import factorint, isprime, n_order
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_pow_mod

from .errors import InputError
from . import linalg

DEFAULT_SEED = 7919


def split_order(a, p):
    """Return ``(r, a_prime)`` with ``a = p**r * a_prime`` and ``gcd(p, a_prime) == 1``.

    ``p == 0`` means characteristic zero: ``(0, a)``.
    """
    if a < 1:
        raise InputError(f"expected a positive integer, got {a}")
    r = 0
    if p:
        while a % p == 0:
            a //= p
            r += 1
    return r, a


def multiplicative_order(p, n):
    return 1 if n == 1 else int(n_order(p, n))


class FieldSpec:
    """The field F_{p^m} = F_p[x]/(modulus) together with a generator of its unit group."""

    def __init__(self, p, m, modulus, generator, seed):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = tuple(modulus)  # low-to-high, monic
        self.generator = tuple(generator)  # low-to-high coefficient vector
        self.seed = seed
        self._order = self.q - 1
        self._build_tables()

    # -- construction -------------------------------------------------

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        # all elements as digit vectors; row v is the base-p expansion of v
        ints = np.arange(q, dtype=np.int64)
        powers = p ** np.arange(m, dtype=np.int64)
        digits = (ints[:, None] // powers[None, :]) % p
        mult = np.array(_mul_by_matrix(self.generator, self.modulus, p), dtype=np.int64)
        images = (digits @ mult.T) % p
        nxt = (images @ powers).tolist()

        exp = [0] * self._order
        cur = 1
        for k in range(self._order):
            exp[k] = cur
            cur = nxt[cur]
        if cur != 1 or len(set(exp)) != self._order:
            raise AssertionError("generator does not have full multiplicative order")
        log = [-1] * q
        for k, v in enumerate(exp):
            log[v] = k

        d0 = digits[:, 0]
        one_plus = (ints - d0 + (d0 + 1) % p).tolist()
        self._exp = exp
        self._log = log
        self._zech = [log[one_plus[v]] for v in exp]

    # -- arithmetic on log-encoded elements ----------------------------

    zero = 0
    one = 1

    def add(self, a, b):
        if a == 0:
            return b
        if b == 0:
            return a
        z = self._zech[(b - a) % self._order]
        if z < 0:
            return 0
        return (a - 1 + z) % self._order + 1

    def neg(self, a):
        if a == 0 or self.p == 2:
            return a
        return (a - 1 + self._order // 2) % self._order + 1

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return (a + b - 2) % self._order + 1

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return (1 - a) % self._order + 1

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if k == 0 else 0
        return ((a - 1) * k) % self._order + 1

    def gen_power(self, k):
        return k % self._order + 1

    def from_int(self, n):
        v = n % self.p
        return 0 if v == 0 else self._log[v] + 1

    def from_vector(self, coeffs):
        coeffs = list(coeffs) + [0] * (self.m - len(coeffs))
        if len(coeffs) > self.m:
            raise InputError("coefficient vector longer than the field degree")
        v = sum((c % self.p) * self.p ** k for k, c in enumerate(coeffs))
        return 0 if v == 0 else self._log[v] + 1

    def to_vector(self, a):
        v = 0 if a == 0 else self._exp[a - 1]
        out = []
        for _ in range(self.m):
            v, d = divmod(v, self.p)
            out.append(d)
        return tuple(out)

    def multiplicative_order(self, a):
        if a == 0:
            raise InputError("zero has no multiplicative order")
        return self._order // math.gcd(a - 1, self._order)

    def elements(self):
        return range(self.q)

    def describe(self):
        return {
            "p": self.p,
            "m": self.m,
            "modulus": list(self.modulus),
            "generator": list(self.generator),
            "seed": self.seed,
        }

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m})"


def _mul_by_matrix(g, f, p):
    """Matrix over F_p of v -> g*v mod f on coefficient vectors of length m."""
    m = len(f) - 1
    cols = []
    for k in range(m):
        prod = [0] * (m + len(g))
        for i, gi in enumerate(g):
            prod[i + k] = (prod[i + k] + gi) % p
        cols.append(_reduce(prod, f, p))
    return [[cols[k][i] for k in range(m)] for i in range(m)]


def _reduce(poly, f, p):
    poly = list(poly)
    m = len(f) - 1
    for top in range(len(poly) - 1, m - 1, -1):
        c = poly[top]
        if c:
            for i in range(m + 1):
                poly[top - m + i] = (poly[top - m + i] - c * f[i]) % p
    return (poly + [0] * m)[:m]


def _hi_lo(coeffs):
    out = [int(c) for c in reversed(coeffs)]
    while len(out) > 1 and out[0] == 0:
        out.pop(0)
    return out


def _is_generator(g, f, p, q):
    fh = _hi_lo(f)
    gh = _hi_lo(g)
    if gh == [0]:
        return False
    for ell in factorint(q - 1):
        if gf_pow_mod(gh, (q - 1) // ell, fh, p, ZZ) == [1]:
            return False
    return True


@lru_cache(maxsize=None)
def _field_of_degree(p, m, seed):
    rng = random.Random(seed)
    while True:
        f = [rng.randrange(p) for _ in range(m)] + [1]
        if gf_irreducible_p(_hi_lo(f), p, ZZ):
            break
    q = p ** m
    # x first, then remaining residues in increasing vector order
    candidates = [v for v in range(p, q)] + [v for v in range(1, p)]
    for v in candidates:
        g = []
        for _ in range(m):
            v, d = divmod(v, p)
            g.append(d)
        if _is_generator(g, f, p, q):
            return FieldSpec(p, m, f, g, seed)
    raise AssertionError("no generator found")  # impossible: F_q^x is cyclic


def make_field(p, N=1, seed=DEFAULT_SEED):
    """The smallest F_{p^m} containing all N-th roots of unity (``m = ord_N(p)``)."""
    if not isprime(p):
        raise InputError(f"{p} is not prime")
    if N < 1 or math.gcd(p, N) != 1:
        raise InputError(f"N={N} must be positive and coprime to p={p}")
    return _field_of_degree(p, multiplicative_order(p, N), seed)


def root_of_unity(f, n):
    """Primitive n-th root of unity ``g**((q-1)/n)``; compatible across all n by construction."""
    if n < 1 or (f.q - 1) % n:
        raise InputError(f"{n} does not divide {f.q - 1}")
    return f.gen_power((f.q - 1) // n)


# ---------------------------------------------------------------------------
# Quotient rings k[x]/(x^a - 1) and their local factors


@dataclass(frozen=True)
class LocalFactor:
    """k[x]/(x - center)^exponent, stored in the shifted basis {(x - center)^s}."""

    index: int  # i, so that center = zeta_1 ** i
    center: int
    exponent: int

    @property
    def dim(self):
        return self.exponent

    def mul(self, f, u, v):
        out = [0] * self.exponent
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j in range(self.exponent - i):
                if v[j]:
                    out[i + j] = f.add(out[i + j], f.mul(a, v[j]))
        return out


@dataclass
class CRTDecomposition:
    """pi_A : k[x]/(x^a - 1) -> prod_i k[x]/(x - zeta_1^i)^{p^r} as matrices.

    ``forward`` has rows indexed by (factor, shift) flattened in factor order
    and columns indexed by the monomials x^0..x^{a-1}; ``inverse`` is its
    two-sided inverse.
    """

    field: FieldSpec
    a: int
    r: int
    a_prime: int
    zeta: int
    factors: list
    forward: list
    inverse: list

    def offset(self, i):
        return i * self.factors[0].exponent

    def project(self, coeffs):
        """Image of a polynomial class (monomial coefficients) as a list of local vectors."""
        flat = linalg.mat_vec(self.field, self.forward, coeffs)
        e = self.factors[0].exponent
        return [flat[i * e:(i + 1) * e] for i in range(len(self.factors))]

    def lift(self, components):
        flat = [c for comp in components for c in comp]
        return linalg.mat_vec(self.field, self.inverse, flat)


def _binomial_mod(n, k, p):
    return math.comb(n, k) % p


def shifted_expansion(f, k, center, length):
    """Coordinates of x^k in the basis {(x - center)^s}_{s < length}."""
    out = [0] * length
    for s in range(min(k, length - 1) + 1):
        b = _binomial_mod(k, s, f.p)
        if b:
            out[s] = f.mul(f.from_int(b), f.pow(center, k - s))
    return out


def crt_decompose(f, a):
    """Split A = k[x]/(x^a - 1) into its a' local factors at the powers of zeta_1."""
    r, a_prime = split_order(a, f.p)
    if (f.q - 1) % a_prime:
        raise InputError(f"F_{f.q} lacks primitive {a_prime}-th roots of unity")
    zeta = root_of_unity(f, a_prime)
    e = f.p ** r
    factors = [LocalFactor(i, f.pow(zeta, i), e) for i in range(a_prime)]
    forward = [[0] * a for _ in range(a)]
    for k in range(a):
        for lf in factors:
            col = shifted_expansion(f, k, lf.center, e)
            for s, c in enumerate(col):
                forward[lf.index * e + s][k] = c
    inverse = linalg.mat_inv(f, forward)
    if inverse is None:
        raise AssertionError("CRT change of basis is singular")
    dec = CRTDecomposition(f, a, r, a_prime, zeta, factors, forward, inverse)
    ident = linalg.identity(a)
    assert linalg.mat_mul(f, forward, inverse) == ident
    assert linalg.mat_mul(f, inverse, forward) == ident
    return dec


@dataclass
class NilpotentRebase:
    """theta : k[eps]/(eps^{p^r}) -> local factor, eps -> x^{a'} - 1, and its inverse.

    Both matrices act on coordinate columns: ``theta`` from eps-powers to the
    shifted basis, ``theta_inv`` the other way.
    """

    factor: LocalFactor
    a_prime: int
    u: list
    theta: list
    theta_inv: list

    def to_eps(self, f, v):
        return linalg.mat_vec(f, self.theta_inv, v)

    def from_eps(self, f, v):
        return linalg.mat_vec(f, self.theta, v)


def nilpotent_rebase(f, lf, a_prime):
    e = lf.exponent
    u = shifted_expansion(f, a_prime, lf.center, e)
    u[0] = f.sub(u[0], f.one)
    if u[0] != 0:
        raise AssertionError("x^{a'} - 1 is not in the maximal ideal of the local factor")
    if e > 1 and u[1] == 0:
        raise AssertionError("x^{a'} - 1 is not a uniformizer (p divides a')")
    cols = []
    power = [f.one] + [0] * (e - 1)
    for _ in range(e):
        cols.append(power)
        power = lf.mul(f, power, u)
    theta = [[cols[t][s] for t in range(e)] for s in range(e)]
    theta_inv = linalg.mat_inv(f, theta)
    if theta_inv is None:
        raise AssertionError("singular nilpotent rebasing")
    return NilpotentRebase(lf, a_prime, u, theta, theta_inv)
