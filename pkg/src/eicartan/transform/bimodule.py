"""Explicit decomposition of A (x)_C B for cyclic group algebras.

A = k[x]/(x^a - 1), B = k[y]/(y^b - 1), C = k[z]/(z^g - 1) with g = gcd(a, b),
z -> x^{a/g} and z -> y^{b/g}.  Writing a = p^r a', b = p^s b', the bimodule
splits over the set Sigma of pairs (i, j), i p^r = j p^s mod gcd(a', b'),
into the pieces A'_i (x)_{C'} B'_j of truncated polynomial rings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .. import linalg
from ..algebra import LinearMap, balanced_tensor
from ..ffield import crt_decompose, nilpotent_rebase, shifted_expansion, split_order


@dataclass(frozen=True)
class SigmaSet:
    a_prime: int
    b_prime: int
    r: int
    s: int
    p: int
    parts_a: tuple  # Sigma(l) for l < gcd(a', b')
    parts_b: tuple  # Sigma'(l)
    pairs: tuple  # Sigma, lexicographic

    @property
    def g(self):
        return math.gcd(self.a_prime, self.b_prime)

    def partitions_ok(self):
        def covers(parts, n):
            seen = [m for part in parts for m in part]
            return sorted(seen) == list(range(n))
        return covers(self.parts_a, self.a_prime) and covers(self.parts_b, self.b_prime)


def sigma_sets(p, a, b):
    r, a1 = split_order(a, p)
    s, b1 = split_order(b, p)
    g1 = math.gcd(a1, b1)
    pr, ps, pm = p ** r, p ** s, p ** min(r, s)
    parts_a = tuple(tuple(m for m in range(a1) if (m * pr - l * pm) % g1 == 0) for l in range(g1))
    parts_b = tuple(tuple(m for m in range(b1) if (m * ps - l * pm) % g1 == 0) for l in range(g1))
    pairs = tuple((i, j) for i in range(a1) for j in range(b1) if (i * pr - j * ps) % g1 == 0)
    return SigmaSet(a1, b1, r, s, p, parts_a, parts_b, pairs)


class DirectSum:
    """Target of the decomposition: concatenated coordinates of the pieces."""

    def __init__(self, field, pieces):
        self.field = field
        self.pieces = pieces  # list of (key, Bimodule)
        self.offsets = {}
        off = 0
        for key, mod in pieces:
            self.offsets[key] = off
            off += mod.dim
        self.dim = off

    def embed(self, key, vec):
        off = self.offsets[key]
        return {off + k: c for k, c in vec.items()}

    def component(self, key, vec):
        off = self.offsets[key]
        mod = dict(self.pieces)[key]
        return {k - off: c for k, c in vec.items() if off <= k < off + mod.dim}


@dataclass
class LocalCoordinates:
    """(prod theta_i)^{-1} o pi_A on monomials: x^k -> eps-coordinates per factor."""

    crt: object
    rebases: list

    def of_power(self, f, k):
        coeffs = [0] * self.crt.a
        coeffs[k % self.crt.a] = f.one
        return [rb.to_eps(f, v) for rb, v in zip(self.rebases, self.crt.project(coeffs))]


@lru_cache(maxsize=None)
def local_coordinates(f, a):
    crt = crt_decompose(f, a)
    return LocalCoordinates(crt, [nilpotent_rebase(f, lf, crt.a_prime) for lf in crt.factors])


@dataclass
class BimoduleDecomposition:
    field: object
    a: int
    b: int
    sigma: SigmaSet
    source: object  # A (x)_C B
    target: DirectSum
    iso: LinearMap
    loc_a: LocalCoordinates
    loc_b: LocalCoordinates

    def act_left(self, vec):
        """x acting on the target through (prod theta)^{-1} pi_A."""
        f = self.field
        u = self.loc_a.of_power(f, 1)
        out = {}
        for (i, j), mod in self.target.pieces:
            piece = self.target.component((i, j), vec)
            for s, c in enumerate(u[i]):
                if c:
                    linalg.axpy(f, out, c, self.target.embed((i, j), mod.act(piece, mod.left, s)))
        return out

    def act_right(self, vec):
        f = self.field
        v = self.loc_b.of_power(f, 1)
        out = {}
        for (i, j), mod in self.target.pieces:
            piece = self.target.component((i, j), vec)
            for t, c in enumerate(v[j]):
                if c:
                    linalg.axpy(f, out, c, self.target.embed((i, j), mod.act(piece, mod.right, t)))
        return out

    def commutes(self):
        """iso(x v) = x iso(v) and iso(v y) = iso(v) y on every source basis element."""
        src = self.source
        for k in range(src.dim):
            img = self.iso.columns[k]
            if self.iso(src.left[k]) != self.act_left(img):
                return False
            if self.iso(src.right[k]) != self.act_right(img):
                return False
        return True

    def dimension_identity(self):
        sg = self.sigma
        p = self.field.p
        rhs = sum(p ** sg.r * p ** sg.s // p ** min(sg.r, sg.s) for _ in sg.pairs)
        return self.source.dim, self.a * self.b // math.gcd(self.a, self.b), rhs


def bimodule_decomposition(f, a, b):
    f_one = f.one
    sg = sigma_sets(f.p, a, b)
    source = balanced_tensor(f, "A⊗_C B", "A", "B", a, b, f_one)
    loc_a, loc_b = local_coordinates(f, a), local_coordinates(f, b)
    pr, ps = f.p ** sg.r, f.p ** sg.s
    pieces = [((i, j), balanced_tensor(f, (i, j), i, j, pr, ps, 0)) for i, j in sg.pairs]
    target = DirectSum(f, pieces)
    cols = []
    for (alpha, beta) in source.labels:
        u, v = loc_a.of_power(f, alpha), loc_b.of_power(f, beta)
        col = {}
        for (i, j), mod in pieces:
            for s, cu in enumerate(u[i]):
                if not cu:
                    continue
                for t, cv in enumerate(v[j]):
                    if cv:
                        linalg.axpy(f, col, f.mul(cu, cv), target.embed((i, j), mod.coords_of(s, t)))
        cols.append(col)
    iso = LinearMap(source, target, cols)
    return BimoduleDecomposition(f, a, b, sg, source, target, iso, loc_a, loc_b)


# -- the two lemmas behind the decomposition ---------------------------------


def _local_power(f, lf, vec, n):
    out = [f.one] + [0] * (lf.exponent - 1)
    for _ in range(n):
        out = lf.mul(f, out, vec)
    return out


def lemma_failures(f, a, b):
    """Pairs (l, m), m in Sigma(l), where (x^{a/g} - zeta^l)^{p^min(r,s)} != 0 in A_m."""
    sg = sigma_sets(f.p, a, b)
    crt = crt_decompose(f, a)
    g = math.gcd(a, b)
    zeta = f.pow(crt.zeta, sg.a_prime // sg.g)
    bad = []
    for l, part in enumerate(sg.parts_a):
        for m in part:
            lf = crt.factors[m]
            vec = shifted_expansion(f, a // g, lf.center, lf.exponent)
            vec[0] = f.sub(vec[0], f.pow(zeta, l))
            if any(_local_power(f, lf, vec, f.p ** min(sg.r, sg.s))):
                bad.append((l, m))
    return bad


def diagram_failures(f, a, b):
    """Failures of the two commutative squares, checked on generators.

    First square: pi_A(iota_1(z^k)) against the image of pi_C(z^k) under
    z -> x^{a/g} factor by factor.  Second square: theta_i(eps^{p^{r-min}})
    against x^{a g'/g} - 1, and the same on the B side.
    """
    sg = sigma_sets(f.p, a, b)
    g = math.gcd(a, b)
    bad = []
    crt_c = crt_decompose(f, g)
    for side, n, parts in (("A", a, sg.parts_a), ("B", b, sg.parts_b)):
        crt = crt_decompose(f, n)
        lc = local_coordinates(f, n)
        e_min = f.p ** min(sg.r, sg.s)
        for k in range(g):
            mono = [0] * n
            mono[(k * (n // g)) % n] = f.one
            direct = crt.project(mono)
            zc = [0] * g
            zc[k] = f.one
            via_c = crt_c.project(zc)
            for l, part in enumerate(parts):
                for m in part:
                    lf = crt.factors[m]
                    base = shifted_expansion(f, n // g, lf.center, lf.exponent)
                    base[0] = f.sub(base[0], crt_c.factors[l].center)
                    acc = [0] * lf.exponent
                    power = [f.one] + [0] * (lf.exponent - 1)
                    for s in range(e_min):
                        c = via_c[l][s]
                        if c:
                            acc = [f.add(x, f.mul(c, y)) for x, y in zip(acc, power)]
                        power = lf.mul(f, power, base)
                    if acc != direct[m]:
                        bad.append(("square1", side, k, l, m))
        own = sg.r if side == "A" else sg.s
        gp = sg.g
        step = f.p ** (own - min(sg.r, sg.s))
        for m, lf in enumerate(crt.factors):
            eps = [0] * lf.exponent
            if step < lf.exponent:
                eps[step] = f.one
            lhs = lc.rebases[m].from_eps(f, eps)
            rhs = shifted_expansion(f, (n // g) * gp, lf.center, lf.exponent)
            rhs[0] = f.sub(rhs[0], f.one)
            if lhs != rhs:
                bad.append(("square2", side, m))
    return bad
