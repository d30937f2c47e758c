"""The algebra isomorphism kC(C, D, Omega) -> H(C', D', Omega'), built and checked."""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from sympy import nextprime

from ..algebra import LinearMap, homomorphism_failures, rank
from ..ei_category import build_ei_quiver, category_algebra, enumerate_category
from ..errors import TheoremViolation
from ..ffield import DEFAULT_SEED, make_field
from ..gls import HBasisNF, build_H
from .bimodule import bimodule_decomposition, local_coordinates
from .prime_triple import check_prime, construct_prime_triple, sigma_set


def auxiliary_prime(t):
    """Smallest prime coprime to every c_i; stands in for characteristic 0."""
    p = 2
    while any(c % p == 0 for c in t.D):
        p = nextprime(p)
    return p


@dataclass
class VerificationReport:
    triple: dict
    p: int
    field_prime: int
    field: dict
    dim_kC: int
    dim_H: int
    checks: dict = dc_field(default_factory=dict)  # name -> bool
    witnesses: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return all(self.checks.values())

    def to_document(self):
        return {
            "triple": self.triple,
            "p": self.p,
            "field_prime": self.field_prime,
            "field": self.field,
            "dim_kC": self.dim_kC,
            "dim_H": self.dim_H,
            "checks": dict(self.checks),
            "witnesses": [list(map(str, w)) for w in self.witnesses],
            "ok": self.ok,
        }


def triple_document(t):
    return {
        "labels": [list(v) if isinstance(v, tuple) else v for v in t.labels],
        "C": [list(r) for r in t.C.entries],
        "D": list(t.D),
        "Omega": [[list(x) if isinstance(x, tuple) else x for x in pr] for pr in t.omega_sorted()],
    }


@dataclass
class MainIsomorphism:
    pt: object
    kc: object
    h: object
    phi: LinearMap
    report: VerificationReport


def _generator_images(t, pt, f, h):
    """Images of Id_i, eta_i and of each arrow's canonical biset generator."""
    A = h.algebra
    ident, eta = {}, {}
    for i in t.labels:
        loc = local_coordinates(f, t.c(i))
        blocks = pt.block(i)
        ident[i] = {}
        eta[i] = {}
        for (vi, l), coords in zip(blocks, loc.of_power(f, 1)):
            ident[i][A.index[HBasisNF((i, l), (i, l), (), 0, ())]] = f.one
            for s, c in enumerate(coords):
                if c:
                    eta[i][A.index[HBasisNF((i, l), (i, l), (), s, ())]] = c
    arrows = {}
    decs = {}
    hq = h.quiver
    for arrow in build_ei_quiver(t).quiver.arrows:
        i, j = arrow.target, arrow.source
        key = (t.c(i), t.c(j))
        if key not in decs:
            decs[key] = bimodule_decomposition(f, *key)
        dec = decs[key]
        if list(dec.sigma.pairs) != sigma_set(pt.factors, i, j):
            raise TheoremViolation(f"Sigma sets disagree on arrow {arrow}")
        unit = dec.iso.columns[dec.source.labels.index((0, 0))]
        img = {}
        for (li, lj), mod in dec.target.pieces:
            new = [a for a in hq.arrows_between((i, li), (j, lj)) if a.copy == arrow.copy]
            if len(new) != 1:
                raise TheoremViolation(f"no unique lifted arrow for {arrow} at {(li, lj)}")
            alpha = h.arrow(new[0])
            for k, c in dec.target.component((li, lj), unit).items():
                s, u = mod.labels[k]
                term = A.mul(A.mul(h.eps((i, li), s) if s else h.idempotent((i, li)), alpha),
                             h.eps((j, lj), u) if u else h.idempotent((j, lj)))
                for w, x in term.items():
                    img[w] = f.add(img.get(w, 0), f.mul(c, x))
        arrows[arrow] = {w: x for w, x in img.items() if x}
    return ident, eta, arrows


def _extend(kc, h, ident, eta, arrows):
    """phi on every morphism via its normal-form factorization."""
    A = h.algebra
    powers = {}

    def epow(v, k):
        if (v, k) not in powers:
            powers[(v, k)] = A.power(eta[v], k, one=ident[v])
        return powers[(v, k)]

    cols = []
    for m in kc.labels:
        img = epow(m.target, m.head)
        for arrow, b in zip(m.path, m.slots):
            img = A.mul(A.mul(img, arrows[arrow]), epow(arrow.source, b))
        cols.append(img)
    return cols


def build_main_isomorphism(t, p, seed=DEFAULT_SEED, check=True):
    check_prime(p)
    if p == 0:
        fp = auxiliary_prime(t)
        pt = construct_prime_triple(t, 0)
        aux = construct_prime_triple(t, fp)
        if (aux.C, aux.D, aux.Omega) != (pt.C, pt.D, pt.Omega):
            raise TheoremViolation("auxiliary prime does not reproduce the characteristic-0 data")
    else:
        fp = p
        pt = construct_prime_triple(t, p)
    N = math.lcm(*pt.factors.d)
    f = make_field(fp, N, seed)
    kc = category_algebra(enumerate_category(build_ei_quiver(t)), f)
    h = build_H(pt.as_triple(), f)
    report = VerificationReport(triple_document(t), p, fp, f.describe(), kc.dim, h.dim)
    if kc.dim != h.dim:
        raise TheoremViolation(f"dim kC = {kc.dim} but dim H(C', D', Omega') = {h.dim}")
    ident, eta, arrows = _generator_images(t, pt, f, h)
    phi = LinearMap(kc, h.algebra, _extend(kc, h, ident, eta, arrows))
    report.checks["dimensions"] = True
    if check:
        fails = homomorphism_failures(phi, limit=5)
        report.checks["homomorphism"] = not fails
        report.witnesses = fails
        report.checks["bijective"] = rank(phi) == kc.dim
    return MainIsomorphism(pt, kc, h, phi, report)
