"""The algebra H(C, D, Omega): generators eps_i and alpha_ij^(g) subject to

    (H1)  eps_i^{c_i} = 0
    (H2)  eps_i^{c_i/g} alpha = alpha eps_j^{c_j/g},  g = gcd(c_i, c_j)

Built directly on the normal-form words of :mod:`eicartan.words` with a
nilpotent head, and independently as T_B(W) from the balanced tensor
products H_i (x)_{H_ij} H_j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import words
from .algebra import (Bimodule, CyclicAlgebra, GradedTensorData, StructureConstantAlgebra,
                      balanced_tensor, build_tensor_algebra, idempotent_corner,
                      tensor_universal_map)
from .cartan import build_quiver


class HBasisNF(words.PathWord):
    symbol = "ε"


@dataclass
class GLSAlgebra:
    triple: object
    field: object
    algebra: StructureConstantAlgebra
    quiver: object
    order: dict

    @property
    def dim(self):
        return self.algebra.dim

    def idempotent(self, v):
        return self.algebra.element(HBasisNF(v, v, (), 0, ()))

    def eps(self, v, k=1):
        if k >= self.order[v]:
            return {}
        return self.algebra.element(HBasisNF(v, v, (), k, ()))

    def arrow(self, arrow):
        return self.algebra.element(HBasisNF(arrow.source, arrow.target, (arrow,), 0, (0,)))


def build_H(t, f):
    q = build_quiver(t).loop_free()
    order = t.symmetrizer()
    labels = [HBasisNF(*w) for w in words.enumerate_words(q, order)]
    index = {lab: k for k, lab in enumerate(labels)}
    table = {}
    for u, lu in enumerate(labels):
        for v, lv in enumerate(labels):
            if lu.source != lv.target:
                continue
            res = words.concatenate(order, lu, lv, nilpotent=True)
            if res is not None:
                w = HBasisNF(lv.source, lu.target, *res)
                table[(u, v)] = {index[w]: f.one}
    unit = {index[HBasisNF(v, v, (), 0, ())]: f.one for v in q.vertices}
    alg = StructureConstantAlgebra(f, labels, table, unit, "H")
    return GLSAlgebra(t, f, alg, q, order)


def check_relations(h):
    """Failures of (H1) and (H2) evaluated as elements of ``h``."""
    A, bad = h.algebra, []
    for v in h.quiver.vertices:
        e = h.eps(v)
        if A.power(e, h.order[v], one=h.idempotent(v)):
            bad.append(("H1", v))
    for a in h.quiver.arrows:
        ci, cj = h.order[a.target], h.order[a.source]
        g = math.gcd(ci, cj)
        left = A.mul(A.power(h.eps(a.target), ci // g, one=h.idempotent(a.target)), h.arrow(a))
        right = A.mul(h.arrow(a), A.power(h.eps(a.source), cj // g, one=h.idempotent(a.source)))
        if left != right:
            bad.append(("H2", a))
    return bad


def tensor_data_H(t, f):
    q = build_quiver(t).loop_free()
    order = t.symmetrizer()
    base = {v: CyclicAlgebra(v, order[v], 0) for v in q.vertices}
    mods = [balanced_tensor(f, a, a.target, a.source, order[a.target], order[a.source], 0)
            for a in q.arrows]
    return GradedTensorData(f, base, mods, q.vertices)


def tensor_form_H(t, f, h=None):
    """T_B(W) and the identity-on-generators map T_B(W) -> H."""
    if h is None:
        h = build_H(t, f)
    data = tensor_data_H(t, f)
    T = build_tensor_algebra(data, "T_B(W)")
    base = {v: h.eps(v) for v in h.quiver.vertices}
    idem = {v: h.idempotent(v) for v in h.quiver.vertices}
    gens = {a: h.arrow(a) for a in h.quiver.arrows}
    return data, tensor_universal_map(T, h.algebra, base, idem, gens)


def corner_bases(h):
    """(i, j) -> labels spanning e_i H e_j (nonempty corners only)."""
    out = {}
    for lab in h.algebra.labels:
        out.setdefault((lab.target, lab.source), []).append(lab)
    return out


def corner(h, i, j=None):
    """e_i H e_i as an algebra (j omitted) via idempotent_corner."""
    if j is not None and j != i:
        raise ValueError("only diagonal corners are algebras")
    return idempotent_corner(h.algebra, h.idempotent(i))
