"""Structural facts about (C', D'): quadratic forms, connectedness, multiples of D, types."""

from __future__ import annotations

from dataclasses import dataclass

from ..cartan import CartanTriple, classify, connected_components, valued_graph
from ..ffield import split_order
from ..graphs import isomorphic, is_isomorphism
from .prime_triple import construct_prime_triple


def prime_graph(t, p):
    return valued_graph(construct_prime_triple(t, p).C)


def connectedness(t, p):
    """Number of components of Gamma' (1 expected for connected C and minimal D)."""
    return len(connected_components(prime_graph(t, p)))


@dataclass
class MultipleReport:
    c: int
    d: int
    components: int
    expected_components: int  # d times the component count of Gamma'
    relabelings_ok: bool
    isomorphic_ok: bool

    @property
    def ok(self):
        return self.components == self.expected_components and self.relabelings_ok and self.isomorphic_ok


def multiple_symmetrizer_graph(t, p, c):
    """Compare Gamma'' from (C, cD, Omega) with d copies of Gamma' from (C, D, Omega)."""
    _, d = split_order(c, p)
    pt1 = construct_prime_triple(t, p)
    t2 = CartanTriple(t.C, tuple(c * x for x in t.D), t.Omega)
    pt2 = construct_prime_triple(t2, p)
    g1, g2 = valued_graph(pt1.C), valued_graph(pt2.C)
    fs = pt1.factors
    relabel_ok, iso_ok = True, True
    comps = connected_components(g2)
    for a in range(d):
        verts = []
        mapping = {}
        for (i, m) in pt2.M:
            k = t.labels.index(i)
            pr = fs.pr(k)
            if (m * pr - a) % d:
                continue
            verts.append((i, m))
            rhs = ((m * pr - a) // d) % fs.d[k]
            # l_i p^{r_i} = rhs mod d_i
            inv = pow(pr, -1, fs.d[k]) if fs.d[k] > 1 else 0
            mapping[(i, m)] = (i, (rhs * inv) % fs.d[k])
        sub = g2.subgraph(verts)
        relabel_ok &= is_isomorphism(sub, g1, mapping)
        iso_ok &= isomorphic(sub, g1)
    expected = d * len(connected_components(g1))
    return MultipleReport(c, d, len(comps), expected, relabel_ok, iso_ok)


@dataclass
class ConsistencyReport:
    source_tag: str
    component_tags: list
    mutually_isomorphic: bool

    @property
    def ok(self):
        return self.mutually_isomorphic and all(tag == self.source_tag for tag in self.component_tags)


def classify_prime_triple_consistency(t, p, details=False):
    tags = classify(t.C, t.D)
    if len(tags) != 1:
        raise ValueError("C must be connected")
    pt = construct_prime_triple(t, p)
    g = valued_graph(pt.C)
    comps = connected_components(g)
    ctags = [tc.tag for tc in classify(pt.C, pt.D)]
    first = g.subgraph(comps[0])
    same = all(isomorphic(first, g.subgraph(comp)) for comp in comps[1:])
    rep = ConsistencyReport(tags[0].tag, ctags, same)
    return rep if details else rep.ok
