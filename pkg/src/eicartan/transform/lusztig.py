"""Symmetrizable Cartan matrices versus graphs with admissible automorphisms."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..cartan import Arrow, CartanMatrix, CartanTriple, Quiver, as_cartan, build_quiver
from ..errors import InputError
from .prime_triple import check_prime, construct_prime_triple


@dataclass(frozen=True)
class GraphWithAutomorphism:
    vertices: tuple
    edges: dict  # frozenset({u, v}) -> multiplicity (no loops)
    sigma: dict  # vertex -> vertex

    def __post_init__(self):
        vs = set(self.vertices)
        if set(self.sigma) != vs or set(self.sigma.values()) != vs:
            raise InputError("sigma must be a permutation of the vertices")
        for e, m in self.edges.items():
            if len(e) != 2 or not e <= vs or m <= 0:
                raise InputError(f"bad edge {set(e)}")
            image = frozenset(self.sigma[v] for v in e)
            if self.edges.get(image) != m:
                raise InputError("sigma is not a graph automorphism")

    def orbits(self):
        seen, out = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            orb, w = [], v
            while w not in seen:
                seen.add(w)
                orb.append(w)
                w = self.sigma[w]
            out.append(tuple(orb))
        return out

    def is_admissible(self):
        where = {v: k for k, orb in enumerate(self.orbits()) for v in orb}
        return all(len({where[v] for v in e}) == 2 for e in self.edges)


def lusztig_forward(C, D):
    C = as_cartan(C)
    D = tuple(D)
    verts = tuple((i, l) for k, i in enumerate(C.labels) for l in range(D[k]))
    edges = {}
    for a, i in enumerate(C.labels):
        for b, j in enumerate(C.labels):
            if a >= b or C(i, j) == 0:
                continue
            g = math.gcd(D[a], D[b])
            m = math.gcd(C(i, j), C(j, i))
            for li in range(D[a]):
                for lj in range(D[b]):
                    if (li - lj) % g == 0:
                        edges[frozenset(((i, li), (j, lj)))] = m
    sigma = {(i, l): (i, (l + 1) % D[k]) for k, i in enumerate(C.labels) for l in range(D[k])}
    return GraphWithAutomorphism(verts, edges, sigma)


@dataclass(frozen=True)
class Folding:
    C: CartanMatrix
    D: tuple
    orbits: tuple  # orbit k <-> label k + 1


def lusztig_inverse(gs):
    if not gs.is_admissible():
        raise InputError("sigma is not admissible: an edge joins two vertices of one orbit")
    orbits = sorted(gs.orbits(), key=lambda orb: gs.vertices.index(min(orb, key=gs.vertices.index)))
    where = {v: k for k, orb in enumerate(orbits) for v in orb}
    n = len(orbits)
    count = [[0] * n for _ in range(n)]
    for e, m in gs.edges.items():
        u, v = tuple(e)
        count[where[u]][where[v]] += m
        count[where[v]][where[u]] += m
    rows = [[2 if a == b else 0 for b in range(n)] for a in range(n)]
    for a in range(n):
        for b in range(n):
            if a != b and count[a][b]:
                q, rem = divmod(count[a][b], len(orbits[a]))
                if rem:
                    raise InputError("edge count between orbits is not divisible by the orbit size")
                rows[a][b] = -q
    C = CartanMatrix.from_rows(rows, tuple(range(1, n + 1)))
    return Folding(C, tuple(len(orb) for orb in orbits), tuple(orbits))


def round_trip_cd(C, D):
    """inverse(forward(C, D)) relabelled back to C's labels equals (C, D)."""
    C = as_cartan(C)
    fold = lusztig_inverse(lusztig_forward(C, D))
    back = fold.C.relabel({k + 1: orb[0][0] for k, orb in enumerate(fold.orbits)})
    return back == C and fold.D == tuple(D)


def orientation_correspondence(t):
    """(Delta, sigma): edges of the forward graph oriented along Omega."""
    gs = lusztig_forward(t.C, t.D)
    arrows = []
    for (i, j) in t.omega_sorted():
        for e, m in sorted(gs.edges.items(), key=lambda kv: sorted(kv[0])):
            ends = {v[0]: v for v in e}
            if set(ends) == {i, j}:
                for g in range(1, m + 1):
                    arrows.append(Arrow(ends[i], ends[j], g))
    delta = Quiver(gs.vertices, tuple(sorted(arrows)), ())
    if not delta.is_acyclic():
        raise AssertionError("Delta has an oriented cycle")
    moved = {Arrow(gs.sigma[a.target], gs.sigma[a.source], a.copy) for a in delta.arrows}
    if moved != set(delta.arrows):
        raise AssertionError("sigma is not a quiver automorphism of Delta")
    return delta, gs.sigma


@dataclass
class CompatibilityResult:
    ok: bool
    checks: dict
    report: object = None


def compatibility_check(t, p, verify_algebra=True):
    check_prime(p)
    if p and any(c % p == 0 for c in t.D):
        raise InputError(f"p = {p} divides an entry of D")
    pt = construct_prime_triple(t, p)
    checks = {
        "D' is the identity": all(d == 1 for d in pt.D),
        "C' is symmetric": pt.C.is_symmetric(),
    }
    delta, _ = orientation_correspondence(t)
    q = build_quiver(pt.as_triple())
    checks["vertices agree"] = tuple(q.vertices) == tuple(delta.vertices)
    checks["arrows agree"] = set(q.arrows) == set(delta.arrows)
    report = None
    if verify_algebra:
        from .theorem import build_main_isomorphism
        report = build_main_isomorphism(t, p).report
        checks["algebra isomorphism"] = report.ok
    return CompatibilityResult(all(checks.values()), checks, report)


def forward_of_folding(gs):
    """forward(inverse(gs)) together with the folding, for comparison with gs."""
    fold = lusztig_inverse(gs)
    return lusztig_forward(fold.C, fold.D), fold
