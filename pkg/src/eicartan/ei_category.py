"""Free EI categories of Cartan type.

For a Cartan triple (C, D, Omega) the EI quiver has Q° as underlying quiver,
the cyclic group X(i) = <eta_i | eta_i^{c_i}> at each vertex and the biset
X(i) x_{G_ij} X(j) on each arrow alpha_ij^(g).  Morphisms are enumerated in
the normal form of :mod:`eicartan.words` (modular head).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from . import words
from .algebra import (Bimodule, CyclicAlgebra, GradedTensorData, StructureConstantAlgebra,
                      build_tensor_algebra, tensor_universal_map)
from .cartan import CartanMatrix, CartanTriple, build_quiver
from .errors import InputError, NotCartanType


class MorphismNF(words.PathWord):
    symbol = "η"


@dataclass
class Biset:
    """X(i) x_G X(j) as an explicit quotient of Z/c_i x Z/c_j.

    Elements are canonical class representatives ``(a, b)``; ``left`` and
    ``right`` are the permutations induced by eta_i and eta_j.
    """

    c_left: int
    c_right: int
    elements: list
    left: list
    right: list

    @classmethod
    def balanced_product(cls, c_i, c_j):
        g = math.gcd(c_i, c_j)
        si, sj = c_i // g, c_j // g
        # (x h, y) ~ (x, h y) for h = eta_ij, embedded as eta_i^{si}, eta_j^{sj}
        parent = {pr: pr for pr in product(range(c_i), range(c_j))}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in product(range(c_i), range(c_j)):
            x, y = find(((a + si) % c_i, b)), find((a, (b + sj) % c_j))
            if x != y:
                parent[max(x, y)] = min(x, y)
        classes = sorted({find(pr) for pr in parent})
        pos = {rep: k for k, rep in enumerate(classes)}
        left = [pos[find(((a + 1) % c_i, b))] for a, b in classes]
        right = [pos[find((a, (b + 1) % c_j))] for a, b in classes]
        return cls(c_i, c_j, classes, left, right)

    def __len__(self):
        return len(self.elements)

    def orbit_count(self, side):
        perm, order = (self.left, self.c_left) if side == "left" else (self.right, self.c_right)
        seen, orbits = set(), 0
        for x in range(len(self)):
            if x in seen:
                continue
            orbits += 1
            y = x
            while y not in seen:
                seen.add(y)
                y = perm[y]
        return orbits

    def is_free(self, side):
        order = self.c_left if side == "left" else self.c_right
        return self.orbit_count(side) * order == len(self)


@dataclass
class EIQuiver:
    triple: CartanTriple
    quiver: object  # Q°
    group_order: dict
    bisets: dict  # Arrow -> Biset

    def compose(self, g, f):
        """g ∘ f on normal forms."""
        if g.source != f.target:
            raise InputError(f"cannot compose {g} after {f}")
        res = words.concatenate(self.group_order, g, f, nilpotent=False)
        path, head, slots = res
        return MorphismNF(f.source, g.target, path, head, slots)

    def identity(self, v):
        return MorphismNF(v, v, (), 0, ())

    def eta(self, v, k=1):
        return MorphismNF(v, v, (), k % self.group_order[v], ())

    def arrow(self, arrow, head=0, slot=0):
        res = words.normalize(self.group_order, (arrow,), head, (slot,), 0, nilpotent=False)
        return MorphismNF(arrow.source, arrow.target, (arrow,), res[0], res[1])


def build_ei_quiver(t):
    q = build_quiver(t).loop_free()
    order = t.symmetrizer()
    bisets = {a: Biset.balanced_product(order[a.target], order[a.source]) for a in q.arrows}
    return EIQuiver(t, q, order, bisets)


def compose(q, g, f):
    return q.compose(g, f)


class FreeEICategory:
    """A finite category presented by its full composition table.

    ``compose_table[(g, f)]`` is the index of g ∘ f for composable pairs.
    ``generators`` optionally maps each object to a chosen generator of Aut(x).
    """

    def __init__(self, objects, morphisms, source, target, compose_table, identities,
                 generators=None, ei_quiver=None):
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        self.source = list(source)
        self.target = list(target)
        self.compose_table = compose_table
        self.identities = identities
        self.generators = generators or {}
        self.ei_quiver = ei_quiver
        self.index = {m: k for k, m in enumerate(self.morphisms)}

    def __len__(self):
        return len(self.morphisms)

    def hom(self, x, y):
        return [k for k in range(len(self)) if self.source[k] == x and self.target[k] == y]

    def comp(self, g, f):
        return self.compose_table[(g, f)]

    def check_associativity(self):
        n = len(self)
        by_target = {}
        for k in range(n):
            by_target.setdefault(self.target[k], []).append(k)
        for h in range(n):
            for g in by_target.get(self.source[h], []):
                hg = self.comp(h, g)
                for f in by_target.get(self.source[g], []):
                    if self.comp(hg, f) != self.comp(h, self.comp(g, f)):
                        return False
        return True

    def check_identities(self):
        for k in range(len(self)):
            if self.comp(self.identities[self.target[k]], k) != k:
                return False
            if self.comp(k, self.identities[self.source[k]]) != k:
                return False
        return True

    def is_ei(self):
        for x in self.objects:
            ends = self.hom(x, x)
            ident = self.identities[x]
            for e in ends:
                if not any(self.comp(e, e2) == ident for e2 in ends):
                    return False
        return True

    def unfactorizable(self):
        """Non-endomorphisms not of the form beta ∘ gamma with both non-endomorphisms."""
        non_endo = [k for k in range(len(self)) if self.source[k] != self.target[k]]
        factorizable = set()
        for b in non_endo:
            for c in non_endo:
                if self.source[b] == self.target[c]:
                    factorizable.add(self.comp(b, c))
        return [k for k in non_endo if k not in factorizable]


def enumerate_category(q):
    morphisms = [MorphismNF(*w) for w in words.enumerate_words(q.quiver, q.group_order)]
    index = {m: k for k, m in enumerate(morphisms)}
    table = {}
    for gi, g in enumerate(morphisms):
        for fi, f in enumerate(morphisms):
            if g.source == f.target:
                table[(gi, fi)] = index[q.compose(g, f)]
    identities = {v: index[q.identity(v)] for v in q.quiver.vertices}
    gens = {v: index[q.eta(v)] for v in q.quiver.vertices}
    return FreeEICategory(q.quiver.vertices, morphisms, [m.source for m in morphisms],
                          [m.target for m in morphisms], table, identities, gens, q)


def category_algebra(cat, field):
    one = field.one
    table = {pair: {h: one} for pair, h in cat.compose_table.items()}
    unit = {cat.identities[x]: one for x in cat.objects}
    alg = StructureConstantAlgebra(field, cat.morphisms, table, unit, "kC")
    alg.category = cat
    return alg


def biset_bimodule(field, key, arrow, biset):
    one = field.one
    left = [{biset.left[b]: one} for b in range(len(biset))]
    right = [{biset.right[b]: one} for b in range(len(biset))]
    gen = biset.elements.index((0, 0))
    reps = list(biset.elements)
    return Bimodule(field, key, arrow.target, arrow.source, biset.elements, left, right, reps,
                    biset.c_left, gen)


def tensor_data(q, field):
    base = {v: CyclicAlgebra(v, q.group_order[v], field.one) for v in q.quiver.vertices}
    mods = [biset_bimodule(field, arrow, arrow, q.bisets[arrow]) for arrow in q.quiver.arrows]
    return GradedTensorData(field, base, mods, q.quiver.vertices)


def tensor_form(q, field, kc=None):
    """T_A(V) and the identity-on-generators map T_A(V) -> kC."""
    data = tensor_data(q, field)
    T = build_tensor_algebra(data, "T_A(V)")
    if kc is None:
        kc = category_algebra(enumerate_category(q), field)
    base = {v: kc.element(q.eta(v)) for v in q.quiver.vertices}
    idem = {v: kc.element(q.identity(v)) for v in q.quiver.vertices}
    gens = {a: kc.element(q.arrow(a)) for a in q.quiver.arrows}
    return data, tensor_universal_map(T, kc, base, idem, gens)


# -- intrinsic recognition ----------------------------------------------------


@dataclass
class CartanRecognition:
    triple: CartanTriple
    unfactorizable: dict  # (i, j) -> list of morphism indices in Hom^0(x_j, x_i)
    orbit_count: dict  # (i, j) -> m_ij


def _cyclic_generator(cat, x):
    ends = cat.hom(x, x)
    ident = cat.identities[x]
    for cand in ends:
        seen, cur = {ident}, cand
        while cur != ident:
            seen.add(cur)
            cur = cat.comp(cand, cur)
        if len(seen) == len(ends):
            return cand
    return None


def _power(cat, x, gen, k):
    cur = cat.identities[x]
    for _ in range(k):
        cur = cat.comp(gen, cur)
    return cur


def recognize_cartan_type(cat, search_generators=False, return_details=False):
    """Recover (C, D, Omega) from a free EI category satisfying (EC1)-(EC3)."""
    objs = cat.objects
    order, gens = {}, {}
    for x in objs:
        ends = cat.hom(x, x)
        gen = cat.generators.get(x)
        if gen is None:
            if not search_generators:
                raise InputError(f"no generator supplied for Aut({x})")
            gen = _cyclic_generator(cat, x)
            if gen is None:
                raise NotCartanType("EC1", f"Aut({x}) is not cyclic")
        powers = {_power(cat, x, gen, k) for k in range(len(ends))}
        if powers != set(ends):
            raise NotCartanType("EC1", f"Aut({x}) is not generated by the given element")
        order[x], gens[x] = len(ends), gen

    hom0 = {}
    for k in cat.unfactorizable():
        hom0.setdefault((cat.target[k], cat.source[k]), []).append(k)

    m = {}
    for (i, j), arrows in hom0.items():
        ci, cj = order[i], order[j]
        g = math.gcd(ci, cj)
        lpow = [_power(cat, i, gens[i], k) for k in range(ci)]
        rpow = [_power(cat, j, gens[j], k) for k in range(cj)]
        for alpha in arrows:
            if len({cat.comp(h, alpha) for h in lpow}) != ci:
                raise NotCartanType("EC2", f"left Aut({i})-action on Hom0({j},{i}) is not free")
            if len({cat.comp(alpha, h) for h in rpow}) != cj:
                raise NotCartanType("EC2", f"right Aut({j})-action on Hom0({j},{i}) is not free")
            if cat.comp(lpow[(ci // g) % ci], alpha) != cat.comp(alpha, rpow[(cj // g) % cj]):
                raise NotCartanType("EC3", f"eta_i^(c_i/g) α != α eta_j^(c_j/g) on Hom0({j},{i})")
        remaining, orbits = set(arrows), 0
        while remaining:
            alpha = min(remaining)
            orbit = {cat.comp(cat.comp(h, alpha), h2) for h in lpow for h2 in rpow}
            if len(orbit) != ci * cj // g:
                raise AssertionError("orbit map is not bijective")
            remaining -= orbit
            orbits += 1
        m[(i, j)] = orbits

    labels = tuple(range(1, len(objs) + 1))
    pos = {x: k for k, x in enumerate(objs)}
    rows = [[2 if a == b else 0 for b in range(len(objs))] for a in range(len(objs))]
    for (i, j), mij in m.items():
        if (j, i) in m:
            raise NotCartanType("EC2", f"unfactorizable morphisms in both directions between {i}, {j}")
        g = math.gcd(order[i], order[j])
        rows[pos[i]][pos[j]] = -(order[j] // g) * mij
        rows[pos[j]][pos[i]] = -(order[i] // g) * mij
        assert mij == math.gcd(rows[pos[i]][pos[j]], rows[pos[j]][pos[i]])
    C = CartanMatrix.from_rows(rows, labels)
    D = tuple(order[x] for x in objs)
    Omega = frozenset((labels[pos[i]], labels[pos[j]]) for (i, j) in m)
    t = CartanTriple(C, D, Omega)
    if return_details:
        return CartanRecognition(t, hom0, m)
    return t


def category_document(cat):
    return {
        "objects": list(cat.objects),
        "morphisms": [{"index": k, "source": m.source, "target": m.target, "normal_form": str(m)}
                      for k, m in enumerate(cat.morphisms)],
        "composition": [[g, f, h] for (g, f), h in sorted(cat.compose_table.items())],
    }
