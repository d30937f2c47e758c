"""Finite-dimensional associative algebras given by structure constants,
linear maps between them, and tensor algebras T_A(V) over a product of
cyclic algebras k[t]/(t^n - lam).

Elements are sparse dicts ``{basis index: coeff}`` with coefficients in the
algebra's FieldSpec (log encoding, see :mod:`eicartan.ffield`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import linalg
from .cartan import _find_cycle
from .errors import InputError, NotFiniteDimensional


class StructureConstantAlgebra:
    def __init__(self, field, labels, table, unit, name=""):
        self.field = field
        self.labels = tuple(labels)
        self.index = {lab: k for k, lab in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise InputError("basis labels must be distinct")
        self.table = {k: v for k, v in table.items() if v}
        self.unit = dict(unit)
        self.name = name
        self._rows = {}
        self._cols = {}
        for (u, v), prod in self.table.items():
            self._rows.setdefault(u, {})[v] = prod
            self._cols.setdefault(v, {})[u] = prod

    @property
    def dim(self):
        return len(self.labels)

    def basis(self, k):
        return {k: self.field.one}

    def element(self, label):
        return {self.index[label]: self.field.one}

    def product(self, u, v):
        """Product of basis elements u * v as a sparse vector."""
        return self.table.get((u, v), {})

    def mul(self, x, y):
        f = self.field
        out = {}
        for u, a in x.items():
            row = self._rows.get(u)
            if not row:
                continue
            for v, b in y.items():
                prod = row.get(v)
                if prod is None:
                    continue
                linalg.axpy(f, out, f.mul(a, b), prod)
        return out

    def power(self, x, k, one=None):
        out = dict(self.unit if one is None else one)
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def add(self, x, y):
        out = dict(x)
        return linalg.axpy(self.field, out, self.field.one, y)

    def is_monomial(self):
        return all(len(prod) == 1 for prod in self.table.values())

    def right_support(self, u):
        return self._rows.get(u, {})

    def left_support(self, v):
        return self._cols.get(v, {})

    def __repr__(self):
        return f"StructureConstantAlgebra({self.name or '?'}, dim={self.dim})"


def check_unit(alg):
    for k in range(alg.dim):
        e = alg.basis(k)
        if alg.mul(alg.unit, e) != e or alg.mul(e, alg.unit) != e:
            return False
    return True


def check_associativity(alg):
    """Exhaustive (uv)w == u(vw) over basis triples.

    Triples where both sides vanish structurally are skipped: a triple is
    visited iff some term of (uv)w or of u(vw) is nonzero.
    """
    seen = set()
    for (u, v), uv in alg.table.items():
        for x in uv:
            for w in alg.right_support(x):
                seen.add((u, v, w))
    for (v, w), vw in alg.table.items():
        for y in vw:
            for u in alg.left_support(y):
                seen.add((u, v, w))
    for u, v, w in seen:
        left = alg.mul(alg.product(u, v), alg.basis(w))
        right = alg.mul(alg.basis(u), alg.product(v, w))
        if left != right:
            return False
    return True


def corrupt_table(alg, pair=None, replacement=None):
    """Copy of ``alg`` with one structure constant replaced; a negative control."""
    table = dict(alg.table)
    if pair is None:
        pair = next(iter(sorted(table)))
    if replacement is None:
        old = table.get(pair, {})
        w = (max(old) + 1) % alg.dim if old else 0
        replacement = {w: alg.field.one}
    table[pair] = replacement
    return StructureConstantAlgebra(alg.field, alg.labels, table, alg.unit, alg.name + "*")


@dataclass
class LinearMap:
    source: StructureConstantAlgebra
    target: StructureConstantAlgebra
    columns: list  # columns[k] = image of source basis element k (sparse, target indices)

    def __call__(self, x):
        f = self.target.field
        out = {}
        for k, c in x.items():
            linalg.axpy(f, out, c, self.columns[k])
        return out

    def matrix(self):
        M = [[0] * self.source.dim for _ in range(self.target.dim)]
        for k, col in enumerate(self.columns):
            for r, c in col.items():
                M[r][k] = c
        return M

    @classmethod
    def identity(cls, alg):
        return cls(alg, alg, [alg.basis(k) for k in range(alg.dim)])

    @classmethod
    def from_matrix(cls, source, target, M):
        cols = []
        for k in range(source.dim):
            cols.append({r: M[r][k] for r in range(target.dim) if M[r][k]})
        return cls(source, target, cols)


def homomorphism_failures(f_map, limit=None):
    """Witnesses (u, v) with f(uv) != f(u) f(v); ``('unit',)`` if f(1) != 1."""
    src, tgt = f_map.source, f_map.target
    if src.field is not tgt.field:
        raise InputError("source and target must share a field")
    out = []
    if f_map(src.unit) != tgt.unit:
        out.append(("unit",))
    for u in range(src.dim):
        fu = f_map.columns[u]
        for v in range(src.dim):
            if tgt.mul(fu, f_map.columns[v]) != f_map(src.product(u, v)):
                out.append((src.labels[u], src.labels[v]))
                if limit is not None and len(out) >= limit:
                    return out
    return out


def is_algebra_homomorphism(f_map):
    return not homomorphism_failures(f_map, limit=1)


def rank(f_map):
    return linalg.sparse_rank(f_map.target.field, f_map.columns)


def is_bijective(f_map):
    if f_map.source.dim != f_map.target.dim:
        return False
    return rank(f_map) == f_map.source.dim


def idempotent_corner(alg, e):
    """eAe for an idempotent e whose corner is spanned by basis elements."""
    if alg.mul(e, e) != e:
        raise InputError("element is not idempotent")
    keep = []
    for k in range(alg.dim):
        eue = alg.mul(alg.mul(e, alg.basis(k)), e)
        if eue == alg.basis(k):
            keep.append(k)
        elif eue:
            raise InputError("corner is not spanned by basis elements")
    pos = {k: n for n, k in enumerate(keep)}
    table = {}
    for u in keep:
        for v in keep:
            prod = alg.product(u, v)
            if prod:
                if any(w not in pos for w in prod):
                    raise AssertionError("corner not closed under multiplication")
                table[(pos[u], pos[v])] = {pos[w]: c for w, c in prod.items()}
    unit = {pos[k]: c for k, c in e.items()}
    return StructureConstantAlgebra(alg.field, [alg.labels[k] for k in keep], table, unit,
                                    f"{alg.name}-corner")


def to_document(alg):
    f = alg.field
    return {
        "name": alg.name,
        "field": f.describe(),
        "dim": alg.dim,
        "basis": [str(lab) for lab in alg.labels],
        "unit": [[k, list(f.to_vector(c))] for k, c in sorted(alg.unit.items())],
        "table": [[u, v, [[w, list(f.to_vector(c))] for w, c in sorted(prod.items())]]
                  for (u, v), prod in sorted(alg.table.items())],
    }


# ---------------------------------------------------------------------------
# Tensor algebras


@dataclass(frozen=True)
class CyclicAlgebra:
    """k[t]/(t^order - lam) with lam in {0, 1}: group algebra or truncated polynomials."""

    vertex: object
    order: int
    lam: int

    def mul_exponents(self, f, a, b):
        """t^a t^b as ``(coeff, exponent)`` or ``None``."""
        s = a + b
        if s < self.order:
            return f.one, s
        if self.lam == 0:
            return None
        return self.lam, s - self.order


class Bimodule:
    """A finite-dimensional A_target-A_source bimodule generated by one element.

    ``left[b]`` / ``right[b]`` are t_target * basis_b and basis_b * t_source
    as sparse vectors; ``reps[b] = (a, c)`` records basis_b = t^a * gen * t^c.
    The module must be free as a left module over A_target.
    """

    def __init__(self, field, key, target, source, labels, left, right, reps, target_order, gen=0):
        self.field = field
        self.key = key
        self.target = target
        self.source = source
        self.labels = tuple(labels)
        self.left = left
        self.right = right
        self.reps = reps
        self.target_order = target_order
        self.gen = gen
        self._right_cache = {}
        self._left_basis()

    @property
    def dim(self):
        return len(self.labels)

    def act(self, vec, table, times):
        f = self.field
        for _ in range(times):
            out = {}
            for b, c in vec.items():
                linalg.axpy(f, out, c, table[b])
            vec = out
        return vec

    def right_power(self, b, a):
        key = (b, a)
        if key not in self._right_cache:
            self._right_cache[key] = self.act({b: self.field.one}, self.right, a)
        return self._right_cache[key]

    def left_power(self, b, a):
        return self.act({b: self.field.one}, self.left, a)

    def _left_basis(self):
        f = self.field
        n = self.target_order
        chosen, vectors = [], []
        for b in range(self.dim):
            orbit = [self.left_power(b, a) for a in range(n)]
            if linalg.sparse_rank(f, vectors + orbit) == len(vectors) + n:
                chosen.append(b)
                vectors.extend(orbit)
        if len(vectors) != self.dim:
            raise InputError(f"bimodule {self.key} is not free as a left module")
        self.free_basis = chosen
        M = [[0] * self.dim for _ in range(self.dim)]
        for col, vec in enumerate(vectors):
            for r, c in vec.items():
                M[r][col] = c
        Minv = linalg.mat_inv(f, M)
        # coords[b] = {(a, k): coeff} with basis_b = sum coeff * t^a * k
        self.coords = []
        for b in range(self.dim):
            entry = {}
            for col in range(self.dim):
                c = Minv[col][b]
                if c:
                    k, a = chosen[col // n], col % n
                    entry[(a, k)] = c
            self.coords.append(entry)

    def check_reps(self):
        gen = {self.gen: self.field.one}
        for b, (a, c) in enumerate(self.reps):
            v = self.act(self.act(gen, self.left, a), self.right, c)
            if v != {b: self.field.one}:
                return False
        return True

    def actions_commute(self):
        for b in range(self.dim):
            lr = self.act(self.act({b: self.field.one}, self.left, 1), self.right, 1)
            rl = self.act(self.act({b: self.field.one}, self.right, 1), self.left, 1)
            if lr != rl:
                return False
        return True


def balanced_tensor(f, key, target, source, ci, cj, lam):
    """k[x]/(x^ci - lam) (x)_R k[y]/(y^cj - lam) with R = k[z]/(z^g - lam), g = gcd(ci, cj),
    lam in {0, 1}.

    z acts through x^{ci/g} on the left factor and y^{cj/g} on the right one.
    Computed as a quotient of the plain tensor product; the surviving basis is
    x^a (x) y^b with b < cj/g.
    """
    g = math.gcd(ci, cj)
    si, sj = ci // g, cj // g
    keys = [(a, b) for a in range(ci) for b in range(cj)]

    def reduce_exp(e, c):
        if e < c:
            return f.one, e
        if lam == 0:
            return None
        return f.one, e % c  # lam = 1

    def mono(a, b):
        x, y = reduce_exp(a, ci), reduce_exp(b, cj)
        if x is None or y is None:
            return {}
        return {(x[1], y[1]): f.mul(x[0], y[0])}

    relations = []
    for a in range(ci):
        for b in range(cj):
            rel = dict(mono(a + si, b))
            linalg.axpy(f, rel, f.neg(f.one), mono(a, b + sj))
            if rel:
                relations.append(rel)
    # rewrite large right exponents first
    quot = linalg.QuotientSpace(f, keys, relations, order=lambda k: (-k[1], k[0]))
    basis = quot.complement
    pos = {k: n for n, k in enumerate(basis)}

    def coords(vec):
        return {pos[k]: x for k, x in quot.reduce(vec).items()}

    left = [coords(mono(a + 1, b)) for a, b in basis]
    right = [coords(mono(a, b + 1)) for a, b in basis]
    mod = Bimodule(f, key, target, source, basis, left, right, list(basis), ci, pos[(0, 0)])
    mod.quotient = quot
    mod.coords_of = lambda a, b: coords(mono(a, b))
    return mod


@dataclass
class GradedTensorData:
    field: object
    base: dict  # vertex -> CyclicAlgebra
    bimodules: list  # Bimodule objects (degree-one part)
    vertices: tuple = ()

    def __post_init__(self):
        if not self.vertices:
            self.vertices = tuple(self.base)


@dataclass(frozen=True)
class TensorBasis:
    """Basis label of T_A(V): degree 0 is t_vertex^exponent, degree n a path tensor."""

    target: object
    source: object
    modules: tuple  # bimodule keys, leftmost first
    comps: tuple  # (exponent,) in degree 0; bimodule basis indices otherwise

    @property
    def degree(self):
        return len(self.modules)

    def __str__(self):
        if not self.modules:
            return f"t{self.target}^{self.comps[0]}"
        return "⊗".join(f"{m}[{c}]" for m, c in zip(self.modules, self.comps))


class _TensorBuilder:
    def __init__(self, data):
        self.data = data
        self.f = data.field
        self.mods = {m.key: m for m in data.bimodules}

    def paths(self):
        into = {v: [m for m in self.data.bimodules if m.source == v] for v in self.data.vertices}
        out = []

        def extend(path):
            out.append(path)
            for m in into[path[0].target]:
                extend((m,) + path)

        for m in self.data.bimodules:
            extend((m,))
        return out

    def basis(self):
        labels = []
        for v in self.data.vertices:
            for a in range(self.data.base[v].order):
                labels.append(TensorBasis(v, v, (), (a,)))
        for path in self.paths():
            for comps in self._comps(path):
                labels.append(TensorBasis(path[0].target, path[-1].source,
                                          tuple(m.key for m in path), comps))
        return labels

    def _comps(self, path):
        choices = [range(path[0].dim)] + [m.free_basis for m in path[1:]]

        def rec(k):
            if k == len(choices):
                yield ()
                return
            for c in choices[k]:
                for rest in rec(k + 1):
                    yield (c,) + rest

        return list(rec(0))

    def right_act(self, mods, comps, poly):
        """(mods, comps) * poly where poly = {exponent: coeff} at the right end."""
        f = self.f
        last = mods[-1]
        vec = {}
        for a, c in poly.items():
            linalg.axpy(f, vec, c, last.right_power(comps[-1], a))
        if len(mods) == 1:
            return {(b,): c for b, c in vec.items()}
        grouped = {}
        for b, c in vec.items():
            for (a, k), x in last.coords[b].items():
                g = grouped.setdefault(k, {})
                s = f.add(g.get(a, 0), f.mul(c, x))
                if s:
                    g[a] = s
                else:
                    g.pop(a, None)
        out = {}
        for k, pk in grouped.items():
            if not pk:
                continue
            for head, c in self.right_act(mods[:-1], comps[:-1], pk).items():
                key = head + (k,)
                s = f.add(out.get(key, 0), c)
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return out

    def product(self, u, v):
        """Sparse product of TensorBasis u, v as {TensorBasis: coeff}."""
        f = self.f
        if u.source != v.target:
            return {}
        base = self.data.base[u.source]
        if u.degree == 0 and v.degree == 0:
            res = base.mul_exponents(f, u.comps[0], v.comps[0])
            if res is None:
                return {}
            c, e = res
            return {TensorBasis(u.target, u.target, (), (e,)): c}
        if u.degree == 0:
            top = self.mods[v.modules[0]]
            vec = top.act({v.comps[0]: f.one}, top.left, u.comps[0])
            return {TensorBasis(v.target, v.source, v.modules, (b,) + v.comps[1:]): c
                    for b, c in vec.items()}
        mods_u = [self.mods[k] for k in u.modules]
        if v.degree == 0:
            res = self.right_act(mods_u, u.comps, {v.comps[0]: f.one})
            return {TensorBasis(u.target, u.source, u.modules, comps): c for comps, c in res.items()}
        top_v = self.mods[v.modules[0]]
        grouped = {}
        for (a, k), x in top_v.coords[v.comps[0]].items():
            grouped.setdefault(k, {})[a] = x
        out = {}
        modules = u.modules + v.modules
        for k, poly in grouped.items():
            for comps, c in self.right_act(mods_u, u.comps, poly).items():
                lab = TensorBasis(u.target, v.source, modules, comps + (k,) + v.comps[1:])
                s = f.add(out.get(lab, 0), c)
                if s:
                    out[lab] = s
                else:
                    out.pop(lab, None)
        return out


def build_tensor_algebra(data, name="T_A(V)"):
    """T_A(V) with basis indexed by paths of bimodules (length 0 included)."""
    edges = [(m.source, m.target) for m in data.bimodules]
    if _find_cycle(data.vertices, edges) is not None:
        raise NotFiniteDimensional("bimodule support contains an oriented cycle")
    for m in data.bimodules:
        if not m.actions_commute():
            raise InputError(f"left and right actions on {m.key} do not commute")
    builder = _TensorBuilder(data)
    labels = builder.basis()
    index = {lab: k for k, lab in enumerate(labels)}
    table = {}
    for u, lu in enumerate(labels):
        for v, lv in enumerate(labels):
            if lu.source != lv.target:
                continue
            prod = builder.product(lu, lv)
            if prod:
                if any(lab.degree != lu.degree + lv.degree for lab in prod):
                    raise AssertionError("tensor product does not respect the grading")
                table[(u, v)] = {index[lab]: c for lab, c in prod.items()}
    f = data.field
    unit = {index[TensorBasis(v, v, (), (0,))]: f.one for v in data.vertices}
    alg = StructureConstantAlgebra(f, labels, table, unit, name)
    alg.tensor_data = data
    return alg


def tensor_universal_map(T, target, base_images, idem_images, gen_images):
    """The algebra map T_A(V) -> target fixed by degree 0 and 1 generators.

    ``base_images[v]`` is the image of t_v, ``idem_images[v]`` of 1_v and
    ``gen_images[key]`` of the generator of bimodule ``key``.
    """
    data = T.tensor_data
    mods = {m.key: m for m in data.bimodules}
    powers = {}

    def tpow(v, a):
        if (v, a) not in powers:
            powers[(v, a)] = target.power(base_images[v], a, one=idem_images[v])
        return powers[(v, a)]

    def module_image(m, b):
        a, c = m.reps[b]
        return target.mul(target.mul(tpow(m.target, a), gen_images[m.key]), tpow(m.source, c))

    cols = []
    for lab in T.labels:
        if lab.degree == 0:
            cols.append(tpow(lab.target, lab.comps[0]))
            continue
        img = None
        for key, b in zip(lab.modules, lab.comps):
            piece = module_image(mods[key], b)
            img = piece if img is None else target.mul(img, piece)
        cols.append(img)
    return LinearMap(T, target, cols)
