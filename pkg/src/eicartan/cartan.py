"""Symmetrizable Cartan matrices, symmetrizers, orientations, the quivers
Q(C, Omega) and Q°(C, Omega), valued graphs, quadratic forms and the
Dynkin / Euclidean / indefinite classification.

Vertices carry labels.  For user input the labels are ``1..n``; the
constructed triple (C', D', Omega') uses pairs ``(i, l)``.  Matrices are
stored 0-based internally and addressed by label through ``CartanMatrix``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

from .errors import InputError, NotSymmetrizable

DYNKIN = "Dynkin"
EUCLIDEAN = "Euclidean"
INDEFINITE = "Indefinite"


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple
    labels: tuple

    @classmethod
    def from_rows(cls, rows, labels=None):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise InputError("Cartan matrix must be a non-empty square matrix")
        for r in rows:
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise InputError(f"non-integer entry {x!r}")
        if labels is None:
            labels = tuple(range(1, n + 1))
        labels = tuple(labels)
        if len(labels) != n or len(set(labels)) != n:
            raise InputError("labels must be distinct and match the matrix size")
        return cls(tuple(tuple(r) for r in rows), labels)

    @property
    def n(self):
        return len(self.labels)

    def index(self, label):
        return self._index[label]

    @property
    def _index(self):
        try:
            return self.__dict__["_idx"]
        except KeyError:
            idx = {lab: k for k, lab in enumerate(self.labels)}
            object.__setattr__(self, "_idx", idx)
            return idx

    def __call__(self, i, j):
        """Entry c_ij addressed by labels."""
        return self.entries[self._index[i]][self._index[j]]

    def rows(self):
        return [list(r) for r in self.entries]

    def is_symmetric(self):
        return all(self.entries[a][b] == self.entries[b][a]
                   for a in range(self.n) for b in range(self.n))

    def neighbours(self, i):
        return [j for j in self.labels if j != i and self(i, j) < 0]

    def submatrix(self, labels):
        labels = tuple(labels)
        return CartanMatrix(tuple(tuple(self(i, j) for j in labels) for i in labels), labels)

    def relabel(self, mapping):
        return CartanMatrix(self.entries, tuple(mapping[lab] for lab in self.labels))


def as_cartan(C):
    return C if isinstance(C, CartanMatrix) else CartanMatrix.from_rows(C)


@dataclass
class ValidationReport:
    checks: dict = field(default_factory=dict)  # name -> (passed, message)

    def add(self, name, passed, message=""):
        self.checks[name] = (bool(passed), message)

    @property
    def ok(self):
        return all(p for p, _ in self.checks.values())

    def failures(self):
        return {k: m for k, (p, m) in self.checks.items() if not p}

    def __bool__(self):
        return self.ok


def _connected_label_sets(C):
    seen, comps = set(), []
    for v in C.labels:
        if v in seen:
            continue
        comp, todo = [], [v]
        seen.add(v)
        while todo:
            x = todo.pop()
            comp.append(x)
            for y in C.labels:
                if y != x and (C(x, y) != 0 or C(y, x) != 0) and y not in seen:
                    seen.add(y)
                    todo.append(y)
        comps.append(sorted(comp, key=C.index))
    return comps


def find_minimal_symmetrizer(C):
    """Minimal symmetrizer: spanning-tree propagation of c_i c_ij = c_j c_ji over Q,
    cleared to coprime integers on every connected component."""
    C = as_cartan(C)
    values = {}
    for comp in _connected_label_sets(C):
        root = comp[0]
        local = {root: Fraction(1)}
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in C.neighbours(i):
                if C(j, i) >= 0:
                    raise NotSymmetrizable(f"c_{i}{j} < 0 but c_{j}{i} >= 0")
                val = local[i] * C(i, j) / C(j, i)
                if j not in local:
                    local[j] = val
                    queue.append(j)
                elif local[j] != val:
                    raise NotSymmetrizable(f"inconsistent ratio on the cycle through {i}, {j}")
        den = reduce(math.lcm, (v.denominator for v in local.values()), 1)
        ints = {k: int(v * den) for k, v in local.items()}
        g = reduce(math.gcd, ints.values())
        for k, v in ints.items():
            values[k] = v // g
    return tuple(values[lab] for lab in C.labels)


def validate_cartan(C):
    if not isinstance(C, CartanMatrix):
        rows = [list(r) for r in C]
        if not rows or any(len(r) != len(rows) for r in rows):
            raise InputError("Cartan matrix must be square")
        C = CartanMatrix.from_rows(rows)
    report = ValidationReport()
    bad_diag = [i for i in C.labels if C(i, i) != 2]
    report.add("C1", not bad_diag, f"c_ii != 2 at {bad_diag}" if bad_diag else "")
    bad = []
    for i in C.labels:
        for j in C.labels:
            if i != j and (C(i, j) > 0 or (C(i, j) < 0) != (C(j, i) < 0)):
                bad.append((i, j))
    report.add("C2", not bad, f"sign pattern violated at {bad}" if bad else "")
    if bad:
        report.add("C3", False, "not checked: (C2) fails")
    else:
        try:
            find_minimal_symmetrizer(C)
            report.add("C3", True)
        except NotSymmetrizable as exc:
            report.add("C3", False, str(exc))
    return report


def is_symmetrizer(C, D):
    C = as_cartan(C)
    if len(D) != C.n or any(c < 1 for c in D):
        return False
    return all(D[a] * C.entries[a][b] == D[b] * C.entries[b][a]
               for a in range(C.n) for b in range(C.n))


def default_orientation(C):
    C = as_cartan(C)
    return frozenset((C.labels[a], C.labels[b])
                     for a in range(C.n) for b in range(a + 1, C.n) if C.entries[a][b] < 0)


def validate_orientation(C, Omega):
    C = as_cartan(C)
    report = ValidationReport()
    Omega = set(map(tuple, Omega))
    unknown = [pr for pr in Omega if pr[0] not in C._index or pr[1] not in C._index]
    report.add("labels", not unknown, f"unknown vertices in {unknown}" if unknown else "")
    if unknown:
        return report
    problems = []
    for a, i in enumerate(C.labels):
        for j in C.labels[a + 1:]:
            hits = ((i, j) in Omega) + ((j, i) in Omega)
            if C(i, j) < 0 and hits != 1:
                problems.append((i, j))
            if C(i, j) == 0 and hits:
                problems.append((i, j))
    loops = [pr for pr in Omega if pr[0] == pr[1]]
    report.add("covering", not problems and not loops,
               f"pairs {problems + loops} violate the covering condition" if problems or loops else "")
    cycle = _find_cycle(C.labels, Omega)
    report.add("acyclic", cycle is None, f"directed cycle through {cycle}" if cycle else "")
    return report


def _find_cycle(vertices, pairs):
    succ = {v: [] for v in vertices}
    for i, j in pairs:
        if i in succ:
            succ[i].append(j)
    state = {v: 0 for v in vertices}
    for start in vertices:
        if state[start]:
            continue
        stack = [(start, iter(succ[start]))]
        state[start] = 1
        trail = [start]
        while stack:
            v, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                state[v] = 2
                stack.pop()
                trail.pop()
            elif state.get(nxt, 2) == 1:
                return trail[trail.index(nxt):] + [nxt]
            elif state.get(nxt) == 0:
                state[nxt] = 1
                trail.append(nxt)
                stack.append((nxt, iter(succ[nxt])))
    return None


@dataclass(frozen=True)
class CartanTriple:
    """A Cartan triple (C, D, Omega).  Construction validates all three parts."""

    C: CartanMatrix
    D: tuple
    Omega: frozenset

    def __post_init__(self):
        rep = validate_cartan(self.C)
        if not rep:
            raise InputError(f"invalid Cartan matrix: {rep.failures()}")
        if not is_symmetrizer(self.C, self.D):
            raise InputError(f"{self.D} is not a symmetrizer")
        orep = validate_orientation(self.C, self.Omega)
        if not orep:
            raise InputError(f"invalid orientation: {orep.failures()}")

    @classmethod
    def create(cls, C, D=None, Omega=None, labels=None):
        C = C if isinstance(C, CartanMatrix) else CartanMatrix.from_rows(C, labels)
        if D is None:
            D = find_minimal_symmetrizer(C)
        if Omega is None:
            Omega = default_orientation(C)
        return cls(C, tuple(int(d) for d in D), frozenset(tuple(pr) for pr in Omega))

    @property
    def labels(self):
        return self.C.labels

    @property
    def n(self):
        return self.C.n

    def c(self, i):
        """Symmetrizer entry c_i."""
        return self.D[self.C.index(i)]

    def symmetrizer(self):
        return {lab: d for lab, d in zip(self.labels, self.D)}

    def omega_sorted(self):
        return sorted(self.Omega, key=lambda pr: (self.C.index(pr[0]), self.C.index(pr[1])))


# -- quivers -----------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Arrow:
    """alpha_{ij}^{(g)} : j -> i.  ``copy`` is g."""

    target: object
    source: object
    copy: int = 1

    def __str__(self):
        return f"α[{_lab(self.target)},{_lab(self.source)}]^{self.copy}"


def _lab(v):
    return "".join(map(str, v)) if isinstance(v, tuple) else str(v)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple  # non-loop arrows, i.e. Q°
    loops: tuple  # vertices carrying a loop eps_i

    def loop_free(self):
        return Quiver(self.vertices, self.arrows, ())

    def arrows_between(self, i, j):
        """Arrows j -> i."""
        return [a for a in self.arrows if a.target == i and a.source == j]

    def is_acyclic(self):
        return _find_cycle(self.vertices, [(a.source, a.target) for a in self.arrows]) is None

    def paths(self):
        """All paths of Q° as tuples of arrows written leftmost-first (alpha_n ... alpha_1).

        The empty path is not included.
        """
        into = {v: [a for a in self.arrows if a.source == v] for v in self.vertices}
        out = []

        def extend(path):
            out.append(path)
            for a in into[path[0].target]:
                extend((a,) + path)

        for a in self.arrows:
            extend((a,))
        out.sort(key=lambda p: (len(p), [self.vertices.index(x.target) for x in p],
                                [self.vertices.index(x.source) for x in p], [x.copy for x in p]))
        return out


def build_quiver(t):
    arrows = []
    for i, j in t.omega_sorted():
        mult = math.gcd(t.C(i, j), t.C(j, i))
        for g in range(1, mult + 1):
            arrows.append(Arrow(i, j, g))
    q = Quiver(t.labels, tuple(arrows), t.labels)
    assert q.is_acyclic()
    return q


# -- valued graphs -----------------------------------------------------------


@dataclass(frozen=True)
class ValuedGraph:
    vertices: tuple
    valuation: dict  # (i, j) -> (|c_ij|, |c_ji|) for every adjacent ordered pair
    multiplicity: dict  # frozenset({i, j}) -> parallel-edge count (1 for non-symmetric edges)

    def edges(self):
        return list(self.multiplicity)

    def neighbours(self, v):
        return [w for (a, w) in self.valuation if a == v]

    def degree(self, v):
        return sum(self.multiplicity[frozenset((v, w))] for w in self.neighbours(v))

    def subgraph(self, verts):
        verts = tuple(v for v in self.vertices if v in set(verts))
        vs = set(verts)
        val = {k: x for k, x in self.valuation.items() if k[0] in vs and k[1] in vs}
        mult = {e: m for e, m in self.multiplicity.items() if e <= vs}
        return ValuedGraph(verts, val, mult)

    def is_simply_laced(self):
        return all(a == b for a, b in self.valuation.values())


def valued_graph(C):
    C = as_cartan(C)
    val, mult = {}, {}
    for i in C.labels:
        for j in C.labels:
            if i != j and C(i, j) < 0:
                val[(i, j)] = (-C(i, j), -C(j, i))
                if C(i, j) == C(j, i):
                    mult[frozenset((i, j))] = -C(i, j)
                else:
                    mult[frozenset((i, j))] = 1
    return ValuedGraph(C.labels, val, mult)


def connected_components(g):
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for (i, j) in g.valuation:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    groups = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)
    order = {v: k for k, v in enumerate(g.vertices)}
    return sorted(groups.values(), key=lambda comp: order[comp[0]])


def is_connected(C):
    return len(connected_components(valued_graph(C))) == 1


# -- quadratic forms and classification --------------------------------------


def quadratic_form(C, D, x):
    """q_C(x) = sum c_i x_i^2 + sum_{i<j} c_i c_ij x_i x_j."""
    C = as_cartan(C)
    if len(x) != C.n or len(D) != C.n:
        raise InputError("vector length does not match the rank")
    total = sum(D[i] * x[i] * x[i] for i in range(C.n))
    for i in range(C.n):
        for j in range(i + 1, C.n):
            total += D[i] * C.entries[i][j] * x[i] * x[j]
    return total


def bilinear_form(C, D, x, y):
    """(x, y) with (e_i, e_i) = 2 c_i and (e_i, e_j) = c_i c_ij."""
    C = as_cartan(C)
    return sum(D[i] * C.entries[i][j] * x[i] * y[j] for i in range(C.n) for j in range(C.n))


def definiteness(S):
    """Exact LDL^T on a symmetric rational matrix.

    Returns DYNKIN (positive definite), EUCLIDEAN (positive semidefinite,
    singular) or INDEFINITE.  A zero pivot is accepted only when the rest of
    its row vanishes; that is exactly the semidefinite case.
    """
    A = [[Fraction(x) for x in row] for row in S]
    n = len(A)
    singular = False
    for k in range(n):
        piv = A[k][k]
        if piv < 0:
            return INDEFINITE
        if piv == 0:
            if any(A[k][j] != 0 for j in range(k + 1, n)):
                return INDEFINITE
            singular = True
            continue
        for i in range(k + 1, n):
            if A[i][k] == 0:
                continue
            factor = A[i][k] / piv
            for j in range(k + 1, n):
                A[i][j] -= factor * A[k][j]
    return EUCLIDEAN if singular else DYNKIN


@dataclass(frozen=True)
class TypeClass:
    tag: str
    name: str | None = None
    vertices: tuple = ()

    def __str__(self):
        return f"{self.tag}" + (f" {self.name}" if self.name else "")


def classify(C, D):
    """One TypeClass per connected component, from the definiteness of DC."""
    C = as_cartan(C)
    out = []
    for comp in connected_components(valued_graph(C)):
        idx = [C.index(v) for v in comp]
        S = [[D[a] * C.entries[a][b] for b in idx] for a in idx]
        out.append(TypeClass(definiteness(S), None, tuple(comp)))
    return out


def _arm_lengths(g, centre):
    arms = []
    for start in g.neighbours(centre):
        length, prev, cur = 1, centre, start
        while True:
            nxt = [w for w in g.neighbours(cur) if w != prev]
            if len(nxt) != 1:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return sorted(arms)


def recognize_simply_laced(g):
    """Name a connected simply-laced graph: A_n, D_n, E_6-8, their extended forms."""
    if not g.is_simply_laced():
        raise InputError("graph has non-symmetric valuations")
    if len(connected_components(g)) != 1:
        raise InputError("graph must be connected")
    n = len(g.vertices)
    n_edges = sum(g.multiplicity.values())
    if n == 1:
        return TypeClass(DYNKIN, "A_1", g.vertices)
    if any(m >= 2 for m in g.multiplicity.values()):
        if n == 2 and n_edges == 2:
            return TypeClass(EUCLIDEAN, "~A_1", g.vertices)
        return _unrecognized(g)
    degrees = {v: g.degree(v) for v in g.vertices}
    if n_edges == n:
        if all(d == 2 for d in degrees.values()):
            return TypeClass(EUCLIDEAN, f"~A_{n - 1}", g.vertices)
        return _unrecognized(g)
    if n_edges != n - 1:
        return _unrecognized(g)
    branch = [v for v, d in degrees.items() if d >= 3]
    if not branch:
        return TypeClass(DYNKIN, f"A_{n}", g.vertices)
    if len(branch) == 1:
        v = branch[0]
        arms = _arm_lengths(g, v)
        if degrees[v] == 4 and arms == [1, 1, 1, 1]:
            return TypeClass(EUCLIDEAN, "~D_4", g.vertices)
        if degrees[v] == 3:
            if arms[:2] == [1, 1]:
                return TypeClass(DYNKIN, f"D_{n}", g.vertices)
            named = {(1, 2, 2): (DYNKIN, "E_6"), (1, 2, 3): (DYNKIN, "E_7"),
                     (1, 2, 4): (DYNKIN, "E_8"), (2, 2, 2): (EUCLIDEAN, "~E_6"),
                     (1, 3, 3): (EUCLIDEAN, "~E_7"), (1, 2, 5): (EUCLIDEAN, "~E_8")}
            if tuple(arms) in named:
                tag, name = named[tuple(arms)]
                return TypeClass(tag, name, g.vertices)
    if len(branch) == 2 and all(degrees[v] == 3 for v in branch):
        leaves_ok = all(sum(1 for w in g.neighbours(v) if degrees[w] == 1) >= 2 for v in branch)
        if leaves_ok and n >= 6:
            return TypeClass(EUCLIDEAN, f"~D_{n - 1}", g.vertices)
    return _unrecognized(g)


def _unrecognized(g):
    C = graph_to_cartan(g)
    tag = classify(C, (1,) * C.n)[0].tag
    return TypeClass(tag, None, g.vertices)


def graph_to_cartan(g):
    """Cartan matrix of a valued graph (valuation (a, b) on (i, j) gives c_ij = -a)."""
    rows = [[2 if i == j else -g.valuation.get((i, j), (0, 0))[0] for j in g.vertices]
            for i in g.vertices]
    return CartanMatrix.from_rows(rows, g.vertices)
