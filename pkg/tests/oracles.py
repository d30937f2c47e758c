"""Independent oracles: brute-force biset classes and graded presentations."""

import math
from itertools import product


class BisetOracle:
    """Morphisms along a path as raw exponent tuples (a_n, ..., a_0) modulo the
    moves eta_t^{c_t/g} alpha = alpha eta_s^{c_s/g}; classes by union-find.

    Shares nothing with the normal-form code beyond the quiver.
    """

    def __init__(self, quiver, order):
        self.order = order
        self.classes = {}
        for v in quiver.vertices:
            self.classes[(v,)] = {(a,): (a,) for a in range(order[v])}
        for path in quiver.paths():
            self.classes[path] = self._classes(path)

    def _vertices(self, path):
        return [path[0].target] + [a.source for a in path]

    def _classes(self, path):
        vs = self._vertices(path)
        sizes = [self.order[v] for v in vs]
        parent = {}

        def find(x):
            root = x
            while parent[root] != root:
                root = parent[root]
            parent[x] = root
            return root

        tuples = list(product(*(range(s) for s in sizes)))
        for tup in tuples:
            parent[tup] = tup
        for tup in tuples:
            for k, arrow in enumerate(path):
                g = math.gcd(self.order[arrow.target], self.order[arrow.source])
                left = list(tup)
                left[k] = (left[k] + sizes[k] // g) % sizes[k]
                right = list(tup)
                right[k + 1] = (right[k + 1] + sizes[k + 1] // g) % sizes[k + 1]
                x, y = find(tuple(left)), find(tuple(right))
                if x != y:
                    parent[x] = y
        return {tup: find(tup) for tup in tuples}

    def count(self):
        return sum(len(set(c.values())) for c in self.classes.values())

    def key(self, m):
        if not m.path:
            return (m.target,), (m.head,)
        return m.path, self.classes[m.path][(m.head,) + tuple(m.slots)]

    def compose(self, g, f):
        """Class of g o f from raw tuples."""
        gp, gt = self.key(g)
        fp, ft = self.key(f)
        if not g.path:
            path = f.path if f.path else (g.target,)
            tup = list(ft)
            tup[0] = (tup[0] + gt[0]) % self.order[g.target]
            return path, self.classes[path][tuple(tup)]
        if not f.path:
            tup = list(gt)
            tup[-1] = (tup[-1] + ft[0]) % self.order[g.source]
            return gp, self.classes[gp][tuple(tup)]
        path = gp + fp
        tup = list(gt[:-1]) + [(gt[-1] + ft[0]) % self.order[g.source]] + list(ft[1:])
        return path, self.classes[path][tuple(tup)]


def graded_dimension(t, prime=10007):
    """dim H(C, D, Omega) from its homogeneous presentation.

    Degree by degree: paths of the full quiver (loops included) modulo the
    span of u r v for the defining relations r.  Plain elimination mod
    ``prime``; no normal forms involved.
    """
    from eicartan.cartan import build_quiver
    q = build_quiver(t)
    order = t.symmetrizer()
    # generator -> (target, source); loops are ("eps", v)
    # weight(eps_v) = L / c_v and weight(alpha) = 1 make both relations homogeneous
    L = math.lcm(*order.values())
    gens = {("eps", v): (v, v, L // order[v]) for v in q.vertices}
    gens.update({a: (a.target, a.source, 1) for a in q.arrows})

    levels = {0: {((), v, v) for v in q.vertices}}

    def paths(d):
        if d < 0:
            return set()
        if d not in levels:
            out = set()
            for g, (gt, gs, w) in gens.items():
                for p, tgt, src in paths(d - w):
                    if gt == src:
                        out.add((p + (g,), tgt if p else gt, gs))
            levels[d] = out
        return levels[d]

    def weight(word):
        return sum(gens[g][2] for g in word)

    rels = []
    for v in q.vertices:
        rels.append(({(("eps", v),) * order[v]: 1}, v, v))
    for a in q.arrows:
        g = math.gcd(order[a.target], order[a.source])
        lhs = (("eps", a.target),) * (order[a.target] // g) + (a,)
        rhs = (a,) + (("eps", a.source),) * (order[a.source] // g)
        rels.append(({lhs: 1, rhs: prime - 1}, a.target, a.source))

    # nothing survives above this weight: n arrows, each eps_v power below c_v
    top = (len(q.vertices) - 1) + len(q.vertices) * L
    total = len(paths(0))
    for d in range(1, top + 1):
        words = sorted((p for p, _, _ in paths(d)), key=repr)
        if not words:
            continue
        index = {w: k for k, w in enumerate(words)}
        vecs = []
        for r, rt, rs in rels:
            rd = weight(next(iter(r)))
            for e in range(d - rd + 1):
                for u, _, us in paths(e):
                    if us != rt:
                        continue
                    for w, wt, _ in paths(d - rd - e):
                        if wt != rs:
                            continue
                        vec = {}
                        for mono, c in r.items():
                            k = index[u + mono + w]
                            vec[k] = (vec.get(k, 0) + c) % prime
                        vecs.append({k: c for k, c in vec.items() if c})
        total += len(words) - _rank_mod(vecs, prime)
    return total


def _rank_mod(vecs, prime):
    pivots = {}
    for v in vecs:
        v = dict(v)
        while v:
            lead = min(v)
            if lead not in pivots:
                inv = pow(v[lead], prime - 2, prime)
                pivots[lead] = {k: c * inv % prime for k, c in v.items()}
                break
            row, c = pivots[lead], v[lead]
            for k, x in row.items():
                y = (v.get(k, 0) - c * x) % prime
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return len(pivots)
