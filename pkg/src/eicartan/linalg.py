"""Exact linear algebra over a FieldSpec.

Dense matrices are lists of rows.  Sparse vectors are dicts ``{index: coeff}``
holding only nonzero coefficients.
"""


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(f, A, B):
    n, k = len(A), len(B[0]) if B else 0
    out = [[0] * k for _ in range(n)]
    for i, row in enumerate(A):
        acc = out[i]
        for t, a in enumerate(row):
            if a == 0:
                continue
            for j, b in enumerate(B[t]):
                if b:
                    acc[j] = f.add(acc[j], f.mul(a, b))
    return out


def mat_vec(f, A, v):
    out = []
    for row in A:
        s = 0
        for a, b in zip(row, v):
            if a and b:
                s = f.add(s, f.mul(a, b))
        out.append(s)
    return out


def mat_inv(f, A):
    """Inverse by Gauss-Jordan elimination, or ``None`` if singular."""
    n = len(A)
    M = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        inv = f.inv(M[col][col])
        M[col] = [f.mul(inv, x) for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                c = f.neg(M[r][col])
                M[r] = [f.add(x, f.mul(c, y)) for x, y in zip(M[r], M[col])]
    return [row[n:] for row in M]


# -- sparse vectors ----------------------------------------------------------


def axpy(f, acc, c, v):
    """acc += c * v in place."""
    if c == 0:
        return acc
    for k, x in v.items():
        s = f.add(acc.get(k, 0), f.mul(c, x))
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


def vscale(f, c, v):
    if c == 0:
        return {}
    return {k: f.mul(c, x) for k, x in v.items()}


def vsub(f, u, v):
    out = dict(u)
    return axpy(f, out, f.neg(f.one), v)


def sparse_rank(f, vectors):
    """Rank of a family of sparse vectors (keys must be mutually comparable)."""
    pivots = {}
    rank = 0
    for vec in vectors:
        v = dict(vec)
        while v:
            lead = min(v)
            basis = pivots.get(lead)
            if basis is None:
                inv = f.inv(v[lead])
                pivots[lead] = {k: f.mul(inv, x) for k, x in v.items()}
                rank += 1
                break
            axpy(f, v, f.neg(v[lead]), basis)
    return rank


def solve_in_span(f, columns, target):
    """Coordinates of ``target`` in the span of sparse ``columns`` or ``None``.

    Small-scale helper: dense elimination on the union of supports.
    """
    keys = sorted({k for c in columns for k in c} | set(target))
    pos = {k: i for i, k in enumerate(keys)}
    n = len(columns)
    rows = [[0] * (n + 1) for _ in keys]
    for j, c in enumerate(columns):
        for k, x in c.items():
            rows[pos[k]][j] = x
    for k, x in target.items():
        rows[pos[k]][n] = x
    piv_cols = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = f.inv(rows[r][col])
        rows[r] = [f.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = f.neg(rows[i][col])
                rows[i] = [f.add(x, f.mul(c, y)) for x, y in zip(rows[i], rows[r])]
        piv_cols.append(col)
        r += 1
    if any(rows[i][n] for i in range(r, len(rows))):
        return None
    sol = [0] * n
    for i, col in enumerate(piv_cols):
        sol[col] = rows[i][n]
    return sol


class QuotientSpace:
    """Span of ``keys`` modulo the span of ``relations`` (sparse vectors).

    Pivots are chosen by ``order`` (smallest first), so keys ranking early
    are the ones rewritten away; ``complement`` lists the surviving keys.
    """

    def __init__(self, f, keys, relations, order=None):
        self.f = f
        order = order or (lambda k: k)
        self.pivots = {}
        for rel in relations:
            v = self.reduce(rel)
            if not v:
                continue
            lead = min(v, key=order)
            inv = f.inv(v[lead])
            row = {k: f.mul(inv, x) for k, x in v.items()}
            for other in self.pivots.values():
                if lead in other:
                    axpy(f, other, f.neg(other[lead]), row)
            self.pivots[lead] = row
        self.complement = [k for k in keys if k not in self.pivots]

    def reduce(self, vec):
        v = dict(vec)
        for lead, row in self.pivots.items():
            if lead in v:
                axpy(self.f, v, self.f.neg(v[lead]), row)
        return v
