"""Seeded random Cartan triples for property tests and acceptance runs."""

from __future__ import annotations

import math
import random

from .cartan import CartanMatrix, CartanTriple, build_quiver
from .words import word_count


def random_triple(rng, max_rank=3, max_c=6, max_mult=2, edge_prob=0.7):
    """A valid triple with D entries in [1, max_c]; D need not be minimal.

    Off-diagonal pairs are c_ij = -k D_j / g, c_ji = -k D_i / g with
    g = gcd(D_i, D_j) and 1 <= k <= max_mult, so D C is symmetric by design.
    """
    n = rng.randint(1, max_rank)
    D = [rng.randint(1, max_c) for _ in range(n)]
    rows = [[2 if a == b else 0 for b in range(n)] for a in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < edge_prob:
                k = rng.randint(1, max_mult)
                g = math.gcd(D[a], D[b])
                rows[a][b] = -k * D[b] // g
                rows[b][a] = -k * D[a] // g
    C = CartanMatrix.from_rows(rows)
    order = list(C.labels)
    rng.shuffle(order)
    rank = {v: k for k, v in enumerate(order)}
    omega = [(i, j) if rank[i] < rank[j] else (j, i)
             for i in C.labels for j in C.labels if i < j and C(i, j) < 0]
    return CartanTriple.create(C, D, omega)


def triple_dimension(t):
    return word_count(build_quiver(t).loop_free(), t.symmetrizer())


def random_triples(seed, count, max_dim=None, **kw):
    """``count`` triples from ``random.Random(seed)``, rejecting those above ``max_dim``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        t = random_triple(rng, **kw)
        if max_dim is None or triple_dimension(t) <= max_dim:
            out.append(t)
    return out
