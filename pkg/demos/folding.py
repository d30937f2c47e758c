"""Folding graphs along automorphisms.

D4 with triality folds to G2 and E6 with its flip folds to F4.  Unfolding
goes back, but not every graph with an admissible automorphism is an
unfolding: the 4-cycle K_{2,2} with a side-preserving swap folds to the
same (C, D) as two double edges.
"""

from eicartan.graphs import equivariant_isomorphism
from eicartan.transform.lusztig import GraphWithAutomorphism, forward_of_folding, lusztig_inverse


def graph(n, edges, perm):
    es = {}
    for e in edges:
        es[frozenset(e)] = es.get(frozenset(e), 0) + 1
    return GraphWithAutomorphism(tuple(range(n)), es, dict(enumerate(perm)))


CASES = {
    "D4, triality": graph(4, [(0, 1), (0, 2), (0, 3)], [0, 2, 3, 1]),
    "E6, flip": graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)], [4, 3, 2, 1, 0, 5]),
    "K22, swap": graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)], [1, 0, 3, 2]),
}


def main():
    for name, gs in CASES.items():
        fold = lusztig_inverse(gs)
        again, _ = forward_of_folding(gs)
        back = equivariant_isomorphism(gs, again) is not None
        print(f"{name}: orbits {[len(o) for o in fold.orbits]}")
        print("  C =", [list(r) for r in fold.C.entries], " D =", fold.D)
        print("  unfolding recovers the graph:", back)


if __name__ == "__main__":
    main()
