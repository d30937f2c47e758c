"""G2 from end to end.

The free EI category of type G2 has X(1) = Z/3, X(2) = Z/1 and a single
arrow 2 -> 1.  Over a field of characteristic 2 containing cube roots of
unity its category algebra becomes the algebra H of the D4 quiver oriented
towards the centre; in characteristic 3 it is H(G2) itself.
"""

from eicartan.ei_category import build_ei_quiver, enumerate_category
from eicartan.io import load_fixture
from eicartan.transform.prime_triple import construct_prime_triple
from eicartan.transform.theorem import build_main_isomorphism


def main():
    t = load_fixture("g2")
    print("C =", [list(r) for r in t.C.entries], " D =", t.D, " Omega =", t.omega_sorted())

    cat = enumerate_category(build_ei_quiver(t))
    print(f"\nthe category has {len(cat)} morphisms:")
    for m in cat.morphisms:
        print("  ", m)

    for p in (2, 3):
        pt = construct_prime_triple(t, p)
        print(f"\np = {p}: M = {list(pt.M)}, D' = {pt.D}")
        for row in pt.C.entries:
            print("   ", " ".join(f"{x:3d}" for x in row))
        rep = build_main_isomorphism(t, p).report
        print(f"  field F_{rep.field['p']}^{rep.field['m']}: dim kC = {rep.dim_kC},"
              f" dim H' = {rep.dim_H}, checks {rep.checks}")


if __name__ == "__main__":
    main()
