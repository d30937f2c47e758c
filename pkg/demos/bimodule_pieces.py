"""A (x)_C B for A = k[Z/4], B = k[Z/6] in characteristic 2.

gcd(4, 6) = 2, so the tensor product has 12 elements in its basis.  With
4 = 2^2 * 1 and 6 = 2 * 3 the index set Sigma has 3 pairs, each carrying
a copy of k[x]/(x^4) (x)_{k[z]/(z^2)} k[y]/(y^2) of dimension 4.
"""

from eicartan.algebra import rank
from eicartan.ffield import make_field
from eicartan.transform.bimodule import bimodule_decomposition


def main(a=4, b=6, p=2):
    f = make_field(p, 3)
    dec = bimodule_decomposition(f, a, b)
    print(f"dim A (x)_C B = {dec.source.dim}")
    print(f"Sigma = {list(dec.sigma.pairs)}")
    for key, mod in dec.target.pieces:
        print(f"  piece {key}: dim {mod.dim}, basis {list(mod.labels)}")
    print("bijective:", rank(dec.iso) == dec.source.dim, " commutes with x and y:", dec.commutes())


if __name__ == "__main__":
    main()
