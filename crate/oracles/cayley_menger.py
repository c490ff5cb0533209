"""Exact Cayley-Menger volume for a tetrahedron given squared edge lengths.

Usage: cayley_menger.py AB2 AC2 AD2 BC2 BD2 CD2   (rationals or sympy expressions)
"""
import sys

import sympy as sp


def volume2(sq):
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    m = sp.zeros(5)
    for k in range(1, 5):
        m[0, k] = m[k, 0] = 1
    for (i, j), v in zip(pairs, sq):
        m[i + 1, j + 1] = m[j + 1, i + 1] = v
    return sp.nsimplify(m.det() / 288)


if __name__ == "__main__":
    print(volume2([sp.sympify(a) for a in sys.argv[1:7]]))
