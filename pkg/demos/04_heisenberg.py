"""Cobrackets on the Heisenberg algebra with delta(z) = x ^ z.

Here delta(v) = k (omega(x, v) ohat + x ^ v) with ohat = sum x_j ^ y_j and
D = 0.  Co-Jacobi holds for every k; the 1-cocycle condition at [x, y] = z
leaves (1 - 2k) x ^ z, so only k = 1/2 gives a bialgebra with this ohat.

    python demos/04_heisenberg.py
"""
from fractions import Fraction

from graphbialg import Cobracket, heisenberg, is_bialgebra
from graphbialg.cobracket import check_cocycle, check_cojacobi, delta1_cojacobi, verify
from graphbialg.exterior import ExtVector, wedge


def fixture(m, k):
    a = heisenberg(m)
    t = a.t_tensors[0]
    x = a.basis(0)
    ohat = ExtVector.zero(a.dim, 2)
    for j in range(m):
        ohat = ohat + wedge(a.basis(2 * j), a.basis(2 * j + 1))
    cols = []
    for v in range(a.dim_w):
        col = t[v, 0] * ohat
        if v:
            col = col + wedge(x, a.basis(v))
        cols.append(k * col)
    cols.append(wedge(x, a.basis(a.dim_w)))
    return Cobracket(a, cols)


for k in (Fraction(1, 4), Fraction(1, 2)):
    d = fixture(1, k)
    print(f"k = {k}")
    print(" ", d.pretty().replace("\n", "\n  "))
    print("  co-Jacobi:", check_cojacobi(d).ok, " cocycle residuals:",
          {key: v.pretty(d.algebra.labels) for key, v in check_cocycle(d).residuals.items()})
for m in (1, 2, 3):
    d = fixture(m, Fraction(1, 2))
    rep = verify(d)
    print(f"h_{2 * m + 1}, k = 1/2: bialgebra {rep.is_bialgebra}, "
          f"nearly coboundary {rep.nearly_coboundary}, delta_1 co-Jacobi {delta1_cojacobi(d)}")
