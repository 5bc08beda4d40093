"""Shared test data: the Heisenberg fixture and random corpora."""
import random
from fractions import Fraction

import sympy as sp

from graphbialg.algebra import heisenberg
from graphbialg.classify import DiagonalFamily, diagonal_build, lambda_system
from graphbialg.cobracket import Cobracket, ConstructionData
from graphbialg.exterior import ExtVector, graded_projectors, wedge
from graphbialg.graph import Graph
from graphbialg.linalg import Mat


def heisenberg_fixture(m, const, v0=0, ohat_scale=1):
    """delta(z) = v0 ^ z, delta(v) = const * (omega(v0, v) ohat + v0 ^ v), D = 0.

    omega(u, v) = v^t T u, so omega(x_k, y_k) = 1, and ohat = sum_k x_k ^ y_k.
    """
    a = heisenberg(m)
    t = a.t_tensors[0]
    x0 = a.basis(v0)
    ohat = ExtVector.zero(a.dim, 2)
    for k in range(m):
        ohat = ohat + wedge(a.basis(2 * k), a.basis(2 * k + 1))
    ohat = ohat_scale * ohat
    cols = []
    for v in range(a.dim_w):
        omega = t[v, v0]
        col = omega * ohat if omega else ExtVector.zero(a.dim, 2)
        if v != v0:
            col = col + wedge(x0, a.basis(v))
        cols.append(Fraction(const) * col)
    cols.append(wedge(x0, a.basis(a.dim_w)))
    return Cobracket(a, cols)


def rational(rng, lo=-4, hi=4, den=3):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def random_lambda(g: Graph, rng):
    space = lambda_system(g)
    return space.combination([rational(rng) for _ in range(space.dim)])


def random_lambda2z(a, rng, density=0.5):
    zz = graded_projectors(a).zz
    coeffs = [0] * len(ExtVector.zero(a.dim, 2).coeffs)
    for pos in zz:
        if rng.random() < density:
            coeffs[pos] = rational(rng)
    return ExtVector(a.dim, 2, tuple(Fraction(c) for c in coeffs))


def omega_killed_by(a, central, rng):
    """A random omega in Lambda^2 z with omega ^ central = 0."""
    if central.is_zero():
        return random_lambda2z(a, rng)
    w = ExtVector.zero(a.dim, 2)
    for k in range(a.dim_w, a.dim):
        c = rational(rng)
        if c:
            w = w + c * wedge(central, a.basis(k))
    return w


def diagonal_instance(g: Graph, rng, valid_omega=True):
    fam = DiagonalFamily.from_vector(g, random_lambda(g, rng))
    a = fam.algebra
    omegas = []
    for i in range(g.vertex_count):
        if valid_omega:
            omegas.append(omega_killed_by(a, fam.central_element(i), rng))
        else:
            omegas.append(random_lambda2z(a, rng))
    return DiagonalFamily(g, fam.lam, omegas)


def construction_instance(g: Graph, rng, valid_phi):
    """ConstructionData from a lambda_system solution and phi_star."""
    fam = diagonal_instance(g, rng, valid_omega=valid_phi)
    a = fam.algebra
    d_family = []
    for k in range(g.edge_count):
        d_family.append(Mat(a.dim_w, a.dim_w,
                            [fam.lam[i, k] if i == j else 0
                             for i in range(a.dim_w) for j in range(a.dim_w)]))
    zero = ExtVector.zero(a.dim, 2)
    return a, ConstructionData([zero] * a.dim_z, d_family, list(fam.omega))


def structure_of(a):
    """Structure constants in the oracle format, read from basis brackets."""
    c = [[[0] * a.dim for _ in range(a.dim)] for _ in range(a.dim)]
    for p in range(a.dim):
        for q in range(a.dim):
            for r, v in a.basis_bracket(p, q).items():
                c[p][q][r] = sp.Rational(v.numerator, v.denominator)
    return c


def delta_matrices(d: Cobracket):
    """Cobracket columns as antisymmetric sympy matrices for the oracle."""
    out = []
    for col in d.columns:
        out.append(_bivector(d.algebra.dim, col.terms()))
    return out


def _bivector(dim, terms):
    m = sp.zeros(dim, dim)
    for (p, q), v in terms.items():
        m[p, q] += sp.Rational(v.numerator, v.denominator)
        m[q, p] -= sp.Rational(v.numerator, v.denominator)
    return m
