"""Nearly-coboundary cobrackets on graph algebras.

Covers the diagonal family ``D_alpha(e_i) = lambda_{i,alpha} e_i`` (its linear
lambda system, forced zeros and omega constraints), the parameter-count table
for cycles and complete graphs, the commuting-D test, and the three
non-diagonalizable families on f_3.
"""
from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .algebra import TwoStepAlgebra, from_graph
from .cobracket import (Cobracket, HypothesisWarning, check_cocycle, check_cojacobi,
                        cocycle_residual, is_nearly_coboundary, read_d_family)
from .exterior import ExteriorIndex, ExtVector, graded_projectors, wedge
from .graph import Graph, complete_graph, cycle_graph, min_degree_at_least_two
from .linalg import Mat, SolutionSpace, as_fraction, format_rational, nullspace, rank, solve

ZERO = Fraction(0)


# -- the lambda system ------------------------------------------------------

def lambda_unknowns(g: Graph) -> list[tuple[int, int]]:
    """Unknown order: vertex-major pairs (v, edge index)."""
    return [(v, k) for v in range(g.vertex_count) for k in range(g.edge_count)]


def lambda_system_matrix(g: Graph) -> Mat:
    m = g.edge_count
    rows = []
    for e0, (i, j) in enumerate(g.edges):
        for k in range(m):
            if k == e0:
                continue
            row = [ZERO] * (g.vertex_count * m)
            row[i * m + k] = Fraction(1)
            row[j * m + k] = Fraction(1)
            rows.append(row)
    return Mat.from_rows(rows, cols=g.vertex_count * m)


def lambda_system(g: Graph) -> SolutionSpace:
    """Solutions of ``lambda_{i,a} + lambda_{j,a} = 0`` for every edge (i, j) and a != (i, j)."""
    return nullspace(lambda_system_matrix(g), labels=lambda_unknowns(g))


def forced_zero_lambdas(g: Graph, space: SolutionSpace | None = None) -> list[tuple[int, int]]:
    if space is None:
        space = lambda_system(g)
    return [lab for k, lab in enumerate(space.labels) if space.coordinate_vanishes(k)]


def path_parity_zero(g: Graph, v: int, edge: int) -> bool:
    """Whether lambda_{v,edge} vanishes on the whole lambda system."""
    space = lambda_system(g)
    return space.coordinate_vanishes(v * g.edge_count + edge)


def parity_certificate(g: Graph, v: int, edge: int) -> dict | None:
    """An odd cycle avoiding ``edge`` in the component of ``v``, with a path to it.

    Going once around an odd cycle of the constraint graph flips the sign of
    lambda an odd number of times, so lambda_{v,edge} must vanish.  Returns
    ``{"path": [...], "cycle": [...]}`` (0-based vertices) or None.
    """
    adj: dict[int, list[int]] = {u: [] for u in range(g.vertex_count)}
    for k, (i, j) in enumerate(g.edges):
        if k != edge:
            adj[i].append(j)
            adj[j].append(i)
    parent = {v: None}
    color = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in color:
                color[w] = 1 - color[u]
                parent[w] = u
                queue.append(w)
            elif color[w] == color[u]:
                pu, pw = _root_path(parent, u), _root_path(parent, w)
                # strip the common prefix, keep the last shared vertex
                s = 0
                while s + 1 < min(len(pu), len(pw)) and pu[s + 1] == pw[s + 1]:
                    s += 1
                cycle = pu[s:] + list(reversed(pw[s + 1:]))
                return {"path": pu[:s + 1], "cycle": cycle}
    return None


def _root_path(parent: dict, u: int) -> list[int]:
    out = [u]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])
    return list(reversed(out))


# -- diagonal families ------------------------------------------------------

@dataclass
class DiagonalFamily:
    """``delta(e_i) = e_i ^ A_i + omega_i`` with ``A_i = sum_a lambda_{i,a} a``.

    ``lam`` is |V| x |A|; ``omega[i]`` is a grade-2 vector of ``from_graph(graph)``
    supported in Lambda^2 z.
    """

    graph: Graph
    lam: Mat
    omega: list[ExtVector]
    algebra: TwoStepAlgebra = field(init=False, repr=False)

    def __post_init__(self):
        self.algebra = from_graph(self.graph)
        if self.lam.shape != (self.graph.vertex_count, self.graph.edge_count):
            raise ValueError("lambda must be |V| x |A|")
        if len(self.omega) != self.graph.vertex_count:
            raise ValueError("need one omega per vertex")
        zz = graded_projectors(self.algebra).zz
        if not all(w.supported_in(zz) for w in self.omega):
            raise ValueError("omega vectors must lie in Lambda^2 z")

    @classmethod
    def from_vector(cls, g: Graph, vec: Sequence, omega: Sequence[ExtVector] | None = None):
        lam = Mat(g.vertex_count, g.edge_count, vec)
        a = from_graph(g)
        if omega is None:
            omega = [ExtVector.zero(a.dim, 2)] * g.vertex_count
        return cls(g, lam, list(omega))

    def central_element(self, i: int):
        a = self.algebra
        return a.element([ZERO] * a.dim_w + list(self.lam.row(i)))


def diagonal_build(fam: DiagonalFamily) -> Cobracket:
    a = fam.algebra
    cols = []
    for i in range(a.dim_w):
        col = fam.omega[i]
        ai = fam.central_element(i)
        if not ai.is_zero():
            col = col + wedge(a.basis(i), ai)
        cols.append(col)
    cols.extend([ExtVector.zero(a.dim, 2)] * a.dim_z)
    return Cobracket(a, cols)


@dataclass
class OmegaReport:
    residuals: dict[str, ExtVector]
    cojacobi_agrees: bool

    @property
    def ok(self) -> bool:
        return not self.residuals


def omega_constraints(fam: DiagonalFamily) -> OmegaReport:
    """Per-vertex ``omega_i ^ A_i`` in Lambda^3 z, compared with the full co-Jacobi check."""
    a = fam.algebra
    residuals = {}
    for i in range(a.dim_w):
        ai = fam.central_element(i)
        if ai.is_zero() or fam.omega[i].is_zero():
            continue
        r = wedge(fam.omega[i], ai)
        if not r.is_zero():
            residuals[a.labels[i]] = r
    full = check_cojacobi(diagonal_build(fam))
    agrees = set(full.residuals) == set(residuals) and all(
        full.residuals[k] == residuals[k] for k in residuals)
    return OmegaReport(residuals, agrees)


# -- parameter counts -------------------------------------------------------

@dataclass(frozen=True)
class ParameterRow:
    n: int
    cycle_va: int
    cycle_omega: int
    complete_va: int
    complete_omega: int
    closed_form_ok: bool

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.cycle_va, self.cycle_omega, self.complete_va, self.complete_omega)


def _counts(g: Graph) -> tuple[int, int]:
    v, e = g.vertex_count, g.edge_count
    return v * e, v * comb(e, 2)


def parameter_table(n_range: Iterable[int], kinds=("cycle", "complete")) -> list[ParameterRow]:
    """|V||A| and |V| C(|A|, 2) for C_n and K_n, counted on the built graphs."""
    if set(kinds) - {"cycle", "complete"}:
        raise ValueError(f"unknown graph kinds {kinds}")
    rows = []
    for n in n_range:
        if n < 3:
            raise ValueError("n must be at least 3")
        cva, com = _counts(cycle_graph(n))
        kva, kom = _counts(complete_graph(n))
        closed = (cva == n * n and com == n * n * (n - 1) // 2
                  and kva == n * n * (n - 1) // 2
                  and 8 * kom == n * n * (n + 1) * (n - 1) * (n - 2))
        rows.append(ParameterRow(n, cva, com, kva, kom, closed))
    return rows


# -- commuting D ------------------------------------------------------------

def commuting_d_check(d: Cobracket) -> bool:
    if not is_nearly_coboundary(d):
        warnings.warn("commuting-D check on a cobracket that does not vanish on the center",
                      HypothesisWarning, stacklevel=2)
    ds = read_d_family(d)
    return all(x @ y == y @ x for k, x in enumerate(ds) for y in ds[k + 1:])


# -- classification report --------------------------------------------------

@dataclass
class ClassificationReport:
    graph: Graph
    lambda_space: SolutionSpace
    forced_zero: list[tuple[int, int]]
    omega_free_parameters: int
    omega_free_parameters_generic: int
    parity_consistent: bool
    caveats: list[str]

    @property
    def lambda_dim(self) -> int:
        return self.lambda_space.dim

    def to_json(self) -> dict:
        g = self.graph
        lab = lambda v, k: [g.vertex_label(v), g.edge_label(k)]
        basis = [[[*lab(v, k), format_rational(c)]
                  for (v, k), c in zip(self.lambda_space.labels, vec) if c]
                 for vec in self.lambda_space.basis]
        return {"graph": g.to_json(),
                "lambda_dim": self.lambda_dim,
                "lambda_basis": basis,
                "forced_zero_lambdas": [lab(v, k) for v, k in self.forced_zero],
                "omega_free_parameters": self.omega_free_parameters,
                "omega_free_parameters_generic": self.omega_free_parameters_generic,
                "parity_consistent": self.parity_consistent,
                "caveats": list(self.caveats)}


def generic_lambda(space: SolutionSpace) -> tuple[Fraction, ...]:
    """A fixed combination with distinct weights, generic for small systems."""
    return space.combination([k + 2 for k in range(space.dim)])


def omega_kernel_dim(a: TwoStepAlgebra, central) -> int:
    """Dimension of ``{omega in Lambda^2 z : omega ^ central = 0}``."""
    zz = graded_projectors(a).zz
    idx2 = ExteriorIndex.get(a.dim, 2)
    cols = []
    for pos in zz:
        p, q = idx2.tuples[pos]
        w = ExtVector.from_terms(a.dim, 2, {(p, q): 1})
        cols.append(wedge(w, central).coeffs)
    if not cols:
        return 0
    m = Mat.from_rows(cols).transpose()
    return len(zz) - rank(m)


def classify_diagonal(g: Graph) -> ClassificationReport:
    space = lambda_system(g)
    forced = forced_zero_lambdas(g, space)
    forced_set = set(forced)
    parity_ok = all((parity_certificate(g, v, k) is not None) == ((v, k) in forced_set)
                    for v, k in space.labels)
    a = from_graph(g)
    lam0 = g.vertex_count * comb(g.edge_count, 2)
    fam = DiagonalFamily.from_vector(g, generic_lambda(space))
    generic = sum(omega_kernel_dim(a, fam.central_element(i)) for i in range(g.vertex_count))
    caveats = []
    if not min_degree_at_least_two(g):
        caveats.append("minimum degree < 2: the structure theorems do not apply, "
                       "cobrackets need not have the restricted shape")
    return ClassificationReport(g, space, forced, lam0, generic, parity_ok, caveats)


# -- f_3 families -----------------------------------------------------------

# Cyclic labels of K_3: alpha = [e1,e2] = a1_2, beta = [e2,e3] = a2_3 and
# gamma = [e3,e1] = -a1_3.  Values are (center index, sign) in from_graph(K_3).
F3_EDGES = {"alpha": (0, 1), "beta": (2, 1), "gamma": (1, -1)}
F3_PARAMS = ("lam", "lam_prime", "a", "b", "c", "mu", "nu", "rho", "tau")
F3_CASE_PARAMS = {
    "I": ("lam", "lam_prime", "a", "b", "c", "mu", "nu", "tau"),
    "II": ("lam", "a", "b", "c", "mu", "nu", "rho"),
    "III": ("lam", "a", "b", "c", "mu", "nu", "rho"),
}


def _q(x) -> Fraction:
    return as_fraction(x)


@dataclass(frozen=True)
class F3Family:
    """One of the non-diagonalizable D-families on f_3.

    ``omega`` holds three elements of Lambda^2 z given by their coefficients on
    (alpha^beta, alpha^gamma, beta^gamma).
    """

    case: str
    lam: Fraction = ZERO
    lam_prime: Fraction = ZERO
    a: Fraction = ZERO
    b: Fraction = ZERO
    c: Fraction = ZERO
    mu: Fraction = ZERO
    nu: Fraction = ZERO
    rho: Fraction = ZERO
    tau: Fraction = ZERO
    omega: tuple = ((0, 0, 0), (0, 0, 0), (0, 0, 0))

    def __post_init__(self):
        if self.case not in F3_CASE_PARAMS:
            raise ValueError(f"unknown case {self.case!r}")
        for name in F3_PARAMS:
            object.__setattr__(self, name, _q(getattr(self, name)))
        om = tuple(tuple(_q(x) for x in w) for w in self.omega)
        if len(om) != 3 or any(len(w) != 3 for w in om):
            raise ValueError("omega must be three triples")
        object.__setattr__(self, "omega", om)

    def validate(self) -> None:
        if self.case == "I" and self.lam == self.lam_prime:
            raise ValueError("case I needs lam != lam_prime")

    def matrices(self) -> tuple[Mat, Mat, Mat]:
        """(D_alpha, D_beta, D_gamma); column j is the image of e_{j+1}."""
        l, lp, a, b, c = self.lam, self.lam_prime, self.a, self.b, self.c
        mu, nu, rho, tau = self.mu, self.nu, self.rho, self.tau
        if self.case == "I":
            da = [[l, 1, 0], [0, l, 0], [0, 0, lp]]
            db = [[a, b, 0], [0, a, 0], [0, 0, c]]
            dg = [[mu, nu, 0], [0, mu, 0], [0, 0, tau]]
        elif self.case == "II":
            da = [[l, 1, 0], [0, l, 1], [0, 0, l]]
            db = [[a, b, c], [0, a, b], [0, 0, a]]
            dg = [[mu, nu, rho], [0, mu, nu], [0, 0, mu]]
        else:
            da = [[l, 1, 0], [0, l, 0], [0, 0, l]]
            db = [[a, b, c], [0, a, 0], [0, 0, a]]
            dg = [[mu, nu, rho], [0, mu, 0], [0, 0, mu]]
        return Mat.from_rows(da), Mat.from_rows(db), Mat.from_rows(dg)

    def central(self) -> dict[str, tuple[Fraction, Fraction, Fraction]]:
        """A, B, C, D as coefficient triples over (alpha, beta, gamma)."""
        return {"A": (self.lam, self.a, self.mu),
                "B": (Fraction(1), self.b, self.nu),
                "C": (ZERO, self.c, self.rho),
                "D": (self.lam_prime, self.c, self.tau)}

    def with_params(self, **kw) -> "F3Family":
        return replace(self, **kw)


def f3_algebra() -> TwoStepAlgebra:
    return from_graph(complete_graph(3))


def _f3_center(a: TwoStepAlgebra, coeffs) -> "object":
    """Element of z from (alpha, beta, gamma) coefficients."""
    z = [ZERO] * 3
    for name, c in zip(("alpha", "beta", "gamma"), coeffs):
        k, s = F3_EDGES[name]
        z[k] += s * _q(c)
    return a.element([ZERO] * 3 + z)


def _f3_lambda2z(a: TwoStepAlgebra, coeffs) -> ExtVector:
    """Element of Lambda^2 z from (alpha^beta, alpha^gamma, beta^gamma) coefficients."""
    out = ExtVector.zero(a.dim, 2)
    basis = [_f3_center(a, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    for (x, y), c in zip(((0, 1), (0, 2), (1, 2)), coeffs):
        if c:
            out = out + c * wedge(basis[x], basis[y])
    return out


def _f3_build_unchecked(fam: F3Family) -> Cobracket:
    a = f3_algebra()
    mats = fam.matrices()
    edges = [_f3_center(a, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    cols = []
    for i in range(3):
        col = _f3_lambda2z(a, fam.omega[i])
        for dm, edge in zip(mats, edges):
            image = list(dm.col(i)) + [ZERO] * 3
            if any(image):
                col = col + wedge(a.element(image), edge)
        cols.append(col)
    cols.extend([ExtVector.zero(a.dim, 2)] * 3)
    return Cobracket(a, cols)


def f3_build(fam: F3Family) -> Cobracket:
    """``delta(e_i) = sum_E D_E(e_i) ^ E + omega_i`` on f_3, zero on the center."""
    fam.validate()
    return _f3_build_unchecked(fam)


def f3_closed_form(fam: F3Family) -> Cobracket:
    """The same cobracket written through the central elements A, B, C, D."""
    a = f3_algebra()
    cen = {k: _f3_center(a, v) for k, v in fam.central().items()}
    e = [a.basis(i) for i in range(3)]
    om = [_f3_lambda2z(a, w) for w in fam.omega]
    d1 = wedge(e[0], cen["A"]) + om[0]
    d2 = wedge(e[1], cen["A"]) + wedge(e[0], cen["B"]) + om[1]
    if fam.case == "I":
        d3 = wedge(e[2], cen["D"]) + om[2]
    elif fam.case == "II":
        d3 = wedge(e[2], cen["A"]) + wedge(e[1], cen["B"]) + wedge(e[0], cen["C"]) + om[2]
    else:
        d3 = wedge(e[2], cen["A"]) + wedge(e[0], cen["C"]) + om[2]
    zero = ExtVector.zero(a.dim, 2)
    return Cobracket(a, [d1, d2, d3, zero, zero, zero])


def _omega_wedge(w, x) -> Fraction:
    """Coefficient of alpha^beta^gamma in ``w ^ x`` (w in Lambda^2 z, x in z)."""
    return w[0] * x[2] - w[1] * x[1] + w[2] * x[0]


@dataclass
class F3Residuals:
    values: tuple[Fraction, Fraction, Fraction]
    cojacobi_agrees: bool

    @property
    def ok(self) -> bool:
        return not any(self.values)


def f3_residual_values(fam: F3Family) -> tuple[Fraction, Fraction, Fraction]:
    """The three co-Jacobi expressions, on the alpha^beta^gamma coefficient."""
    w1, w2, w3 = fam.omega
    cen = fam.central()
    A, B, C, D = cen["A"], cen["B"], cen["C"], cen["D"]
    r1 = _omega_wedge(w1, A)
    r2 = _omega_wedge(w2, A) + _omega_wedge(w1, B)
    if fam.case == "I":
        r3 = _omega_wedge(w3, D)
    elif fam.case == "II":
        r3 = _omega_wedge(w3, A) + _omega_wedge(w2, B) + _omega_wedge(w1, C)
    else:
        r3 = _omega_wedge(w3, A) + _omega_wedge(w1, C)
    return (r1, r2, r3)


def f3_residuals(fam: F3Family) -> F3Residuals:
    """Evaluate the wedge constraints and compare them, generator by generator,
    with the generic co-Jacobi residual of ``f3_build(fam)``.

    In from_graph(K_3), alpha^beta^gamma equals a1_2^a1_3^a2_3, so the values
    must coincide exactly.
    """
    values = f3_residual_values(fam)
    d = _f3_build_unchecked(fam)
    a = d.algebra
    pos = ExteriorIndex.get(a.dim, 3).position[(3, 4, 5)]
    agrees = True
    for i in range(3):
        r = d.extend(d.columns[i])
        expected = ExtVector.zero(a.dim, 3).coeffs
        expected = tuple(values[i] if k == pos else ZERO for k in range(len(expected)))
        if r.coeffs != expected:
            agrees = False
    return F3Residuals(values, agrees)


def f3_cocycle_locus(case: str) -> tuple[dict, SolutionSpace] | None:
    """Parameter values of a case for which ``f3_build`` satisfies the 1-cocycle.

    The cocycle residual is affine in the D-parameters (omega drops out, being
    central), so the locus is an affine subspace: returns a particular
    solution and the direction space, or None when it is empty.
    """
    names = F3_CASE_PARAMS[case]

    def residual(**kw):
        d = _f3_build_unchecked(F3Family(case, **kw))
        out = []
        for p in range(6):
            for q in range(p + 1, 6):
                out.extend(cocycle_residual(d, p, q).coeffs)
        return out

    r0 = residual()
    cols = []
    for name in names:
        r = residual(**{name: 1})
        cols.append([x - y for x, y in zip(r, r0)])
    m = Mat.from_rows(cols).transpose()
    particular = solve(m, [-x for x in r0])
    if particular is None:
        return None
    return dict(zip(names, particular)), nullspace(m, labels=list(names))
