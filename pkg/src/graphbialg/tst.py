"""The TST system ``T_i S T_k + T_k S T_i = 0`` in an antisymmetric unknown S.

S is parametrized by its entries ``s_pq``, p < q, with ``S = sum s_pq (E_pq - E_qp)``.
Each equation pair (i, k), i <= k, contributes the upper-triangular entries of
an antisymmetric matrix, which is all the information it carries.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .algebra import TwoStepAlgebra, from_graph
from .graph import Graph, predicted_S_zero_pattern
from .linalg import Mat, SolutionSpace, format_rational, nullspace

ZERO = Fraction(0)


@dataclass
class TstSystem:
    algebra: TwoStepAlgebra
    unknowns: list[tuple[int, int]]
    row_labels: list[tuple[int, int, int, int]]  # (i, k, p, q)
    matrix: Mat


def antisymmetric_from_vector(dim_w: int, unknowns, vec) -> Mat:
    s = Mat(dim_w, dim_w)
    for (p, q), c in zip(unknowns, vec):
        if c:
            s._data[p][q] += c
            s._data[q][p] -= c
    return s


def assemble_tst(a: TwoStepAlgebra) -> TstSystem:
    n = a.dim_w
    unknowns = list(combinations(range(n), 2))
    entries = list(combinations(range(n), 2))
    rows, labels = [], []
    ts = [t.to_rows() for t in a.t_tensors]
    for i, k in combinations_with_replacement(range(a.dim_z), 2):
        ti, tk = ts[i], ts[k]
        for p, q in entries:
            row = []
            for r, s in unknowns:
                # (T_i (E_rs - E_sr) T_k)_{pq} + (T_k (E_rs - E_sr) T_i)_{pq}
                c = (ti[p][r] * tk[s][q] - ti[p][s] * tk[r][q]
                     + tk[p][r] * ti[s][q] - tk[p][s] * ti[r][q])
                row.append(c)
            rows.append(row)
            labels.append((i, k, p, q))
    return TstSystem(a, unknowns, labels, Mat.from_rows(rows, cols=len(unknowns)))


def tst_residual(a: TwoStepAlgebra, s: Mat) -> list[tuple[int, int]]:
    """Pairs (i, k) with ``T_i S T_k + T_k S T_i != 0``."""
    bad = []
    for i, k in combinations_with_replacement(range(a.dim_z), 2):
        ti, tk = a.t_tensors[i], a.t_tensors[k]
        if not (ti @ s @ tk + tk @ s @ ti).is_zero():
            bad.append((i, k))
    return bad


def solve_tst(system: TstSystem) -> SolutionSpace:
    """Nullspace of the TST system, each basis matrix re-checked by multiplication."""
    space = nullspace(system.matrix, labels=list(system.unknowns))
    a = system.algebra
    for v in space.basis:
        s = antisymmetric_from_vector(a.dim_w, system.unknowns, v)
        if tst_residual(a, s):
            raise ArithmeticError("TST solution failed re-verification")
    return space


def solution_matrices(system: TstSystem, space: SolutionSpace) -> list[Mat]:
    return [antisymmetric_from_vector(system.algebra.dim_w, system.unknowns, v)
            for v in space.basis]


def is_tst_type(a: TwoStepAlgebra) -> bool:
    return solve_tst(assemble_tst(a)).dim == 0


@dataclass
class TstReport:
    tst_type: bool
    solution_dim: int
    basis: list[Mat]
    zero_pattern_violations: list[tuple[int, int]] = field(default_factory=list)
    w_labels: tuple[str, ...] = ()

    def to_json(self) -> dict:
        basis = []
        for s in self.basis:
            terms = [[[self.w_labels[p], self.w_labels[q]], format_rational(s[p, q])]
                     for p, q in combinations(range(s.rows), 2) if s[p, q]]
            basis.append(terms)
        return {"tst_type": self.tst_type, "solution_dim": self.solution_dim,
                "basis": basis,
                "zero_pattern_violations": [[self.w_labels[i], self.w_labels[j]]
                                            for i, j in self.zero_pattern_violations]}


def tst_report(a: TwoStepAlgebra) -> TstReport:
    system = assemble_tst(a)
    space = solve_tst(system)
    mats = solution_matrices(system, space)
    violations = []
    if a.graph is not None:
        violations = zero_pattern_violations(a.graph, mats)
    return TstReport(space.dim == 0, space.dim, mats, violations, a.w_labels)


def zero_pattern_violations(g: Graph, mats: list[Mat]) -> list[tuple[int, int]]:
    return sorted((i, j) for i, j in predicted_S_zero_pattern(g)
                  if any(s[i, j] for s in mats))


def crosscheck_zero_pattern(g: Graph) -> TstReport:
    """Solve TST for the graph algebra and compare against the predicted zeros."""
    return tst_report(from_graph(g))
