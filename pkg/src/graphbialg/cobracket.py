"""Cobrackets delta: n -> Lambda^2 n and exact checks of the bialgebra axioms.

A cobracket is stored as one grade-2 column per basis generator.  It extends
to Lambda^2 n by ``delta(a ^ b) = delta(a) ^ b - a ^ delta(b)``; co-Jacobi is
the vanishing of that extension composed with delta, and the 1-cocycle
condition is ``delta[x, y] = ad_x delta(y) - ad_y delta(x)``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .algebra import TwoStepAlgebra, bracket
from .exterior import (ExteriorIndex, ExtVector, ad_on_ext, graded_projectors,
                       lambda3_w_mask, wedge)
from .linalg import Mat, as_fraction

ZERO = Fraction(0)


class HypothesisWarning(UserWarning):
    """A check ran on input that does not meet its stated precondition."""


class CobracketFormatError(ValueError):
    pass


class Cobracket:
    def __init__(self, algebra: TwoStepAlgebra, columns: Sequence[ExtVector]):
        columns = tuple(columns)
        if len(columns) != algebra.dim:
            raise ValueError(f"need {algebra.dim} columns, got {len(columns)}")
        for c in columns:
            if c.grade != 2 or c.dim != algebra.dim:
                raise ValueError("columns must be grade-2 vectors of this algebra")
        self.algebra = algebra
        self.columns = columns

    @classmethod
    def zero(cls, a: TwoStepAlgebra) -> "Cobracket":
        z = ExtVector.zero(a.dim, 2)
        return cls(a, [z] * a.dim)

    @classmethod
    def from_terms(cls, a: TwoStepAlgebra, terms_by_gen: dict) -> "Cobracket":
        """``terms_by_gen`` maps generator (label or index) to ``{(p, q): coeff}``."""
        cols = [ExtVector.zero(a.dim, 2)] * a.dim
        for gen, terms in terms_by_gen.items():
            k = a.index_of(gen) if isinstance(gen, str) else gen
            resolved = {tuple(a.index_of(b) if isinstance(b, str) else b for b in key): c
                        for key, c in terms.items()}
            cols[k] = ExtVector.from_terms(a.dim, 2, resolved)
        return cls(a, cols)

    def __add__(self, other: "Cobracket") -> "Cobracket":
        return Cobracket(self.algebra, [x + y for x, y in zip(self.columns, other.columns)])

    def __mul__(self, scalar) -> "Cobracket":
        s = as_fraction(scalar)
        return Cobracket(self.algebra, [s * c for c in self.columns])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cobracket):
            return NotImplemented
        return self.algebra.same_structure(other.algebra) and self.columns == other.columns

    def apply(self, vector: Sequence) -> ExtVector:
        """delta of an arbitrary element given by its coefficient vector."""
        out = ExtVector.zero(self.algebra.dim, 2)
        for k, c in enumerate(vector):
            if c:
                out = out + c * self.columns[k]
        return out

    def extend(self, omega: ExtVector) -> ExtVector:
        """delta on Lambda^2: ``delta(b_p ^ b_q) = delta(b_p) ^ b_q - delta(b_q) ^ b_p``."""
        a = self.algebra
        out = ExtVector.zero(a.dim, 3)
        for (p, q), c in omega.terms().items():
            dp, dq = self.columns[p], self.columns[q]
            if not dp.is_zero():
                out = out + c * wedge(dp, a.basis(q))
            if not dq.is_zero():
                out = out - c * wedge(dq, a.basis(p))
        return out

    def to_json(self) -> dict:
        labels = self.algebra.labels
        return {"algebra": self.algebra.to_json(),
                "columns": {labels[k]: col.to_json(labels)
                            for k, col in enumerate(self.columns)}}

    @classmethod
    def from_json(cls, obj: dict) -> "Cobracket":
        if not isinstance(obj, dict) or "algebra" not in obj or "columns" not in obj:
            raise CobracketFormatError("cobracket JSON needs 'algebra' and 'columns'")
        try:
            a = TwoStepAlgebra.from_json(obj["algebra"])
        except (KeyError, TypeError, ValueError) as exc:
            raise CobracketFormatError(f"bad algebra: {exc}") from exc
        labels = a.labels
        cols = [ExtVector.zero(a.dim, 2)] * a.dim
        for lab, terms in obj["columns"].items():
            if lab not in labels:
                raise CobracketFormatError(f"unknown generator {lab!r}")
            try:
                cols[labels.index(lab)] = ExtVector.from_json(terms, labels, grade=2)
            except (KeyError, TypeError, ValueError) as exc:
                raise CobracketFormatError(f"column {lab}: {exc}") from exc
        return cls(a, cols)

    def pretty(self) -> str:
        labels = self.algebra.labels
        return "\n".join(f"delta({labels[k]}) = {c.pretty(labels)}"
                         for k, c in enumerate(self.columns))


@dataclass
class ResidualReport:
    residuals: dict[str, ExtVector] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.residuals

    def to_json(self, labels) -> dict:
        return {"ok": self.ok,
                "residuals": {k: v.to_json(labels) for k, v in self.residuals.items()}}


def cojacobi_residual(d: Cobracket, generator: int) -> ExtVector:
    return d.extend(d.columns[generator])


def check_cojacobi(d: Cobracket, generators: Sequence[int] | None = None) -> ResidualReport:
    labels = d.algebra.labels
    gens = range(d.algebra.dim) if generators is None else generators
    report = ResidualReport()
    for k in gens:
        r = cojacobi_residual(d, k)
        if not r.is_zero():
            report.residuals[labels[k]] = r
    return report


def cocycle_residual(d: Cobracket, p: int, q: int) -> ExtVector:
    a = d.algebra
    bp, bq = a.basis(p), a.basis(q)
    lhs = d.apply(bracket(bp, bq).vector)
    return lhs - ad_on_ext(a, bp, d.columns[q]) + ad_on_ext(a, bq, d.columns[p])


def check_cocycle(d: Cobracket) -> ResidualReport:
    """Residual on every basis pair, central generators included."""
    a = d.algebra
    labels = a.labels
    report = ResidualReport()
    for p, q in combinations(range(a.dim), 2):
        r = cocycle_residual(d, p, q)
        if not r.is_zero():
            report.residuals[f"[{labels[p]},{labels[q]}]"] = r
    return report


def is_bialgebra(d: Cobracket) -> bool:
    return check_cocycle(d).ok and check_cojacobi(d).ok


def delta1(d: Cobracket) -> Cobracket:
    """Lambda^2 W block of delta on W; zero on the center."""
    a = d.algebra
    ww = graded_projectors(a).ww
    zero = ExtVector.zero(a.dim, 2)
    cols = [d.columns[k].project(ww) if k < a.dim_w else zero for k in range(a.dim)]
    return Cobracket(a, cols)


def delta1_cojacobi(d: Cobracket) -> bool:
    if not is_bialgebra(d):
        warnings.warn("delta1 co-Jacobi checked on a cobracket that is not a bialgebra",
                      HypothesisWarning, stacklevel=2)
    d1 = delta1(d)
    w3 = lambda3_w_mask(d.algebra)
    for k in range(d.algebra.dim_w):
        r = cojacobi_residual(d1, k)
        if not r.supported_in(w3):
            raise ArithmeticError("delta1 co-Jacobi residual left Lambda^3 W")
        if not r.is_zero():
            return False
    return True


def is_nearly_coboundary(d: Cobracket) -> bool:
    a = d.algebra
    return all(d.columns[k].is_zero() for k in range(a.dim_w, a.dim))


@dataclass
class ContainmentReport:
    hypotheses_satisfied: bool
    violations: list[tuple[str, tuple[str, str]]]
    note: str = ""

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"hypotheses_satisfied": self.hypotheses_satisfied, "ok": self.ok,
                "violations": [[g, list(pair)] for g, pair in self.violations],
                "note": self.note}


def structural_containment(d: Cobracket, hypotheses: bool | None = None) -> ContainmentReport:
    """delta(z) inside Lambda^2 z and delta(W) inside W^z + Lambda^2 z.

    ``hypotheses`` may carry a precomputed verdict of
    ``invariants_equal_lambda2z and is_tst_type``.
    """
    from .invariants import invariants_equal_lambda2z
    from .tst import is_tst_type

    a = d.algebra
    if hypotheses is None:
        hypotheses = invariants_equal_lambda2z(a) and is_tst_type(a)
    masks = graded_projectors(a)
    idx = ExteriorIndex.get(a.dim, 2)
    labels = a.labels
    allowed_w = set(masks.wz) | set(masks.zz)
    allowed_z = set(masks.zz)
    violations = []
    for k, col in enumerate(d.columns):
        allowed = allowed_z if k >= a.dim_w else allowed_w
        for pos, c in enumerate(col.coeffs):
            if c and pos not in allowed:
                p, q = idx.tuples[pos]
                violations.append((labels[k], (labels[p], labels[q])))
    note = "" if hypotheses else "hypotheses not satisfied, containment not guaranteed"
    return ContainmentReport(hypotheses, violations, note)


# -- construction data ------------------------------------------------------

@dataclass
class ConstructionData:
    """Data (delta_z, D^1..D^m, Phi*) assembling a cobracket on W + z.

    ``delta_z[i]`` and ``phi_star[v]`` are grade-2 vectors of the algebra
    supported in Lambda^2 z; ``d_family[i]`` is a dim_w x dim_w matrix whose
    column v is ``D^i(b_v)``.
    """

    delta_z: list[ExtVector]
    d_family: list[Mat]
    phi_star: list[ExtVector]

    @classmethod
    def zero(cls, a: TwoStepAlgebra) -> "ConstructionData":
        z = ExtVector.zero(a.dim, 2)
        return cls([z] * a.dim_z, [Mat(a.dim_w, a.dim_w) for _ in range(a.dim_z)],
                   [z] * a.dim_w)

    def validate(self, a: TwoStepAlgebra) -> None:
        if len(self.delta_z) != a.dim_z or len(self.d_family) != a.dim_z:
            raise ValueError("delta_z and d_family need one entry per central generator")
        if len(self.phi_star) != a.dim_w:
            raise ValueError("phi_star needs one entry per W generator")
        zz = graded_projectors(a).zz
        for v in list(self.delta_z) + list(self.phi_star):
            if v.dim != a.dim or v.grade != 2 or not v.supported_in(zz):
                raise ValueError("delta_z and phi_star values must lie in Lambda^2 z")
        for m in self.d_family:
            if m.shape != (a.dim_w, a.dim_w):
                raise ValueError("D matrices must be dim_w x dim_w")


def build_from_data(a: TwoStepAlgebra, data: ConstructionData) -> Cobracket:
    """delta(z_i) = delta_z(z_i); delta(v) = sum_i D^i(v) ^ z_i + Phi*(v)."""
    data.validate(a)
    cols = []
    for v in range(a.dim_w):
        col = data.phi_star[v]
        for i, dm in enumerate(data.d_family):
            image = list(dm.col(v)) + [ZERO] * a.dim_z
            if any(image):
                col = col + wedge(a.element(image), a.basis(a.dim_w + i))
        cols.append(col)
    cols.extend(data.delta_z)
    return Cobracket(a, cols)


def read_d_family(d: Cobracket) -> list[Mat]:
    """D^i with ``delta(v)``'s W^z block written as ``sum_i D^i(v) ^ z_i``."""
    a = d.algebra
    idx = ExteriorIndex.get(a.dim, 2)
    mats = [Mat(a.dim_w, a.dim_w) for _ in range(a.dim_z)]
    for v in range(a.dim_w):
        for p in range(a.dim_w):
            for i in range(a.dim_z):
                c = d.columns[v].coeffs[idx.position[(p, a.dim_w + i)]]
                if c:
                    mats[i]._data[p][v] = c
    return mats


def decompose(d: Cobracket) -> ConstructionData:
    a = d.algebra
    zz = graded_projectors(a).zz
    return ConstructionData([d.columns[a.dim_w + i].project(zz) for i in range(a.dim_z)],
                            read_d_family(d),
                            [d.columns[v].project(zz) for v in range(a.dim_w)])


@dataclass
class ConstructionCheck:
    cojacobi_delta_z: bool
    homomorphism: bool
    compatibility: bool
    phi_cocycle: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.cojacobi_delta_z and self.homomorphism
                and self.compatibility and self.phi_cocycle)

    def to_json(self) -> dict:
        return {"cojacobi_delta_z": self.cojacobi_delta_z, "homomorphism": self.homomorphism,
                "compatibility": self.compatibility, "phi_cocycle": self.phi_cocycle,
                "ok": self.ok, "failures": list(self.failures)}


def dual_structure_constants(a: TwoStepAlgebra, delta_z: Sequence[ExtVector]) -> dict:
    """``{(p, q): [c_i]}`` with ``delta_z(z_i) = sum_{p<q} c_i^{pq} z_p ^ z_q``."""
    idx = ExteriorIndex.get(a.dim, 2)
    out = {}
    for p, q in combinations(range(a.dim_z), 2):
        pos = idx.position[(a.dim_w + p, a.dim_w + q)]
        out[(p, q)] = [dz.coeffs[pos] for dz in delta_z]
    return out


def check_construction_data(a: TwoStepAlgebra, data: ConstructionData) -> ConstructionCheck:
    """Verify the four conditions that make ``build_from_data`` a bialgebra.

    1. delta_z satisfies co-Jacobi.
    2. p -> D^p is a Lie map for the dual bracket on z*; with the sign
       convention used here this reads ``[D^p, D^q] = sum_i c_i^{pq} D^i``.
    3. ``delta_z([x, y]) = sum_j ([D^j x, y] + [x, D^j y]) ^ z_j`` on W pairs.
    4. Phi is a 2-cocycle: ``sum_i Phi*(D^i v) ^ z_i + delta_z(Phi*(v)) = 0``
       in Lambda^3 z for every W generator v.
    """
    data.validate(a)
    failures = []
    zero = ExtVector.zero(a.dim, 2)
    dz_only = Cobracket(a, [zero] * a.dim_w + list(data.delta_z))

    cj = check_cojacobi(dz_only, generators=range(a.dim_w, a.dim))
    if not cj.ok:
        failures.extend(f"delta_z co-Jacobi fails at {g}" for g in cj.residuals)

    hom = True
    consts = dual_structure_constants(a, data.delta_z)
    for (p, q), cs in consts.items():
        dp, dq = data.d_family[p], data.d_family[q]
        rhs = Mat(a.dim_w, a.dim_w)
        for c, di in zip(cs, data.d_family):
            if c:
                rhs = rhs + c * di
        if dp @ dq - dq @ dp != rhs:
            hom = False
            failures.append(f"[D^{p + 1}, D^{q + 1}] != sum_i c_i D^i")

    compat = True
    for x, y in combinations(range(a.dim_w), 2):
        bx, by = a.basis(x), a.basis(y)
        lhs = dz_only.apply(bracket(bx, by).vector)
        rhs = zero
        for j, dj in enumerate(data.d_family):
            dx = a.element(list(dj.col(x)) + [ZERO] * a.dim_z)
            dy = a.element(list(dj.col(y)) + [ZERO] * a.dim_z)
            s = bracket(dx, by) + bracket(bx, dy)
            if not s.is_zero():
                rhs = rhs + wedge(s, a.basis(a.dim_w + j))
        if lhs != rhs:
            compat = False
            failures.append(f"compatibility fails on ({a.labels[x]}, {a.labels[y]})")

    phi_ok = True
    for v in range(a.dim_w):
        total = dz_only.extend(data.phi_star[v])
        for i, di in enumerate(data.d_family):
            image = di.col(v)
            if any(image):
                phi_dv = zero
                for k, c in enumerate(image):
                    if c:
                        phi_dv = phi_dv + c * data.phi_star[k]
                if not phi_dv.is_zero():
                    total = total + wedge(phi_dv, a.basis(a.dim_w + i))
        if not total.is_zero():
            phi_ok = False
            failures.append(f"Phi cocycle fails at {a.labels[v]}")

    return ConstructionCheck(cj.ok, hom, compat, phi_ok, failures)


@dataclass
class VerifyReport:
    cojacobi: ResidualReport
    cocycle: ResidualReport
    nearly_coboundary: bool
    containment: ContainmentReport | None

    @property
    def is_bialgebra(self) -> bool:
        return self.cojacobi.ok and self.cocycle.ok

    def to_json(self, labels) -> dict:
        return {"is_bialgebra": self.is_bialgebra,
                "cojacobi": self.cojacobi.to_json(labels),
                "cocycle": self.cocycle.to_json(labels),
                "nearly_coboundary": self.nearly_coboundary,
                "containment": self.containment.to_json() if self.containment else None}


def verify(d: Cobracket) -> VerifyReport:
    """Both axioms, the nearly-coboundary flag and, when the structure
    hypotheses hold, the containment check."""
    from .invariants import invariants_equal_lambda2z
    from .tst import is_tst_type

    a = d.algebra
    hyp = invariants_equal_lambda2z(a) and is_tst_type(a)
    containment = structural_containment(d, hypotheses=hyp) if hyp else None
    return VerifyReport(check_cojacobi(d), check_cocycle(d), is_nearly_coboundary(d), containment)
