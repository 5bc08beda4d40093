"""The ad-invariant bivectors (Lambda^2 n)^n and the test (Lambda^2 n)^n = Lambda^2 z."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .algebra import TwoStepAlgebra, ad_matrix_on_lambda2
from .exterior import ExteriorIndex, ExtVector, graded_projectors
from .linalg import Mat, SolutionSpace, nullspace


def invariant_subspace(a: TwoStepAlgebra, include_central: bool = False) -> SolutionSpace:
    """Nullspace of the stacked ``ad_{b_x}`` matrices over the W generators.

    Central generators act by zero; ``include_central`` stacks them anyway.
    """
    gens = range(a.dim if include_central else a.dim_w)
    idx = ExteriorIndex.get(a.dim, 2)
    stacked = Mat.stack([ad_matrix_on_lambda2(a, x) for x in gens], cols=idx.size)
    return nullspace(stacked, labels=list(idx.tuples))


def invariant_basis(a: TwoStepAlgebra, space: SolutionSpace | None = None) -> list[ExtVector]:
    if space is None:
        space = invariant_subspace(a)
    return [ExtVector(a.dim, 2, v) for v in space.basis]


def invariants_equal_lambda2z(a: TwoStepAlgebra, space: SolutionSpace | None = None) -> bool:
    if space is None:
        space = invariant_subspace(a)
    zz = set(graded_projectors(a).zz)
    if space.dim != comb(a.dim_z, 2):
        return False
    return all(all(k in zz for k, c in enumerate(v) if c) for v in space.basis)


@dataclass
class InvariantsReport:
    dim_invariants: int
    dim_lambda2z: int
    equal: bool
    basis: list[ExtVector]

    def to_json(self, labels) -> dict:
        return {"dim_invariants": self.dim_invariants,
                "dim_lambda2z": self.dim_lambda2z,
                "equal": self.equal,
                "basis": [v.to_json(labels) for v in self.basis]}


def invariants_report(a: TwoStepAlgebra) -> InvariantsReport:
    space = invariant_subspace(a)
    return InvariantsReport(space.dim, comb(a.dim_z, 2),
                            invariants_equal_lambda2z(a, space), invariant_basis(a, space))
