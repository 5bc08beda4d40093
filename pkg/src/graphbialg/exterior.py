"""Lambda^2 n and Lambda^3 n with lexicographic flat bases.

A monomial with unsorted indices is normalized by sorting, picking up the
sign of the sorting permutation; that one rule fixes every sign downstream.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Union

from .algebra import Element, TwoStepAlgebra
from .linalg import as_fraction, format_rational, parse_rational

ZERO = Fraction(0)


class ExteriorIndex:
    """Flat positions of strictly increasing index tuples of a fixed grade."""

    def __init__(self, dim: int, grade: int):
        self.dim = dim
        self.grade = grade
        self.tuples = list(combinations(range(dim), grade))
        self.position = {t: k for k, t in enumerate(self.tuples)}

    @staticmethod
    @lru_cache(maxsize=None)
    def get(dim: int, grade: int) -> "ExteriorIndex":
        return ExteriorIndex(dim, grade)

    @property
    def size(self) -> int:
        return len(self.tuples)

    def locate(self, indices: Iterable[int]) -> tuple[int, int]:
        """(flat position, sign) of the monomial ``b_i1 ^ b_i2 ^ ...``."""
        idx = list(indices)
        sign = 1
        # insertion sort, counting transpositions
        for a in range(1, len(idx)):
            b = a
            while b > 0 and idx[b - 1] > idx[b]:
                idx[b - 1], idx[b] = idx[b], idx[b - 1]
                sign = -sign
                b -= 1
        for a in range(1, len(idx)):
            if idx[a] == idx[a - 1]:
                raise ValueError("repeated index: monomial is zero")
        return self.position[tuple(idx)], sign


@dataclass(frozen=True)
class ExtVector:
    dim: int
    grade: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != ExteriorIndex.get(self.dim, self.grade).size:
            raise ValueError("coefficient vector has the wrong length for this grade")

    @classmethod
    def zero(cls, dim: int, grade: int) -> "ExtVector":
        return cls(dim, grade, (ZERO,) * ExteriorIndex.get(dim, grade).size)

    @classmethod
    def from_terms(cls, dim: int, grade: int, terms) -> "ExtVector":
        """Build from ``{(i, j, ...): coeff}`` or an iterable of pairs; indices may be unsorted."""
        idx = ExteriorIndex.get(dim, grade)
        out = [ZERO] * idx.size
        items = terms.items() if isinstance(terms, dict) else terms
        for key, c in items:
            c = as_fraction(c)
            if not c or len(set(key)) < len(key):
                continue
            pos, sign = idx.locate(key)
            out[pos] += sign * c
        return cls(dim, grade, tuple(out))

    @classmethod
    def from_element(cls, x: Element) -> "ExtVector":
        return cls(x.algebra.dim, 1, x.vector)

    @property
    def index(self) -> ExteriorIndex:
        return ExteriorIndex.get(self.dim, self.grade)

    def terms(self) -> dict[tuple[int, ...], Fraction]:
        tuples = self.index.tuples
        return {tuples[k]: c for k, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "ExtVector") -> None:
        if (self.dim, self.grade) != (other.dim, other.grade):
            raise ValueError("exterior vectors of different spaces")

    def __add__(self, other: "ExtVector") -> "ExtVector":
        self._check(other)
        return ExtVector(self.dim, self.grade, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ExtVector") -> "ExtVector":
        self._check(other)
        return ExtVector(self.dim, self.grade, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "ExtVector":
        return ExtVector(self.dim, self.grade, tuple(-a for a in self.coeffs))

    def __mul__(self, scalar) -> "ExtVector":
        s = as_fraction(scalar)
        return ExtVector(self.dim, self.grade, tuple(s * a for a in self.coeffs))

    __rmul__ = __mul__

    def project(self, mask: Iterable[int]) -> "ExtVector":
        """Keep only the flat positions in ``mask``."""
        keep = set(mask)
        return ExtVector(self.dim, self.grade,
                         tuple(c if k in keep else ZERO for k, c in enumerate(self.coeffs)))

    def supported_in(self, mask: Iterable[int]) -> bool:
        keep = set(mask)
        return all(k in keep for k, c in enumerate(self.coeffs) if c)

    def to_json(self, labels) -> list[dict]:
        return [{"basis": [labels[i] for i in key], "coeff": format_rational(c)}
                for key, c in self.terms().items()]

    @classmethod
    def from_json(cls, terms: list[dict], labels, grade: int = 2) -> "ExtVector":
        lookup = {lab: k for k, lab in enumerate(labels)}
        pairs = []
        for t in terms:
            key = tuple(lookup[b] for b in t["basis"])
            if len(key) != grade:
                raise ValueError(f"term {t!r} does not have grade {grade}")
            pairs.append((key, parse_rational(t["coeff"])))
        return cls.from_terms(len(labels), grade, pairs)

    def pretty(self, labels) -> str:
        parts = [f"{format_rational(c)}*{'^'.join(labels[i] for i in key)}"
                 for key, c in self.terms().items()]
        return " + ".join(parts) if parts else "0"


Graded = Union[Element, ExtVector]


def _as_ext(x: Graded) -> ExtVector:
    return ExtVector.from_element(x) if isinstance(x, Element) else x


def wedge(x: Graded, y: Graded) -> ExtVector:
    """Exterior product for grades 1^1, 2^1 and 1^2."""
    u, v = _as_ext(x), _as_ext(y)
    if u.dim != v.dim:
        raise ValueError("operands live in different algebras")
    grade = u.grade + v.grade
    if (u.grade, v.grade) not in ((1, 1), (2, 1), (1, 2)):
        raise ValueError(f"unsupported grades {u.grade}^{v.grade}")
    idx = ExteriorIndex.get(u.dim, grade)
    out = [ZERO] * idx.size
    vt = v.terms()
    for ka, ca in u.terms().items():
        for kb, cb in vt.items():
            key = ka + kb
            if len(set(key)) < grade:
                continue
            pos, sign = idx.locate(key)
            out[pos] += sign * ca * cb
    return ExtVector(u.dim, grade, tuple(out))


@dataclass(frozen=True)
class GradedMasks:
    ww: tuple[int, ...]
    wz: tuple[int, ...]
    zz: tuple[int, ...]

    def sizes(self) -> tuple[int, int, int]:
        return (len(self.ww), len(self.wz), len(self.zz))


def graded_projectors(a: TwoStepAlgebra) -> GradedMasks:
    """Split the Lambda^2 n flat basis into Lambda^2 W, W^z and Lambda^2 z."""
    idx = ExteriorIndex.get(a.dim, 2)
    ww, wz, zz = [], [], []
    for k, (p, q) in enumerate(idx.tuples):
        nz = (p >= a.dim_w) + (q >= a.dim_w)
        (ww, wz, zz)[nz].append(k)
    return GradedMasks(tuple(ww), tuple(wz), tuple(zz))


def lambda3_z_mask(a: TwoStepAlgebra) -> tuple[int, ...]:
    idx = ExteriorIndex.get(a.dim, 3)
    return tuple(k for k, t in enumerate(idx.tuples) if min(t) >= a.dim_w)


def lambda3_w_mask(a: TwoStepAlgebra) -> tuple[int, ...]:
    idx = ExteriorIndex.get(a.dim, 3)
    return tuple(k for k, t in enumerate(idx.tuples) if max(t) < a.dim_w)


def ad_on_ext(a: TwoStepAlgebra, x: Element, omega: ExtVector) -> ExtVector:
    """Derivation action ``[x, b_p ^ b_q] = [x, b_p] ^ b_q + b_p ^ [x, b_q]``."""
    if x.algebra is not a:
        raise ValueError("element belongs to another algebra")
    if omega.grade != 2 or omega.dim != a.dim:
        raise ValueError("ad_on_ext expects a grade-2 vector of this algebra")
    idx = ExteriorIndex.get(a.dim, 2)
    out = [ZERO] * idx.size
    xw = [(r, c) for r, c in enumerate(x.w_part) if c]
    for (p, q), w in omega.terms().items():
        for r, xr in xw:
            for k, c in a.basis_bracket(r, p).items():
                if k != q:
                    pos, sign = idx.locate((k, q))
                    out[pos] += sign * xr * c * w
            for k, c in a.basis_bracket(r, q).items():
                if k != p:
                    pos, sign = idx.locate((p, k))
                    out[pos] += sign * xr * c * w
    return ExtVector(a.dim, 2, tuple(out))


def basis_bivector(a: TwoStepAlgebra, p: int, q: int, coeff=1) -> ExtVector:
    return ExtVector.from_terms(a.dim, 2, {(p, q): coeff})
