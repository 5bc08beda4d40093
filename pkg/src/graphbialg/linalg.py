"""Exact rational matrices: row reduction, rank, nullspace and linear solves.

Scalars are :class:`fractions.Fraction` throughout.  Matrices are dense and
small (a few hundred columns at most), so the elimination is plain Python with
a fast path that skips zero entries.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Fraction",
    "Mat",
    "SolutionSpace",
    "as_fraction",
    "format_rational",
    "parse_rational",
    "rref",
    "rank",
    "nullspace",
    "solve",
]

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")
ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; only the numerator may carry a sign."""
    m = _RATIONAL_RE.match(text.strip()) if isinstance(text, str) else None
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


class Mat:
    """Dense ``rows x cols`` matrix of Fractions, treated as immutable."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Iterable | None = None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            self._data = [[ZERO] * cols for _ in range(rows)]
            return
        flat = [as_fraction(x) for x in entries]
        if len(flat) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(flat)}")
        self._data = [flat[r * cols:(r + 1) * cols] for r in range(rows)]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Mat":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        m = cls(len(rows), cols)
        m._data = [[as_fraction(x) for x in r] for r in rows]
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        m = cls(n, n)
        for i in range(n):
            m._data[i][i] = ONE
        return m

    @classmethod
    def stack(cls, mats: Sequence["Mat"], cols: int | None = None) -> "Mat":
        """Vertical concatenation."""
        if cols is None:
            cols = mats[0].cols if mats else 0
        out = cls(0, cols)
        for m in mats:
            if m.cols != cols:
                raise ValueError("column mismatch in stack")
            out._data.extend(list(r) for r in m._data)
        out.rows = len(out._data)
        return out

    def __getitem__(self, idx) -> Fraction:
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return tuple(self._data[i])

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def to_rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    @property
    def entries(self) -> tuple:
        return tuple(x for r in self._data for x in r)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def with_entry(self, i: int, j: int, value) -> "Mat":
        m = self.copy()
        m._data[i][j] = as_fraction(value)
        return m

    def copy(self) -> "Mat":
        m = Mat(self.rows, self.cols)
        m._data = [list(r) for r in self._data]
        return m

    def transpose(self) -> "Mat":
        m = Mat(self.cols, self.rows)
        m._data = [list(c) for c in zip(*self._data)] if self.rows else [[] for _ in range(self.cols)]
        return m

    T = property(transpose)

    def is_zero(self) -> bool:
        return all(not x for r in self._data for x in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        m = Mat(self.rows, self.cols)
        m._data = [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)]
        return m

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        m = Mat(self.rows, self.cols)
        m._data = [[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)]
        return m

    def __neg__(self) -> "Mat":
        m = Mat(self.rows, self.cols)
        m._data = [[-a for a in r] for r in self._data]
        return m

    def __mul__(self, scalar) -> "Mat":
        s = as_fraction(scalar)
        m = Mat(self.rows, self.cols)
        m._data = [[s * a for a in r] for r in self._data]
        return m

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.transpose()._data
            m = Mat(self.rows, other.cols)
            m._data = [
                [sum((a * b for a, b in zip(r, c) if a and b), ZERO) for c in cols]
                for r in self._data
            ]
            return m
        vec = [as_fraction(x) for x in other]
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        nz = [(k, x) for k, x in enumerate(vec) if x]
        return tuple(sum((r[k] * x for k, x in nz if r[k]), ZERO) for r in self._data)

    def _check_same_shape(self, other: "Mat") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self._data)
        return f"Mat({self.rows}x{self.cols}: [{body}])"


@dataclass
class SolutionSpace:
    """A basis of a linear subspace of ``ambient_dim``-dimensional coordinates.

    ``labels`` optionally names each coordinate (e.g. the unknown ``(i, j)``).
    """

    ambient_dim: int
    basis: list[tuple[Fraction, ...]] = field(default_factory=list)
    labels: list | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinate_vanishes(self, k: int) -> bool:
        """True when coordinate ``k`` is zero on the whole space."""
        return all(not v[k] for v in self.basis)

    def combination(self, coeffs: Sequence) -> tuple[Fraction, ...]:
        if len(coeffs) != self.dim:
            raise ValueError("need one coefficient per basis vector")
        out = [ZERO] * self.ambient_dim
        for c, v in zip(coeffs, self.basis):
            c = as_fraction(c)
            if c:
                for k, x in enumerate(v):
                    if x:
                        out[k] += c * x
        return tuple(out)


def _reduce_rows(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """In-place Gauss-Jordan elimination; returns pivot columns."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow[:] = [x * inv if x else x for x in prow]
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and the (increasing) pivot columns."""
    rows = m.to_rows()
    pivots = _reduce_rows(rows, m.cols)
    out = Mat(m.rows, m.cols)
    out._data = rows
    return out, pivots


def rank(m: Mat) -> int:
    rows = [r for r in m.to_rows() if any(r)]
    return len(_reduce_rows(rows, m.cols))


def nullspace(m: Mat, labels: list | None = None) -> SolutionSpace:
    """Basis of ``{x : m x = 0}``.

    Free columns are set to 1 one at a time in increasing order; pivot
    coordinates are read off the reduced rows, so the basis is deterministic.
    """
    rows = [r for r in m.to_rows() if any(r)]
    pivots = _reduce_rows(rows, m.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            if rows[r][f]:
                v[p] = -rows[r][f]
        basis.append(tuple(v))
    space = SolutionSpace(m.cols, basis, labels)
    for v in basis:
        if any(m @ v):
            raise ArithmeticError("nullspace vector failed verification")
    return space


def solve(m: Mat, rhs: Sequence) -> tuple[Fraction, ...] | None:
    """One solution of ``m x = rhs`` (free variables zero), or None if inconsistent."""
    b = [as_fraction(x) for x in rhs]
    if len(b) != m.rows:
        raise ValueError("right-hand side length mismatch")
    rows = [list(r) + [x] for r, x in zip(m.to_rows(), b)]
    rows = [r for r in rows if any(r)]
    pivots = _reduce_rows(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = rows[r][m.cols]
    return tuple(x)
