"""2-step nilpotent Lie algebras n = W + z given by bracket tensors.

The bracket of two W vectors is ``[v, w] = sum_i T_i(v)(w) z_i`` where each
``T_i`` is stored as the matrix of a map W -> W*: column ``k`` is the image of
the k-th basis vector, so ``T_i(v)(w) = w^t T_i v``.  Brackets involving the
center vanish.  Basis order is W first, then z; indices are 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .graph import Graph
from .linalg import Mat, as_fraction

ZERO = Fraction(0)


class TwoStepAlgebra:
    def __init__(self, t_tensors: Sequence[Mat], dim_w: int | None = None,
                 w_labels: Sequence[str] | None = None,
                 z_labels: Sequence[str] | None = None,
                 graph: Graph | None = None):
        t_tensors = tuple(t if isinstance(t, Mat) else Mat.from_rows(t) for t in t_tensors)
        if dim_w is None:
            if not t_tensors:
                raise ValueError("dim_w is required when there are no tensors")
            dim_w = t_tensors[0].rows
        for t in t_tensors:
            if t.shape != (dim_w, dim_w):
                raise ValueError(f"tensor of shape {t.shape}, expected {(dim_w, dim_w)}")
        self.dim_w = dim_w
        self.dim_z = len(t_tensors)
        self.t_tensors = t_tensors
        self.w_labels = tuple(w_labels) if w_labels else tuple(f"v{k + 1}" for k in range(dim_w))
        self.z_labels = (tuple(z_labels) if z_labels
                         else tuple(f"z{k + 1}" for k in range(self.dim_z)))
        if len(self.w_labels) != dim_w or len(self.z_labels) != self.dim_z:
            raise ValueError("label count does not match dimensions")
        self.graph = graph
        # _struct[p][q]: nonzero (central index, coefficient) pairs of [b_p, b_q]
        self._struct = [[tuple((i, t[q, p]) for i, t in enumerate(t_tensors) if t[q, p])
                         for q in range(dim_w)] for p in range(dim_w)]

    @property
    def dim(self) -> int:
        return self.dim_w + self.dim_z

    @property
    def labels(self) -> tuple[str, ...]:
        return self.w_labels + self.z_labels

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def is_central_index(self, k: int) -> bool:
        return k >= self.dim_w

    def basis_bracket(self, p: int, q: int) -> dict[int, Fraction]:
        """``[b_p, b_q]`` as {full basis index: coefficient}."""
        if p >= self.dim_w or q >= self.dim_w:
            return {}
        return {self.dim_w + i: c for i, c in self._struct[p][q]}

    def basis(self, k: int) -> "Element":
        v = [ZERO] * self.dim
        v[k] = Fraction(1)
        return self.element(v)

    def element(self, vector: Sequence) -> "Element":
        vec = [as_fraction(x) for x in vector]
        if len(vec) != self.dim:
            raise ValueError(f"vector of length {len(vec)}, expected {self.dim}")
        return Element(self, tuple(vec[:self.dim_w]), tuple(vec[self.dim_w:]))

    def zero(self) -> "Element":
        return self.element([0] * self.dim)

    def same_structure(self, other: "TwoStepAlgebra") -> bool:
        return (self.dim_w == other.dim_w and self.t_tensors == other.t_tensors)

    def to_json(self) -> dict:
        from .linalg import format_rational
        if self.graph is not None:
            return {"graph": self.graph.to_json()}
        return {"tensors": {
            "dim_w": self.dim_w,
            "T": [[[format_rational(x) for x in t.row(r)] for r in range(t.rows)]
                  for t in self.t_tensors],
        }}

    @classmethod
    def from_json(cls, obj: dict) -> "TwoStepAlgebra":
        if "graph" in obj:
            return from_graph(Graph.from_json(obj["graph"]))
        if "tensors" in obj:
            payload = obj["tensors"]
            tensors = [Mat.from_rows(t) for t in payload["T"]]
            return cls(tensors, dim_w=int(payload["dim_w"]))
        if "heisenberg" in obj:
            return heisenberg(int(obj["heisenberg"]))
        raise ValueError("algebra must be given by 'graph', 'tensors' or 'heisenberg'")

    def __repr__(self) -> str:
        return f"TwoStepAlgebra(dim_w={self.dim_w}, dim_z={self.dim_z})"


@dataclass(frozen=True)
class Element:
    algebra: TwoStepAlgebra
    w_part: tuple[Fraction, ...]
    z_part: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.w_part) != self.algebra.dim_w or len(self.z_part) != self.algebra.dim_z:
            raise ValueError("element dimensions do not match the algebra")

    @property
    def vector(self) -> tuple[Fraction, ...]:
        return self.w_part + self.z_part

    def _check(self, other: "Element") -> None:
        if other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return self.algebra.element([a + b for a, b in zip(self.vector, other.vector)])

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return self.algebra.element([a - b for a, b in zip(self.vector, other.vector)])

    def __neg__(self) -> "Element":
        return self.algebra.element([-a for a in self.vector])

    def __mul__(self, scalar) -> "Element":
        s = as_fraction(scalar)
        return self.algebra.element([s * a for a in self.vector])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.vector)

    def __repr__(self) -> str:
        from .linalg import format_rational
        terms = [f"{format_rational(c)}*{lab}" for c, lab in zip(self.vector, self.algebra.labels) if c]
        return "Element(" + (" + ".join(terms) or "0") + ")"


def from_graph(g: Graph) -> TwoStepAlgebra:
    """Graph algebra: ``[e_i, e_j] = alpha`` for the edge alpha = (i, j), i < j."""
    if g.has_isolated_vertex():
        raise ValueError("graph has an isolated vertex")
    n = g.vertex_count
    tensors = []
    for i, j in g.edges:
        t = Mat(n, n)
        t._data[j][i] = Fraction(1)
        t._data[i][j] = Fraction(-1)
        tensors.append(t)
    return TwoStepAlgebra(tensors, dim_w=n,
                          w_labels=[g.vertex_label(v) for v in range(n)],
                          z_labels=[g.edge_label(k) for k in range(g.edge_count)],
                          graph=g)


def heisenberg(m: int) -> TwoStepAlgebra:
    """h_{2m+1}: W has basis x_1, y_1, ..., x_m, y_m with ``[x_k, y_k] = z``."""
    if m < 1:
        raise ValueError("m must be positive")
    t = Mat(2 * m, 2 * m)
    for k in range(m):
        x, y = 2 * k, 2 * k + 1
        t._data[y][x] = Fraction(1)
        t._data[x][y] = Fraction(-1)
    return TwoStepAlgebra([t], dim_w=2 * m)


def bracket(x: Element, y: Element) -> Element:
    a = x.algebra
    if y.algebra is not a:
        raise ValueError("elements belong to different algebras")
    z = [ZERO] * a.dim_z
    for p, xp in enumerate(x.w_part):
        if not xp:
            continue
        for q, yq in enumerate(y.w_part):
            if not yq:
                continue
            for i, c in a._struct[p][q]:
                z[i] += xp * yq * c
    return Element(a, (ZERO,) * a.dim_w, tuple(z))


@dataclass
class AlgebraReport:
    antisymmetric_tensors: bool
    antisymmetric_bracket: bool
    two_step: bool
    jacobi: bool
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"antisymmetric_tensors": self.antisymmetric_tensors,
                "antisymmetric_bracket": self.antisymmetric_bracket,
                "two_step": self.two_step, "jacobi": self.jacobi,
                "ok": self.ok, "failures": list(self.failures)}


def _bracket_vec(a: TwoStepAlgebra, p: int, vec: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for q, c in vec.items():
        for k, s in a.basis_bracket(p, q).items():
            out[k] = out.get(k, ZERO) + c * s
    return {k: v for k, v in out.items() if v}


def check_algebra(a: TwoStepAlgebra) -> AlgebraReport:
    """Antisymmetry of every T_i, the 2-step property and Jacobi on basis triples."""
    failures = []
    anti_t = True
    for i, t in enumerate(a.t_tensors):
        if not (t + t.transpose()).is_zero():
            anti_t = False
            failures.append(f"T_{i + 1} is not antisymmetric")
    anti_b = True
    for p in range(a.dim):
        for q in range(p, a.dim):
            pq, qp = a.basis_bracket(p, q), a.basis_bracket(q, p)
            keys = set(pq) | set(qp)
            if any(pq.get(k, ZERO) + qp.get(k, ZERO) for k in keys):
                anti_b = False
                failures.append(f"[{a.labels[p]},{a.labels[q]}] != -[{a.labels[q]},{a.labels[p]}]")
    two_step = True
    jacobi = True
    for p, q, r in product(range(a.dim), repeat=3):
        inner = a.basis_bracket(q, r)
        if _bracket_vec(a, p, inner):
            two_step = False
            failures.append(f"[{a.labels[p]},[{a.labels[q]},{a.labels[r]}]] != 0")
        if p <= q <= r:
            total: dict[int, Fraction] = {}
            for s, t, u in ((p, q, r), (q, r, p), (r, p, q)):
                for k, c in _bracket_vec(a, s, a.basis_bracket(t, u)).items():
                    total[k] = total.get(k, ZERO) + c
            if any(total.values()):
                jacobi = False
                failures.append(f"Jacobi fails on ({a.labels[p]},{a.labels[q]},{a.labels[r]})")
    return AlgebraReport(anti_t, anti_b, two_step, jacobi, failures)


def ad_matrix_on_lambda2(a: TwoStepAlgebra, x: int) -> Mat:
    """Matrix of ``ad_{b_x}`` on the Lambda^2 n basis (lexicographic pairs).

    Central generators give the zero matrix.
    """
    from .exterior import ExteriorIndex

    if not 0 <= x < a.dim:
        raise IndexError(f"basis index {x} out of range")
    idx = ExteriorIndex.get(a.dim, 2)
    m = Mat(idx.size, idx.size)
    if x >= a.dim_w:
        return m
    data = m._data
    for col, (p, q) in enumerate(idx.tuples):
        # [x, b_p] ^ b_q + b_p ^ [x, b_q]
        for k, c in a.basis_bracket(x, p).items():
            if k != q:
                pos, sign = idx.locate((k, q))
                data[pos][col] += sign * c
        for k, c in a.basis_bracket(x, q).items():
            if k != p:
                pos, sign = idx.locate((p, k))
                data[pos][col] += sign * c
    return m
