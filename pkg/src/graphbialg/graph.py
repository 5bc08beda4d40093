"""Simple graphs with ordered vertices.

Edges are stored 0-based as ``(i, j)`` with ``i < j`` and sorted
lexicographically; the text format and all labels are 1-based.  Each edge is
oriented from the smaller vertex to the bigger one, and the edge order fixes
the basis order of the center of the associated algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class GraphParseError(ValueError):
    """Raised for malformed graph files; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class IsolatedVertexError(GraphParseError):
    pass


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a graph needs at least one vertex")
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"loop at vertex {i + 1}")
            if not (0 <= i < j < self.vertex_count):
                raise ValueError(f"edge {(i + 1, j + 1)} not canonical or out of range")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge {(i + 1, j + 1)}")
            seen.add((i, j))
        if list(self.edges) != sorted(self.edges):
            raise ValueError("edges must be sorted")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]],
                   one_based: bool = True) -> "Graph":
        """Build from unordered pairs, orienting and sorting them."""
        off = 1 if one_based else 0
        canon = []
        for i, j in edges:
            i, j = i - off, j - off
            canon.append((min(i, j), max(i, j)) if i != j else (i, j))
        return cls(vertex_count, tuple(sorted(canon)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_index(self, i: int, j: int) -> int | None:
        """Position of the edge joining 0-based vertices i and j, if any."""
        key = (min(i, j), max(i, j))
        try:
            return self.edges.index(key)
        except ValueError:
            return None

    def has_isolated_vertex(self) -> bool:
        return any(d == 0 for d in self.degrees())

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def neighbors(self, v: int) -> list[int]:
        return sorted({j if i == v else i for i, j in self.edges if v in (i, j)})

    def vertex_label(self, v: int) -> str:
        return f"v{v + 1}"

    def edge_label(self, k: int) -> str:
        i, j = self.edges[k]
        return f"a{i + 1}_{j + 1}"

    def to_json(self) -> dict:
        return {"vertex_count": self.vertex_count,
                "edges": [[i + 1, j + 1] for i, j in self.edges]}

    @classmethod
    def from_json(cls, obj: dict) -> "Graph":
        return cls.from_edges(int(obj["vertex_count"]), [tuple(e) for e in obj["edges"]])

    def __str__(self) -> str:
        return serialize_graph(self).replace("\n", " ").strip()


def parse_graph(text: str) -> Graph:
    """Parse the text format: vertex count, then one ``i j`` pair per line.

    Lines starting with ``#`` and blank lines are ignored.  Isolated vertices
    are rejected because the W / center split needs every vertex on an edge.
    """
    n = None
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit() or int(parts[0]) < 1:
                raise GraphParseError(f"expected a positive vertex count, got {line!r}", lineno)
            n = int(parts[0])
            continue
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise GraphParseError(f"expected 'i j', got {line!r}", lineno)
        i, j = int(parts[0]), int(parts[1])
        for v in (i, j):
            if not 1 <= v <= n:
                raise GraphParseError(f"vertex index {v} out of range 1..{n}", lineno)
        if i == j:
            raise GraphParseError(f"loop edge at vertex {i}", lineno)
        key = (min(i, j) - 1, max(i, j) - 1)
        if key in seen:
            raise GraphParseError(
                f"duplicate edge {{{i},{j}}} (first given on line {seen[key]})", lineno)
        seen[key] = lineno
    if n is None:
        raise GraphParseError("empty graph file")
    g = Graph(n, tuple(sorted(seen)))
    isolated = [v + 1 for v, d in enumerate(g.degrees()) if d == 0]
    if isolated:
        raise IsolatedVertexError(f"isolated vertex {isolated[0]}")
    return g


def serialize_graph(g: Graph) -> str:
    lines = [str(g.vertex_count)] + [f"{i + 1} {j + 1}" for i, j in g.edges]
    return "\n".join(lines) + "\n"


def degree(g: Graph, v: int) -> int:
    """Degree of 0-based vertex ``v``."""
    if not 0 <= v < g.vertex_count:
        raise IndexError(f"vertex {v} out of range")
    return sum(1 for e in g.edges if v in e)


def min_degree_at_least_two(g: Graph) -> bool:
    return all(d >= 2 for d in g.degrees())


def predicted_S_zero_pattern(g: Graph) -> set[tuple[int, int]]:
    """Pairs ``(i, j)``, i < j (0-based), whose TST entry is forced to vanish.

    A pair qualifies if an edge joins it, or if some edge at ``i`` and some
    edge at ``j`` have disjoint endpoint sets.
    """
    edges = [set(e) for e in g.edges]
    out = set()
    for i, j in combinations(range(g.vertex_count), 2):
        if (i, j) in g.edges:
            out.add((i, j))
            continue
        at_i = [e for e in edges if i in e]
        at_j = [e for e in edges if j in e]
        if any(not (a & b) for a in at_i for b in at_j):
            out.add((i, j))
    return out


# -- standard families ------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(k, (k + 1) % n) for k in range(n)], one_based=False)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(k, k + 1) for k in range(n - 1)], one_based=False)


def single_edge() -> Graph:
    return Graph(2, ((0, 1),))


def example_graph_four() -> Graph:
    """Four-vertex example: a triangle on 1, 2, 3 plus the pendant edge 3-4."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)])


def graphs_without_isolated_vertices(max_vertices: int) -> Iterator[Graph]:
    """One representative per isomorphism class, 2 <= vertices <= max_vertices.

    Uses the networkx graph atlas (complete up to 7 vertices).  Vertices are
    relabelled by decreasing degree so the representative is stable.
    """
    if max_vertices > 7:
        raise ValueError("the graph atlas only covers up to 7 vertices")
    import networkx as nx

    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n < 2 or n > max_vertices:
            continue
        if min(d for _, d in h.degree()) == 0:
            continue
        order = sorted(h.nodes(), key=lambda v: (-h.degree(v), v))
        relabel = {v: k for k, v in enumerate(order)}
        yield Graph.from_edges(n, [(relabel[a], relabel[b]) for a, b in h.edges()],
                               one_based=False)


def labelled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on n vertices without isolated vertices (brute force)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1, 1 << len(pairs)):
        edges = tuple(p for k, p in enumerate(pairs) if mask >> k & 1)
        g = Graph(n, edges)
        if not g.has_isolated_vertex():
            yield g
