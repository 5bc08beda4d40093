import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy as sp

import oracles
from graphbialg.algebra import from_graph, heisenberg
from graphbialg.graph import (Graph, complete_graph, cycle_graph, example_graph_four,
                              graphs_without_isolated_vertices, path_graph,
                              predicted_S_zero_pattern, single_edge)
from graphbialg.linalg import Mat
from graphbialg.tst import (antisymmetric_from_vector, assemble_tst, crosscheck_zero_pattern,
                            is_tst_type, solution_matrices, solve_tst, tst_report, tst_residual)


@pytest.mark.parametrize("g, unknowns, rows", [
    (single_edge(), 1, 1), (path_graph(3), 3, 9), (complete_graph(3), 3, 18),
])
def test_system_shape(g, unknowns, rows):
    system = assemble_tst(from_graph(g))
    assert system.matrix.shape == (rows, unknowns)
    assert len(system.unknowns) == unknowns


def test_path_counterexample():
    a = from_graph(path_graph(3))
    system = assemble_tst(a)
    space = solve_tst(system)
    assert space.dim == 1
    (s,) = solution_matrices(system, space)
    assert s == Mat.from_rows([[0, 0, 1], [0, 0, 0], [-1, 0, 0]]) * s[0, 2]


@pytest.mark.parametrize("a, expected", [
    (from_graph(single_edge()), True), (from_graph(complete_graph(3)), True),
    (from_graph(complete_graph(4)), True), (heisenberg(2), True),
    (from_graph(path_graph(3)), False),
])
def test_is_tst_type(a, expected):
    assert is_tst_type(a) == expected


def test_zero_pattern_examples():
    rep = crosscheck_zero_pattern(path_graph(3))
    assert rep.zero_pattern_violations == [] and rep.solution_dim == 1
    assert crosscheck_zero_pattern(complete_graph(3)).solution_dim == 0
    assert crosscheck_zero_pattern(example_graph_four()).zero_pattern_violations == []


def _oracle_dim(g):
    tensors = oracles.graph_tensors(g.vertex_count, [(i + 1, j + 1) for i, j in g.edges])
    return len(oracles.tst_solutions(tensors))


@pytest.mark.parametrize("g", [single_edge(), path_graph(3), path_graph(4), complete_graph(3),
                               cycle_graph(4), example_graph_four(),
                               Graph(4, ((0, 1), (2, 3))), Graph(5, ((0, 1), (0, 2), (0, 3), (0, 4)))],
                         ids=str)
def test_dimension_matches_sympy_oracle(g):
    assert solve_tst(assemble_tst(from_graph(g))).dim == _oracle_dim(g)


def test_solutions_satisfy_every_equation_and_diagonal():
    for g in graphs_without_isolated_vertices(5):
        a = from_graph(g)
        system = assemble_tst(a)
        for s in solution_matrices(system, solve_tst(system)):
            for i, t in enumerate(a.t_tensors):
                assert (t @ s @ t).is_zero()
                for u in a.t_tensors[i:]:
                    assert (t @ s @ u + u @ s @ t).is_zero()


def test_residual_flags_bad_matrix():
    a = from_graph(complete_graph(3))
    s = antisymmetric_from_vector(3, assemble_tst(a).unknowns, [1, 0, 0])
    assert tst_residual(a, s)


def test_entry_identity_symbolic():
    rng = random.Random(7)
    graphs = list(graphs_without_isolated_vertices(5))
    for g in rng.sample(graphs, 10):
        a = from_graph(g)
        n = g.vertex_count
        vec = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n * (n - 1) // 2)]
        s = antisymmetric_from_vector(n, list(combinations(range(n), 2)), vec)
        for (i, j), t in zip(g.edges, a.t_tensors):
            assert (t @ s @ t)[i, j] == s[j, i]


def test_report_json():
    rep = tst_report(from_graph(path_graph(3))).to_json()
    assert rep["tst_type"] is False and rep["solution_dim"] == 1
    assert rep["basis"] == [[[["v1", "v3"], "1"]]]
    assert rep["zero_pattern_violations"] == []
