import itertools
import random
import warnings
from fractions import Fraction

import pytest

from fixtures import diagonal_instance, heisenberg_fixture, rational
from graphbialg.classify import (F3Family, F3_CASE_PARAMS, DiagonalFamily, classify_diagonal,
                                 commuting_d_check, diagonal_build, f3_build, f3_closed_form,
                                 f3_cocycle_locus, f3_residual_values, f3_residuals,
                                 forced_zero_lambdas, lambda_system, lambda_system_matrix,
                                 omega_constraints, parameter_table, parity_certificate,
                                 path_parity_zero)
from graphbialg.cobracket import (Cobracket, HypothesisWarning, check_cocycle, check_cojacobi,
                                  is_bialgebra)
from graphbialg.exterior import ExtVector, wedge
from graphbialg.graph import (Graph, complete_graph, cycle_graph, example_graph_four,
                              graphs_without_isolated_vertices, path_graph, single_edge)
from graphbialg.linalg import Mat

K3 = complete_graph(3)


# -- lambda system ----------------------------------------------------------

def test_lambda_system_k3_sign_pattern():
    space = lambda_system(K3)
    assert space.dim == 3
    m = K3.edge_count
    for vec in space.basis:
        per_edge = [[vec[v * m + k] for v in range(3)] for k in range(m)]
        # edge order a1_2, a1_3, a2_3; cyclic labels alpha = a1_2, beta = a2_3, gamma = -a1_3
        a, b, c = per_edge[0][0], per_edge[2][0], per_edge[1][0]
        assert per_edge[0] == [a, a, -a]
        assert per_edge[2] == [b, -b, -b]
        assert per_edge[1] == [c, -c, c]


@pytest.mark.parametrize("g, dim", [(complete_graph(4), 0), (complete_graph(5), 0),
                                    (single_edge(), 2), (cycle_graph(4), 4), (cycle_graph(5), 5),
                                    (path_graph(3), 4)])
def test_lambda_system_dims(g, dim):
    assert lambda_system(g).dim == dim


def _bipartite_components(g, skip):
    """Count components of G minus edge ``skip`` that are bipartite, isolated vertices included."""
    import networkx as nx
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(e for k, e in enumerate(g.edges) if k != skip)
    return sum(nx.is_bipartite(h.subgraph(c)) for c in nx.connected_components(h))


def test_lambda_dim_counts_bipartite_components():
    for g in graphs_without_isolated_vertices(6):
        expected = sum(_bipartite_components(g, k) for k in range(g.edge_count))
        assert lambda_system(g).dim == expected, g


def test_path_parity_examples():
    k4 = complete_graph(4)
    assert all(path_parity_zero(k4, v, k) for v in range(4) for k in range(6))
    assert not path_parity_zero(K3, 0, 0)
    assert not path_parity_zero(single_edge(), 0, 0)


def _check_certificate(g, v, k, cert):
    edges = {e for j, e in enumerate(g.edges) if j != k}
    has = lambda x, y: (min(x, y), max(x, y)) in edges
    path, cycle = cert["path"], cert["cycle"]
    assert path[0] == v and path[-1] == cycle[0]
    assert all(has(x, y) for x, y in zip(path, path[1:]))
    assert len(cycle) % 2 == 1 and len(set(cycle)) == len(cycle)
    assert all(has(x, y) for x, y in zip(cycle, cycle[1:] + cycle[:1]))


def test_parity_certificate_matches_linear_system():
    for g in graphs_without_isolated_vertices(6):
        space = lambda_system(g)
        forced = set(forced_zero_lambdas(g, space))
        for v, k in space.labels:
            cert = parity_certificate(g, v, k)
            assert (cert is not None) == ((v, k) in forced), (g, v, k)
            if cert is not None:
                _check_certificate(g, v, k, cert)


def test_solutions_satisfy_equations():
    for g in (K3, cycle_graph(5), example_graph_four()):
        m = lambda_system_matrix(g)
        for vec in lambda_system(g).basis:
            assert all(x == 0 for x in m @ vec)


# -- omega constraints and the equivalence ---------------------------------

def _omega(a, pairs):
    w = ExtVector.zero(a.dim, 2)
    for (p, q), c in pairs:
        w = w + c * wedge(a.basis(a.index_of(p)), a.basis(a.index_of(q)))
    return w


def test_omega_examples():
    fam = DiagonalFamily.from_vector(K3, [1, 0, 0] + [0] * 6)   # A_1 = a1_2
    a = fam.algebra
    assert omega_constraints(fam).ok
    ok = DiagonalFamily(K3, fam.lam, [_omega(a, [(("a1_2", "a2_3"), 1)])] + fam.omega[1:])
    rep = omega_constraints(ok)
    assert rep.ok and rep.cojacobi_agrees
    bad = DiagonalFamily(K3, fam.lam, [_omega(a, [(("a1_3", "a2_3"), 1)])] + fam.omega[1:])
    rep = omega_constraints(bad)
    assert not rep.ok and rep.cojacobi_agrees
    assert list(rep.residuals) == ["v1"]


def test_diagonal_family_validation():
    a_fam = DiagonalFamily.from_vector(K3, [0] * 9)
    with pytest.raises(ValueError):
        DiagonalFamily(K3, Mat(2, 3), a_fam.omega)
    with pytest.raises(ValueError):
        DiagonalFamily(K3, a_fam.lam, [wedge(a_fam.algebra.basis(0), a_fam.algebra.basis(1))] * 3)


def _predicted(g, fam, space_matrix):
    in_null = all(x == 0 for x in space_matrix @ fam.lam.entries)
    return in_null and omega_constraints(fam).ok


def test_equivalence_grid_k3():
    """lambda on the {-1,0,1} grid of the solution space, and every coordinate
    perturbation of it, times omega_i ranging over 0 and the Lambda^2 z basis."""
    a = DiagonalFamily.from_vector(K3, [0] * 9).algebra
    m = lambda_system_matrix(K3)
    space = lambda_system(K3)
    omegas = [ExtVector.zero(a.dim, 2)] + [_omega(a, [(pq, 1)]) for pq in
                                           (("a1_2", "a1_3"), ("a1_2", "a2_3"), ("a1_3", "a2_3"))]
    count = {True: 0, False: 0}
    for coeffs in itertools.product((-1, 0, 1), repeat=3):
        lam = space.combination(coeffs)
        for om in itertools.product(omegas, repeat=3):
            fam = DiagonalFamily(K3, Mat(3, 3, lam), list(om))
            verdict = is_bialgebra(diagonal_build(fam))
            assert verdict == _predicted(K3, fam, m)
            count[verdict] += 1
        for k in range(9):
            bumped = list(lam)
            bumped[k] += 1
            fam = DiagonalFamily(K3, Mat(3, 3, bumped), [omegas[0]] * 3)
            assert is_bialgebra(diagonal_build(fam)) == _predicted(K3, fam, m)
    assert count[True] > 0 and count[False] > 0


def test_equivalence_grid_c4():
    g = cycle_graph(4)
    a = DiagonalFamily.from_vector(g, [0] * 16).algebra
    m = lambda_system_matrix(g)
    space = lambda_system(g)
    z = ExtVector.zero(a.dim, 2)
    pairs = list(itertools.combinations(a.z_labels, 2))
    for coeffs in itertools.product((-1, 0, 1), repeat=space.dim):
        lam = space.combination(coeffs)
        for pq in [None] + pairs:
            om = [z] * 4 if pq is None else [_omega(a, [(pq, 1)])] + [z] * 3
            fam = DiagonalFamily(g, Mat(4, 4, lam), om)
            assert is_bialgebra(diagonal_build(fam)) == _predicted(g, fam, m)
    for k in range(16):
        bumped = [0] * 16
        bumped[k] = 1
        fam = DiagonalFamily(g, Mat(4, 4, bumped), [z] * 4)
        assert is_bialgebra(diagonal_build(fam)) == _predicted(g, fam, m)


@pytest.mark.parametrize("g", [complete_graph(4), cycle_graph(5)], ids=["K4", "C5"])
def test_equivalence_random(g):
    rng = random.Random(31)
    m = lambda_system_matrix(g)
    for trial in range(25):
        fam = diagonal_instance(g, rng, valid_omega=trial % 2 == 0)
        if trial % 5 == 4:
            lam = list(fam.lam.entries)
            lam[rng.randrange(len(lam))] += 1
            fam = DiagonalFamily(g, Mat(*fam.lam.shape, lam), fam.omega)
        assert is_bialgebra(diagonal_build(fam)) == _predicted(g, fam, m)


# -- parameter table ----------------------------------------------------------

def test_parameter_table():
    rows = parameter_table(range(3, 7))
    assert [r.as_tuple() for r in rows] == [(9, 9, 9, 9), (16, 24, 24, 60),
                                           (25, 50, 50, 225), (36, 90, 90, 630)]
    assert all(r.closed_form_ok for r in parameter_table(range(3, 12)))
    with pytest.raises(ValueError):
        parameter_table([2])
    with pytest.raises(ValueError):
        parameter_table([3], kinds=("path",))


def test_complete_graph_omega_count_matches_table():
    for n in (4, 5):
        rep = classify_diagonal(complete_graph(n))
        assert rep.lambda_dim == 0
        row = parameter_table([n])[0]
        assert rep.omega_free_parameters == row.complete_omega
        assert rep.omega_free_parameters_generic == row.complete_omega


# -- commuting D ------------------------------------------------------------

def test_commuting_examples():
    rng = random.Random(4)
    assert commuting_d_check(diagonal_build(diagonal_instance(K3, rng)))
    assert commuting_d_check(f3_build(F3Family("II", lam=1, a=2, b=3, c=1, mu=1, nu=2, rho=5)))
    a = DiagonalFamily.from_vector(K3, [0] * 9).algebra
    # D_{a1_2} = E_12, D_{a1_3} = E_21: e2 -> e1, e1 -> e2
    d = Cobracket.from_terms(a, {"v2": {("v1", "a1_2"): 1}, "v1": {("v2", "a1_3"): 1}})
    assert not commuting_d_check(d)
    assert not is_bialgebra(d)


def test_commuting_flags_non_nearly_coboundary():
    with pytest.warns(HypothesisWarning):
        commuting_d_check(heisenberg_fixture(1, Fraction(1, 2)))


def test_commuting_holds_for_nearly_coboundary_bialgebras():
    rng = random.Random(9)
    for g in (K3, cycle_graph(4), cycle_graph(5), example_graph_four()):
        for _ in range(4):
            d = diagonal_build(diagonal_instance(g, rng))
            assert is_bialgebra(d) and commuting_d_check(d)
    for case in ("II", "III"):
        point, _ = f3_cocycle_locus(case)
        d = f3_build(F3Family(case, **point))
        assert is_bialgebra(d) and commuting_d_check(d)


# -- classification report ----------------------------------------------------

def test_classification_report():
    rep = classify_diagonal(K3).to_json()
    assert rep["lambda_dim"] == 3 and rep["forced_zero_lambdas"] == []
    assert rep["omega_free_parameters"] == 9 and rep["caveats"] == []
    assert rep["parity_consistent"] is True
    assert list(rep) == ["graph", "lambda_dim", "lambda_basis", "forced_zero_lambdas",
                         "omega_free_parameters", "omega_free_parameters_generic",
                         "parity_consistent", "caveats"]
    rep = classify_diagonal(path_graph(3)).to_json()
    assert rep["caveats"] and "minimum degree" in rep["caveats"][0]
    rep = classify_diagonal(example_graph_four()).to_json()
    assert ["v1", "a3_4"] in rep["forced_zero_lambdas"]
    assert classify_diagonal(cycle_graph(4)).to_json()["caveats"] == []


# -- f_3 Jordan families --------------------------------------------------------

def random_f3(case, rng, omega=None):
    params = {name: rational(rng) for name in F3_CASE_PARAMS[case]}
    if case == "I":
        while params["lam"] == params["lam_prime"]:
            params["lam_prime"] = rational(rng)
    if omega is None:
        omega = tuple(tuple(rational(rng, -2, 2) for _ in range(3)) for _ in range(3))
    return F3Family(case, omega=omega, **params)


def test_case_one_requires_distinct_eigenvalues():
    with pytest.raises(ValueError):
        f3_build(F3Family("I", lam=1, lam_prime=1))
    with pytest.raises(ValueError):
        F3Family("IV")


@pytest.mark.parametrize("case", ["I", "II", "III"])
def test_build_matches_closed_form(case):
    rng = random.Random(hash(case) % 1000)
    for _ in range(20):
        fam = random_f3(case, rng)
        assert f3_build(fam) == f3_closed_form(fam)


def test_build_examples():
    # case I, lam = 0, lam_prime = 1, rest 0: the Jordan 1 still gives B = alpha
    om = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    d = f3_build(F3Family("I", lam_prime=1, omega=om))
    a = d.algebra
    e1, e2, e3 = (a.basis(k) for k in range(3))
    alpha, beta, gamma = a.basis(3), a.basis(5), -a.basis(4)
    assert d.columns[0] == wedge(alpha, beta)
    assert d.columns[1] == wedge(e1, alpha) + wedge(alpha, gamma)
    assert d.columns[2] == wedge(e3, alpha) + wedge(beta, gamma)
    # case II with only the Jordan 1's: B = alpha, C = 0
    d = f3_build(F3Family("II", omega=om))
    assert d.columns[0] == wedge(alpha, beta)
    assert d.columns[1] == wedge(e1, alpha) + wedge(alpha, gamma)
    assert d.columns[2] == wedge(e2, alpha) + wedge(beta, gamma)
    # case III: delta(e3) = e3 ^ A + e1 ^ C + omega_3
    fam = F3Family("III", lam=2, a=1, mu=3, c=5, rho=-1, omega=om)
    cen = fam.central()
    A = sum((x * y for x, y in zip(cen["A"], (alpha, beta, gamma))), a.zero())
    C = sum((x * y for x, y in zip(cen["C"], (alpha, beta, gamma))), a.zero())
    assert f3_build(fam).columns[2] == wedge(e3, A) + wedge(e1, C) + wedge(beta, gamma)


def test_residual_examples():
    zero = ((0, 0, 0),) * 3
    for case in ("I", "II", "III"):
        rng = random.Random(1)
        fam = random_f3(case, rng, omega=zero)
        r = f3_residuals(fam)
        assert r.ok and r.cojacobi_agrees
    # case I, A = alpha, omega_1 = beta ^ gamma
    fam = F3Family("I", lam=1, lam_prime=2, omega=((0, 0, 1), (0, 0, 0), (0, 0, 0)))
    r = f3_residuals(fam)
    assert r.values[0] != 0 and not r.ok
    assert not check_cojacobi(f3_build(fam)).ok
    # case III, A = gamma, C = 0, omega_3 = alpha ^ beta
    fam = F3Family("III", mu=1, omega=((0, 0, 0), (0, 0, 0), (1, 0, 0)))
    r = f3_residuals(fam)
    assert r.values == (0, 0, 1)


@pytest.mark.parametrize("case", ["I", "II", "III"])
def test_residuals_agree_with_cojacobi(case):
    rng = random.Random(40 + len(case))
    for trial in range(40):
        omega = ((0, 0, 0),) * 3 if trial % 4 == 0 else None
        fam = random_f3(case, rng, omega)
        r = f3_residuals(fam)
        assert r.cojacobi_agrees
        assert r.ok == check_cojacobi(f3_build(fam)).ok


def test_cocycle_locus():
    assert f3_cocycle_locus("I") is None
    point, directions = f3_cocycle_locus("II")
    assert point["rho"] == 1 and directions.dim == 1
    (vec,) = directions.basis
    move = dict(zip(directions.labels, vec))
    assert move["nu"] == move["c"] == -2 * move["lam"] != 0
    assert all(move[k] == 0 for k in ("a", "b", "mu", "rho"))
    point, directions = f3_cocycle_locus("III")
    assert point["rho"] == 1
    assert [dict(zip(directions.labels, v)) for v in directions.basis] == \
        [{"lam": 0, "a": 0, "b": 0, "c": 0, "mu": 0, "nu": 1, "rho": 0}]


@pytest.mark.parametrize("case", ["II", "III"])
def test_residuals_decide_on_cocycle_locus(case):
    rng = random.Random(77)
    point, directions = f3_cocycle_locus(case)
    for trial in range(20):
        t = [rational(rng) for _ in range(directions.dim)]
        params = {k: point[k] + v for k, v in zip(directions.labels, directions.combination(t))}
        omega = ((0, 0, 0),) * 3 if trial % 3 == 0 else \
            tuple(tuple(rational(rng, -1, 1, 1) for _ in range(3)) for _ in range(3))
        fam = F3Family(case, omega=omega, **params)
        assert check_cocycle(f3_build(fam)).ok
        assert f3_residuals(fam).ok == is_bialgebra(f3_build(fam))
