"""Graph algebras and their ad-invariant bivectors.

Every vertex is a generator and every edge i-j (i < j) is the central element
[e_i, e_j].  A bivector killed by every ad_x is an invariant; the invariants
equal Lambda^2 z exactly when every vertex has degree at least two.

    python demos/01_graph_algebras.py
"""
from graphbialg import (bracket, check_algebra, complete_graph, from_graph,
                        graphs_without_isolated_vertices, invariants_equal_lambda2z,
                        min_degree_at_least_two, path_graph, single_edge)
from graphbialg.invariants import invariants_report


def show(name, g):
    a = from_graph(g)
    rep = invariants_report(a)
    print(f"{name}: dim W = {a.dim_w}, dim z = {a.dim_z}, degrees {g.degrees()}")
    print(f"  invariants: {rep.dim_invariants} (Lambda^2 z has {rep.dim_lambda2z}), "
          f"equal = {rep.equal}")
    for v in rep.basis:
        print("   ", v.pretty(a.labels))


k3 = from_graph(complete_graph(3))
e1, e2, e3 = (k3.basis(k) for k in range(3))
print("[e1 + e2, e3] =", bracket(e1 + e2, e3))
print("structure check on K3:", "pass" if check_algebra(k3).ok else "FAIL")
print()

show("h3 (single edge)", single_edge())
show("path 1-2-3", path_graph(3))
show("K3", complete_graph(3))
print()

# the degree criterion over every graph on at most five vertices
agree = total = 0
for g in graphs_without_isolated_vertices(5):
    total += 1
    agree += invariants_equal_lambda2z(from_graph(g)) == min_degree_at_least_two(g)
print(f"degree criterion matches the computed invariants on {agree}/{total} graphs")
