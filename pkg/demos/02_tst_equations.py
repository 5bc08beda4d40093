"""The TST equations T_i S T_k + T_k S T_i = 0.

An algebra is of TST type when the only antisymmetric solution is S = 0.  A
vertex of degree one can leave room for a solution: on the path 1-2-3 the
entry s_13 is free.

    python demos/02_tst_equations.py
"""
from graphbialg import complete_graph, cycle_graph, from_graph, heisenberg, path_graph
from graphbialg.graph import predicted_S_zero_pattern
from graphbialg.linalg import format_rational
from graphbialg.tst import assemble_tst, solution_matrices, solve_tst, tst_report

for name, a in [("path 1-2-3", from_graph(path_graph(3))), ("K3", from_graph(complete_graph(3))),
                ("C5", from_graph(cycle_graph(5))), ("h5", heisenberg(2))]:
    system = assemble_tst(a)
    space = solve_tst(system)
    print(f"{name}: {system.matrix.rows} equations in {len(system.unknowns)} unknowns, "
          f"solution dimension {space.dim}")
    for s in solution_matrices(system, space):
        print("  S =", [[format_rational(x) for x in row] for row in s.to_rows()])

g = path_graph(3)
pattern = sorted((i + 1, j + 1) for i, j in predicted_S_zero_pattern(g))
print("\npath 1-2-3, entries forced to zero by the graph:", pattern)
print("violations on the computed solutions:", tst_report(from_graph(g)).zero_pattern_violations)
