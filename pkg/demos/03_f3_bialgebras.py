"""Nearly-coboundary Lie bialgebras on f_3 = n(K_3).

Diagonal families: delta(e_i) = e_i ^ A_i + omega_i with A_i = sum lambda_{i,a} a.
The lambda's form a 3-dimensional space; omega_i must satisfy omega_i ^ A_i = 0.

Jordan families: D_alpha with a nontrivial Jordan block.  The wedge conditions
on the omegas are exactly co-Jacobi; the 1-cocycle condition cuts the matrix
parameters down further, and in case I leaves nothing.

    python demos/03_f3_bialgebras.py
"""
from graphbialg import (DiagonalFamily, F3Family, complete_graph, diagonal_build, f3_build,
                        f3_residuals, is_bialgebra, lambda_system)
from graphbialg.classify import classify_diagonal, f3_cocycle_locus
from graphbialg.cobracket import check_cocycle
from graphbialg.exterior import wedge

g = complete_graph(3)
space = lambda_system(g)
print("lambda system on K3: dimension", space.dim)
fam = DiagonalFamily.from_vector(g, space.combination([1, 2, 3]))
a = fam.algebra
print(diagonal_build(fam).pretty())
print("bialgebra:", is_bialgebra(diagonal_build(fam)))

bad = DiagonalFamily(g, fam.lam, [wedge(a.basis(4), a.basis(5))] + fam.omega[1:])
print("\nwith omega_1 = a1_3 ^ a2_3 (omega_1 ^ A_1 != 0):", is_bialgebra(diagonal_build(bad)))

rep = classify_diagonal(g)
print(f"omega parameters: {rep.omega_free_parameters} at lambda = 0, "
      f"{rep.omega_free_parameters_generic} at a generic lambda")

print("\nJordan families (parameters in the labels alpha=[e1,e2], beta=[e2,e3], gamma=[e3,e1])")
for case in ("I", "II", "III"):
    locus = f3_cocycle_locus(case)
    if locus is None:
        print(f"  case {case}: no parameter values satisfy the 1-cocycle condition")
        continue
    point, directions = locus
    fixed = {k: str(v) for k, v in point.items() if v}
    moves = [{k: str(x) for k, x in zip(directions.labels, vec) if x} for vec in directions.basis]
    print(f"  case {case}: cocycle locus through {fixed} along {moves}")
    fam3 = F3Family(case, omega=((0, 0, 0), (0, 0, 0), (1, 0, 0)), **point)
    print(f"    omega_3 = alpha^beta: residuals {[str(r) for r in f3_residuals(fam3).values]}, "
          f"bialgebra {is_bialgebra(f3_build(fam3))}")

fam1 = F3Family("I", lam=1, lam_prime=2)
print("\ncase I, omega = 0: residuals pass =", f3_residuals(fam1).ok,
      "but cocycle residuals at", sorted(check_cocycle(f3_build(fam1)).residuals))
