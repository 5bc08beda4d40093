"""Parameter counts for cycles and complete graphs.

|V||A| is the dimension of W ^ z.  |V| C(|A|, 2) is the number of free
coefficients when every delta(e_i) lies in Lambda^2 z and lambda = 0.  The two
agree at n = 3; from n = 4 on the second is larger.

    python demos/05_parameter_counts.py
"""
from graphbialg import classify_diagonal, complete_graph, cycle_graph, parameter_table

print("  n   C_n |V||A|   C_n |V|C(|A|,2)   K_n |V||A|   K_n |V|C(|A|,2)")
for row in parameter_table(range(3, 9)):
    print(f"{row.n:>3} {row.cycle_va:>12} {row.cycle_omega:>17} {row.complete_va:>12} "
          f"{row.complete_omega:>17}")

print("\nlambda-system dimensions:")
for n in range(3, 7):
    c, k = classify_diagonal(cycle_graph(n)), classify_diagonal(complete_graph(n))
    print(f"  n = {n}: C_n {c.lambda_dim}, K_n {k.lambda_dim}")
