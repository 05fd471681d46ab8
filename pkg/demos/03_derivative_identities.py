"""Derivatives of clique polynomials as neighborhood sums.

The first derivative sums vertex-neighborhood polynomials, the halved second
derivative sums edge-neighborhood polynomials, and on graphs with no
5-clique one sixth of the third derivative sums triangle-neighborhood
polynomials.  The triangle-deletion identity is the engine behind the third
derivative.

Run: python demos/03_derivative_identities.py
"""

from cliquekit import (
    Graph,
    check_first_derivative,
    check_second_derivative,
    check_third_derivative_k5free,
    clique_polynomial,
    complete_graph,
    random_gnp,
    RngSpec,
    triangle_deletion_counts,
    triangle_identity,
    triangles,
)

print("=" * 64)
print("Derivative identities on K4")
print("=" * 64)
k4 = complete_graph(4)
print(f"C(K4, x) coefficients: {clique_polynomial(k4)}")
r1 = check_first_derivative(k4)
print(f"d/dx: {r1.lhs} == sum of vertex-neighborhood polynomials {r1.rhs} "
      f"-> {r1.holds}")
r2 = check_second_derivative(k4)
print(f"(1/2!) d2/dx2: {r2.lhs} == sum over edges {r2.rhs} -> {r2.holds}")
r3 = check_third_derivative_k5free(k4)
print(f"(1/3!) d3/dx3: {r3.lhs} == sum over triangles {r3.rhs} -> {r3.holds}")

print()
print("=" * 64)
print("Triangle-deletion identity on a random 5-clique-free graph")
print("=" * 64)
g = random_gnp(9, 0.45, RngSpec(12))
print(f"graph: n={g.n} m={g.m}, triangles: {len(triangles(g))}")
for d in triangles(g)[:4]:
    report, parts = triangle_identity(g, d)
    print(f"  delta={d}: C(G) = C(G-delta) + x^2*{parts.edge_neighborhood_sum}"
          f" - 2x^3*{parts.triangle_neighborhood}  -> holds={report.holds}")

print()
print("=" * 64)
print("Predicted counts after deleting a triangle's edges")
print("=" * 64)
for d in triangles(g)[:4]:
    r = triangle_deletion_counts(g, d)
    print(f"  delta={d}: formula c_1..c_4 = {r.formula}, direct = {r.direct}, "
          f"match={r.matches}")
