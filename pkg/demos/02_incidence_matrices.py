"""The four clique incidence matrices and the double-counting argument.

Every counting identity in this library is a 0/1 matrix summed two ways:
row sums and column sums must agree on the grand total, and each kind of
matrix pins both sums to meaningful clique counts.

Run: python demos/02_incidence_matrices.py
"""

from cliquekit import (
    complete_graph,
    cycle_graph,
    double_count,
    edge_deck_matrix,
    subclique_superclique_matrix,
    triangle_deck_matrix,
    vertex_deck_matrix,
)

print("=" * 64)
print("Subclique-superclique matrix of K4 at order k=2")
print("(rows: edges, columns: triangles; order 1 would be the classical")
print(" vertex-edge incidence matrix)")
print("=" * 64)
m = subclique_superclique_matrix(complete_graph(4), 2)
print(m.to_csv())
rows_total, cols_total = double_count(m)
print(f"double count: by rows {rows_total}, by columns {cols_total}")
print("row sums are clique-values; column sums are k+1 = 3")

print()
print("=" * 64)
print("Vertex-deck matrix of C5 at k=2")
print("(entry 1 iff the edge survives deleting that vertex)")
print("=" * 64)
m = vertex_deck_matrix(cycle_graph(5), 2)
print(m.to_csv())
print(f"each row sums to n-k = 3, each column to c_2(C5 - v) = 3; "
      f"grand total {double_count(m)[0]} = (n-k) c_k = 3*5")

print()
print("=" * 64)
print("Edge-deck matrix of K4 at k=3")
print("=" * 64)
m = edge_deck_matrix(complete_graph(4), 3)
print(m.to_csv())
print(f"rows sum to m - C(3,2) = 3, columns to c_3(K4 - e) = 2")

print()
print("=" * 64)
print("Triangle-deck matrix of K4 at k=3: all zero")
print("(deleting any triangle's edges kills every triangle of K4;")
print(" row-sum constancy here is exactly the open question)")
print("=" * 64)
m = triangle_deck_matrix(complete_graph(4), 3)
print(m.to_csv())
