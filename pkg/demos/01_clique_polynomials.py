"""Clique polynomials from scratch: build graphs, enumerate cliques, and watch
the vertex and edge recurrences reassemble the polynomial.

Run: python demos/01_clique_polynomials.py
"""

from cliquekit import (
    check_edge_recurrence,
    check_vertex_recurrence,
    clique_polynomial,
    complete_graph,
    cycle_graph,
    delete_edge,
    enumerate_cliques,
    parse_graph6,
    to_graph6,
)


def show(poly):
    terms = [f"{c}x^{k}" if k else str(c) for k, c in enumerate(poly) if c]
    return " + ".join(terms)


print("=" * 64)
print("Clique polynomials")
print("=" * 64)

for name, g in [
    ("K4", complete_graph(4)),
    ("C5", cycle_graph(5)),
    ("diamond (K4 - e)", delete_edge(complete_graph(4), (0, 1))),
]:
    poly = clique_polynomial(g)
    print(f"\n{name}:  graph6={to_graph6(g)}  n={g.n} m={g.m}")
    print(f"  C(G, x) = {show(poly)}")
    catalog = enumerate_cliques(g)
    for k in range(1, catalog.omega + 1):
        print(f"  {len(catalog.cliques(k))} cliques of size {k}: "
              f"{list(catalog.cliques(k))[:6]}{' ...' if len(catalog.cliques(k)) > 6 else ''}")

print("\n" + "=" * 64)
print("Recurrences: deleting a vertex or an edge leaves an exact remainder")
print("=" * 64)

g = parse_graph6("Dhc")  # a 5-vertex sample
print(f"\ngraph6=Dhc, C(G, x) = {show(clique_polynomial(g))}")
r = check_vertex_recurrence(g, 0)
print(f"vertex recurrence at v=0:  C(G) = C(G-v) + x C(G[N(v)])  -> holds={r.holds}")
for e in g.edges():
    r = check_edge_recurrence(g, e)
    print(f"edge recurrence at e={tuple(e)}:  holds={r.holds}")
