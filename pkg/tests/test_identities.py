import itertools

import pytest
from hypothesis import given, settings

from cliquekit import (
    Graph,
    check_edge_deck_identity,
    check_edge_recurrence,
    check_first_derivative,
    check_handshake,
    check_kth_derivative_general,
    check_second_derivative,
    check_third_derivative_k5free,
    check_triangle_recurrence,
    check_vertex_deck_identity,
    check_vertex_recurrence,
    clique_count,
    clique_counts,
    clique_deletion_expansion,
    clique_polynomial,
    complete_graph,
    cycle_graph,
    delete_edge,
    delete_vertex,
    disjoint_union,
    empty_graph,
    enumerate_cliques,
    parse_graph6,
    path_graph,
    poly_equal,
    star_graph,
    triangle_deletion_counts,
    triangle_identity,
    triangles,
)

from _helpers import graphs

DIAMOND = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


class TestHandshake:
    def test_k4_order_two(self):
        r = check_handshake(complete_graph(4), 2)
        assert r.lhs == 12 and r.rhs == 12 and r.holds

    def test_holds_for_all_orders_on_corpus(self, corpus):
        for g in corpus:
            for k in range(1, enumerate_cliques(g).omega + 2):
                assert check_handshake(g, k).holds


class TestVertexRecurrence:
    def test_triangle(self):
        r = check_vertex_recurrence(complete_graph(3), 0)
        assert r.lhs == [1, 3, 3, 1] and r.holds

    def test_isolated_vertex(self):
        g = disjoint_union(empty_graph(1), cycle_graph(5))
        r = check_vertex_recurrence(g, 0)
        assert r.holds

    def test_cycle_all_vertices(self):
        for v in range(5):
            assert check_vertex_recurrence(cycle_graph(5), v).holds

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            check_vertex_recurrence(complete_graph(3), 3)

    @given(graphs(min_n=1))
    @settings(max_examples=100)
    def test_always_holds(self, g):
        assert check_vertex_recurrence(g, g.n // 2).holds


class TestEdgeRecurrence:
    def test_triangle(self):
        for e in complete_graph(3).edges():
            assert check_edge_recurrence(complete_graph(3), e).holds

    def test_edge_with_empty_common_neighborhood(self):
        g = path_graph(3)
        r = check_edge_recurrence(g, (0, 1))
        # C(G) = C(G - e) + x^2 * 1 when the endpoints share no neighbor
        assert r.holds
        assert poly_equal(
            r.lhs,
            [a + b for a, b in itertools.zip_longest(
                clique_polynomial(delete_edge(g, (0, 1))), [0, 0, 1], fillvalue=0)],
        )

    def test_k4_all_edges(self):
        for e in complete_graph(4).edges():
            assert check_edge_recurrence(complete_graph(4), e).holds

    def test_absent_edge_rejected(self):
        with pytest.raises(ValueError, match="not an edge"):
            check_edge_recurrence(path_graph(3), (0, 2))


class TestDeckIdentities:
    def test_vertex_deck_c5(self):
        r = check_vertex_deck_identity(cycle_graph(5), 2)
        assert r.lhs == 15 and r.rhs == 15 and r.holds

    def test_vertex_deck_spanning_clique(self):
        r = check_vertex_deck_identity(complete_graph(4), 4)
        assert r.lhs == 0 and r.rhs == 0 and r.holds

    def test_vertex_deck_k1_counts_vertices(self, corpus):
        for g in corpus:
            r = check_vertex_deck_identity(g, 1)
            assert r.lhs == (g.n - 1) * g.n and r.holds

    def test_edge_deck_k4(self):
        r3 = check_edge_deck_identity(complete_graph(4), 3)
        assert r3.lhs == 12 and r3.rhs == 12 and r3.holds
        r2 = check_edge_deck_identity(complete_graph(4), 2)
        assert r2.lhs == 30 and r2.rhs == 30 and r2.holds

    def test_edge_deck_triangle_free(self):
        r = check_edge_deck_identity(cycle_graph(6), 3)
        assert r.lhs == 0 and r.rhs == 0 and r.holds

    def test_both_hold_for_all_k_on_corpus(self, corpus):
        for g in corpus:
            omega = enumerate_cliques(g).omega
            for k in range(1, omega + 2):
                assert check_vertex_deck_identity(g, k).holds
                if k >= 2:
                    assert check_edge_deck_identity(g, k).holds


class TestDerivativeTheorems:
    def test_first_on_k4(self):
        r = check_first_derivative(complete_graph(4))
        assert r.lhs == [4, 12, 12, 4] and r.holds  # 4(1+x)^3

    def test_first_on_empty(self):
        r = check_first_derivative(empty_graph(6))
        assert r.lhs == [6] and r.holds

    def test_first_on_c5(self):
        r = check_first_derivative(cycle_graph(5))
        assert r.lhs == [5, 10] and r.holds

    def test_second_on_k4(self):
        r = check_second_derivative(complete_graph(4))
        assert r.lhs == [6, 12, 6] and r.holds  # 6(1+x)^2

    def test_second_on_triangle_free(self):
        g = cycle_graph(6)
        r = check_second_derivative(g)
        assert r.lhs == [6] and r.rhs == [6] and r.holds

    def test_second_on_diamond(self):
        r = check_second_derivative(DIAMOND)
        assert r.lhs == [5, 6] and r.holds

    def test_hold_on_corpus(self, corpus):
        for g in corpus:
            assert check_first_derivative(g).holds
            assert check_second_derivative(g).holds

    def test_consistency_with_deck_identities(self, corpus):
        # derivative coefficient k*c_k equals sum over v of c_k(G) - c_k(G - v),
        # and C(k,2)*c_k equals the edge-deck difference sum
        for g in corpus[:20]:
            counts = clique_counts(g)
            for k in range(1, len(counts) + 1):
                diff_v = sum(
                    counts[k - 1] - clique_count(delete_vertex(g, v), k)
                    for v in range(g.n)
                )
                assert diff_v == k * counts[k - 1]
                diff_e = sum(
                    counts[k - 1] - clique_count(delete_edge(g, e), k)
                    for e in g.edges()
                )
                assert diff_e == k * (k - 1) // 2 * counts[k - 1]


class TestThirdDerivative:
    def test_k4(self):
        r = check_third_derivative_k5free(complete_graph(4))
        assert r.lhs == [4, 4] and r.rhs == [4, 4] and r.holds

    def test_c5_vacuous(self):
        r = check_third_derivative_k5free(cycle_graph(5))
        assert r.lhs == [] and r.rhs == [] and r.holds

    def test_diamond(self):
        r = check_third_derivative_k5free(DIAMOND)
        assert r.lhs == [2] and r.rhs == [2] and r.holds

    def test_records_connectivity(self):
        r = check_third_derivative_k5free(disjoint_union(complete_graph(4), complete_graph(3)))
        assert r.params["connected"] is False
        assert r.holds

    def test_rejects_k5(self):
        with pytest.raises(ValueError, match="5-clique"):
            check_third_derivative_k5free(complete_graph(5))

    def test_holds_on_k5free_corpus(self, corpus):
        for g in corpus:
            if enumerate_cliques(g).omega <= 4:
                assert check_third_derivative_k5free(g).holds


class TestKthDerivative:
    def test_coincides_with_first(self, corpus):
        for g in corpus[:15]:
            a = check_kth_derivative_general(g, 1)
            b = check_first_derivative(g)
            assert a.lhs == b.lhs and a.rhs == b.rhs

    def test_coincides_with_second_on_k4(self):
        a = check_kth_derivative_general(complete_graph(4), 2)
        b = check_second_derivative(complete_graph(4))
        assert a.lhs == b.lhs and a.rhs == b.rhs

    def test_k3_on_k5_computed_exactly(self):
        r = check_kth_derivative_general(complete_graph(5), 3)
        assert r.lhs == [10, 20, 10]  # 10 (1+x)^2
        assert r.rhs == [10, 20, 10]
        assert r.holds is (r.lhs == r.rhs)


class TestCliqueDeletionExpansion:
    def test_single_edge_reduces_to_edge_recurrence(self, corpus):
        for g in corpus[:20]:
            for e in g.edges()[:3]:
                a = clique_deletion_expansion(g, [e])
                b = check_edge_recurrence(g, e)
                assert a.rhs == b.rhs and a.holds

    def test_triangle_matches_both_interpretations(self):
        g = complete_graph(4)
        m = [(0, 1), (0, 2), (1, 2)]
        a = clique_deletion_expansion(g, m, "cliques")
        b = clique_deletion_expansion(g, m, "edge-subsets")
        assert a.holds and b.holds and a.rhs == b.rhs

    def test_k4_full_edge_set_separates_interpretations(self):
        g = complete_graph(4)
        m = list(itertools.combinations(range(4), 2))
        strict = clique_deletion_expansion(g, m, "cliques")
        loose = clique_deletion_expansion(g, m, "edge-subsets")
        assert strict.holds
        assert loose.holds is False
        assert loose.rhs == [1, 4, 6, -28, 1]

    def test_rejects_non_clique_edge_set(self):
        with pytest.raises(ValueError, match="complete"):
            clique_deletion_expansion(path_graph(3), [(0, 1), (1, 2)])

    def test_rejects_missing_edge(self):
        with pytest.raises(ValueError, match="not an edge"):
            clique_deletion_expansion(path_graph(3), [(0, 1), (1, 2), (0, 2)])

    def test_rejects_unknown_interpretation(self):
        with pytest.raises(ValueError, match="interpretation"):
            clique_deletion_expansion(complete_graph(3), [(0, 1)], "mystery")

    @given(graphs(min_n=3, max_n=7))
    @settings(max_examples=80)
    def test_strict_reading_always_holds(self, g):
        cat = enumerate_cliques(g, k_max=4)
        for size in (2, 3, 4):
            for q in cat.cliques(size)[:3]:
                m = list(itertools.combinations(q, 2))
                assert clique_deletion_expansion(g, m, "cliques").holds


class TestTriangleIdentity:
    def test_k4_reproduces_binomial(self):
        report, parts = triangle_identity(complete_graph(4), (0, 1, 2))
        assert report.lhs == [1, 4, 6, 4, 1]
        assert report.holds
        assert parts.edge_neighborhood_sum == [3, 6, 3]
        assert parts.triangle_neighborhood == [1, 1]

    def test_isolated_triangle(self):
        report, parts = triangle_identity(complete_graph(3), (0, 1, 2))
        assert report.holds
        assert parts.edge_neighborhood_sum == [3, 3]
        assert parts.triangle_neighborhood == [1]

    def test_diamond_both_triangles(self):
        for d in triangles(DIAMOND):
            report, _ = triangle_identity(DIAMOND, d)
            assert report.holds

    def test_rejects_non_triangle(self):
        with pytest.raises(ValueError, match="triangle"):
            triangle_identity(cycle_graph(5), (0, 1, 2))

    def test_holds_for_every_triangle_on_corpus(self, corpus):
        for g in corpus:
            for d in triangles(g):
                assert triangle_identity(g, d)[0].holds


class TestTriangleRecurrence:
    def test_isolated_triangle_fails(self):
        r = check_triangle_recurrence(complete_graph(3), (0, 1, 2))
        assert r.lhs == [1, 3, 3, 1]
        assert r.rhs == [1, 3, 0, 1]
        assert r.holds is False

    def test_k4_report(self):
        r = check_triangle_recurrence(complete_graph(4), (0, 1, 2))
        assert r.lhs == [1, 4, 6, 4, 1]
        assert r.rhs == [1, 4, 3, 1, 1]
        assert r.holds is False

    def test_equivalent_condition_is_recorded_verbatim(self):
        r = check_triangle_recurrence(complete_graph(4), (0, 1, 2))
        assert r.params["edge_neighborhood_sum"] == [3, 6, 3]
        assert r.params["triangle_neighborhood_times_3x"] == [0, 3, 3]
        # constant terms can never match; recorded, not repaired
        assert r.params["equivalent_condition_holds"] is False


class TestTriangleDeletionCounts:
    def test_k4(self):
        r = triangle_deletion_counts(complete_graph(4), (0, 1, 2))
        assert r.formula == (4, 3, 0, 0)
        assert r.direct == (4, 3, 0, 0)
        assert r.matches

    def test_isolated_triangle(self):
        r = triangle_deletion_counts(complete_graph(3), (0, 1, 2))
        assert r.formula == (3, 0, 0, 0) and r.matches

    def test_diamond_shared_edge(self):
        r = triangle_deletion_counts(DIAMOND, (0, 2, 3))
        assert r.formula == (4, 2, 0, 0) and r.matches

    def test_rejects_k5(self):
        with pytest.raises(ValueError, match="5-clique"):
            triangle_deletion_counts(complete_graph(5), (0, 1, 2))

    def test_rejects_non_triangle(self):
        with pytest.raises(ValueError, match="triangle"):
            triangle_deletion_counts(star_graph(4), (0, 1, 2))

    def test_matches_direct_enumeration_on_corpus(self, corpus):
        for g in corpus:
            if enumerate_cliques(g).omega > 4:
                continue
            for d in triangles(g):
                assert triangle_deletion_counts(g, d).matches


class TestReportShape:
    def test_json_dict_schema(self):
        r = check_vertex_recurrence(complete_graph(3), 1)
        d = r.to_json_dict()
        assert set(d) == {"identity", "graph6", "params", "lhs", "rhs", "holds"}
        assert d["graph6"] == "Bw"
        assert d["params"] == {"v": 1}
        assert parse_graph6(d["graph6"]) == complete_graph(3)

    def test_holds_reflects_exact_equality(self, corpus):
        for g in corpus[:20]:
            for d in triangles(g):
                r = check_triangle_recurrence(g, d)
                assert r.holds == poly_equal(r.lhs, r.rhs)
