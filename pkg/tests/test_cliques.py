import pytest
from hypothesis import given
import hypothesis.strategies as st

from cliquebound.cliques import (
    BudgetExceeded,
    count_cliques,
    count_cliques_in_neighborhood,
    enumerate_cliques,
    max_clique_containing,
    vertex_clique_numbers,
)
from cliquebound.graph import Graph
from cliquebound.oracles import brute_count_cliques, brute_vertex_clique_numbers
from strategies import graphs


class TestCountCliques:
    def test_k4_edges(self, k4):
        assert count_cliques(k4, 2).count == 6

    def test_octahedron_triangles(self, octa):
        # value frozen from the brute-force subset oracle
        assert count_cliques(octa, 3).count == 8
        assert brute_count_cliques(octa, 3) == 8

    def test_c5_triangle_free(self, c5):
        assert count_cliques(c5, 3).count == 0

    def test_t_one_counts_vertices(self, c5):
        assert count_cliques(c5, 1).count == 5

    def test_t_above_n(self, k4):
        assert count_cliques(k4, 5).count == 0

    def test_t_below_one_rejected(self, k4):
        with pytest.raises(ValueError):
            count_cliques(k4, 0)

    @given(graphs(), st.integers(min_value=1, max_value=8))
    def test_matches_oracle(self, g, t):
        assert count_cliques(g, t).count == brute_count_cliques(g, t)


class TestVertexCliqueNumbers:
    def test_c5(self, c5):
        p = vertex_clique_numbers(c5)
        assert p.c == (2,) * 5 and p.omega == 2

    def test_k4(self, k4):
        p = vertex_clique_numbers(k4)
        assert p.c == (4,) * 4 and p.omega == 4

    def test_paw(self, paw):
        # frozen from the brute-force oracle
        assert vertex_clique_numbers(paw).c == (3, 3, 3, 2)

    def test_isolated_vertices_get_one(self):
        g = Graph.from_edges(4, [(0, 1)])
        assert vertex_clique_numbers(g).c == (2, 2, 1, 1)

    def test_empty_graph(self):
        p = vertex_clique_numbers(Graph(0, ()))
        assert p.c == () and p.omega == 0

    @given(graphs())
    def test_matches_oracle(self, g):
        assert vertex_clique_numbers(g) == brute_vertex_clique_numbers(g)

    @given(graphs(min_n=1))
    def test_profile_invariants(self, g):
        p = vertex_clique_numbers(g)
        assert max(p.c) == p.omega
        for v, c in enumerate(p.c):
            assert 1 <= c <= p.omega
            assert (c == 1) == (g.degree(v) == 0)

    @given(graphs(min_n=1))
    def test_equals_max_clique_containing_singleton(self, g):
        p = vertex_clique_numbers(g)
        for v in range(g.n):
            assert p.c[v] == max_clique_containing(g, (v,))

    @given(graphs(min_n=2))
    def test_edge_deletion_never_increases(self, g):
        edges = list(g.edges())
        if not edges:
            return
        before = vertex_clique_numbers(g).c
        u, v = edges[0]
        smaller = Graph.from_edges(g.n, edges[1:])
        after = vertex_clique_numbers(smaller).c
        assert all(a <= b for a, b in zip(after, before))


class TestMaxCliqueContaining:
    def test_k4_edge(self, k4):
        assert max_clique_containing(k4, (0, 1)) == 4

    def test_paw_pendant(self, paw):
        assert max_clique_containing(paw, (3,)) == 2

    def test_c5_edge(self, c5):
        assert max_clique_containing(c5, (0, 1)) == 2

    def test_non_clique_rejected(self, c5):
        with pytest.raises(ValueError):
            max_clique_containing(c5, (0, 2))


class TestNeighborhoodCounts:
    def test_k4(self, k4):
        assert count_cliques_in_neighborhood(k4, 0, 2) == 3

    def test_c5(self, c5):
        assert count_cliques_in_neighborhood(c5, 0, 2) == 0

    def test_octahedron(self, octa):
        # N(0) induces a 4-cycle; frozen from brute force over its 6 pairs
        assert count_cliques_in_neighborhood(octa, 0, 2) == 4

    @given(graphs(min_n=1), st.integers(min_value=2, max_value=6))
    def test_handshake_identity(self, g, t):
        total = sum(count_cliques_in_neighborhood(g, v, t - 1) for v in range(g.n))
        assert total == t * count_cliques(g, t).count


class TestEnumerationAndBudget:
    def test_enumerate_matches_count(self, octa):
        cliques = list(enumerate_cliques(octa, 3))
        assert len(cliques) == 8
        assert all(len(c) == 3 for c in cliques)
        assert len(set(cliques)) == 8

    def test_budget_exceeded(self):
        g = Graph.from_edges(6, [(u, v) for u in range(6) for v in range(u + 1, 6)])
        with pytest.raises(BudgetExceeded):
            vertex_clique_numbers(g, budget=1)
        with pytest.raises(BudgetExceeded):
            count_cliques(g, 3, budget=1)
