import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netsync.errors import DegenerateInputError, InputError
from netsync.graph import Graph
from netsync.metrics import (
    all_pairs_distances,
    average_path_length,
    betweenness_centrality,
    closeness_centrality,
    degree_distribution,
    diameter,
    eigenvector_centrality,
    global_clustering,
    local_clustering,
    node_stats,
    shortest_path_lengths,
    summarize,
)

from oracles import brute_force_betweenness

INF = math.inf


def complete(n):
    return Graph(n, list(itertools.combinations(range(n), 2)))


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_graph(rng, max_n=7):
    n = int(rng.integers(2, max_n + 1))
    pairs = list(itertools.combinations(range(n), 2))
    mask = rng.random(len(pairs)) < rng.uniform(0.2, 0.9)
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


class TestShortestPaths:
    def test_path_from_endpoint(self):
        assert shortest_path_lengths(path(3), 0) == [0, 1, 2]

    def test_complete_graph(self):
        assert shortest_path_lengths(complete(4), 0) == [0, 1, 1, 1]

    def test_unreachable_is_inf(self):
        g = Graph(4, [(0, 1), (2, 3)])
        d = shortest_path_lengths(g, 0)
        assert d[1] == 1 and d[2] == INF and d[3] == INF

    def test_out_of_range(self):
        with pytest.raises(InputError):
            shortest_path_lengths(path(3), 5)

    def test_matches_matrix_form(self):
        rng = np.random.default_rng(4)
        for _ in range(20):
            g = random_graph(rng)
            dense = all_pairs_distances(g)
            for s in range(g.n):
                assert list(dense[s]) == shortest_path_lengths(g, s)


class TestAveragePathLength:
    @pytest.mark.parametrize("n", range(2, 11))
    def test_complete_graphs(self, n):
        assert average_path_length(complete(n)).mean == 1.0

    def test_p3(self):
        stats = average_path_length(path(3))
        assert stats.mean == pytest.approx(4.0 / 3.0, abs=1e-15)
        assert stats.unreachable_fraction == 0.0

    def test_unreachable_fraction(self):
        g = Graph(4, [(0, 1), (2, 3)])
        stats = average_path_length(g)
        assert stats.mean == 1.0
        assert stats.unreachable_fraction == pytest.approx(4.0 / 6.0)

    def test_all_isolated(self):
        with pytest.raises(DegenerateInputError):
            average_path_length(Graph(3))

    def test_single_node(self):
        with pytest.raises(InputError):
            average_path_length(Graph(1))


class TestDiameter:
    def test_complete(self):
        assert diameter(complete(5)) == 1

    def test_path4(self):
        assert diameter(path(4)) == 3

    def test_cycle6(self):
        assert diameter(cycle(6)) == 3

    def test_disconnected_uses_largest_component(self):
        g = Graph(6, [(0, 1), (1, 2), (2, 3), (4, 5)])
        assert diameter(g) == 3

    def test_singleton_largest_component(self):
        with pytest.raises(DegenerateInputError):
            diameter(Graph(3))


class TestClustering:
    def test_triangle_is_clique(self):
        assert local_clustering(complete(3), 0) == 1.0

    def test_star_center(self):
        assert local_clustering(star(4), 0) == 0.0

    def test_degree_one_convention(self):
        assert local_clustering(path(3), 0) == 0.0

    def test_global_complete(self):
        assert global_clustering(complete(4)) == 1.0

    def test_global_star(self):
        assert global_clustering(star(4)) == 0.0

    def test_mixed(self):
        # triangle plus a pendant: pendant 0, its anchor 1/3
        g = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
        assert local_clustering(g, 2) == pytest.approx(1.0 / 3.0)
        assert local_clustering(g, 3) == 0.0


class TestDegreeDistribution:
    def test_complete(self):
        assert degree_distribution(complete(4)) == {3: 1.0}

    def test_star(self):
        assert degree_distribution(star(4)) == {4: 0.2, 1: 0.8}

    def test_p3(self):
        dist = degree_distribution(path(3))
        assert dist[1] == pytest.approx(2.0 / 3.0)
        assert dist[2] == pytest.approx(1.0 / 3.0)

    @given(st.integers(2, 30), st.integers(0, 60))
    @settings(max_examples=30)
    def test_sums_to_one(self, n, seed):
        from netsync.generators import ERParams, generate_er

        m = min(seed, n * (n - 1) // 2)
        g = generate_er(ERParams(n=n, m=m, seed=seed))
        assert abs(sum(degree_distribution(g).values()) - 1.0) < 1e-12


class TestCloseness:
    def test_p3_middle(self):
        assert closeness_centrality(path(3), 1) == 0.5

    def test_complete5(self):
        assert closeness_centrality(complete(5), 0) == 0.25

    def test_star_center(self):
        assert closeness_centrality(star(9), 0) == pytest.approx(1.0 / 9.0)

    def test_isolated_node(self):
        with pytest.raises(DegenerateInputError):
            closeness_centrality(Graph(2, [], labels=None), 0)

    def test_within_component_on_disconnected(self):
        g = Graph(5, [(0, 1), (2, 3), (3, 4)])
        assert closeness_centrality(g, 3) == 0.5


class TestBetweenness:
    def test_p3(self):
        assert list(betweenness_centrality(path(3))) == [0.0, 1.0, 0.0]

    def test_star_center(self):
        assert betweenness_centrality(star(4))[0] == 6.0

    def test_cycle4(self):
        # oracle: each opposite pair has two geodesics, each interior node
        # carries half of one pair
        assert np.allclose(betweenness_centrality(cycle(4)), 0.5)

    def test_matches_brute_force(self):
        rng = np.random.default_rng(99)
        for _ in range(100):
            g = random_graph(rng)
            expected = brute_force_betweenness(g)
            got = betweenness_centrality(g)
            assert np.allclose(got, expected, atol=1e-9)

    def test_threads_bitwise_identical(self):
        from netsync.generators import ERParams, generate_er

        g = generate_er(ERParams(n=60, m=150, seed=21))
        single = betweenness_centrality(g, threads=1)
        pooled = betweenness_centrality(g, threads=4)
        assert np.array_equal(single, pooled)


class TestEigenvector:
    def test_complete_symmetry(self):
        assert np.allclose(eigenvector_centrality(complete(3)), 1.0)

    def test_star_analytic(self):
        # leaf/center ratio for a star with q leaves is 1/sqrt(q)
        v = eigenvector_centrality(star(4))
        assert v[0] == pytest.approx(1.0)
        assert np.allclose(v[1:], 0.5, atol=1e-9)

    def test_no_edges(self):
        with pytest.raises(DegenerateInputError):
            eigenvector_centrality(Graph(3))

    def test_largest_component_only(self):
        g = Graph(5, [(0, 1), (1, 2), (3, 4)])
        v = eigenvector_centrality(g)
        assert v[3] == 0.0 and v[4] == 0.0
        assert v.max() == 1.0

    def test_residual_invariant(self):
        from netsync.generators import BAParams, generate_ba
        from netsync.synchronization import coupling_matrix

        g = generate_ba(BAParams(n=300, m=2, seed=5))
        v = eigenvector_centrality(g)
        a = np.abs(coupling_matrix(g))
        np.fill_diagonal(a, 0.0)
        lam = (v @ (a @ v)) / (v @ v)
        assert np.abs(a @ v - lam * v).max() / lam <= 1e-8


class TestPermutationEquivariance:
    @given(st.integers(0, 500))
    @settings(max_examples=25, deadline=None)
    def test_metrics_follow_relabeling(self, seed):
        rng = np.random.default_rng(seed)
        g = random_graph(rng, max_n=9)
        perm = rng.permutation(g.n)
        permuted = Graph(
            g.n, [(int(perm[u]), int(perm[v])) for u, v in g.edges()]
        )
        bc = betweenness_centrality(g)
        bc_p = betweenness_centrality(permuted)
        for i in range(g.n):
            assert bc_p[perm[i]] == pytest.approx(bc[i], abs=1e-12)
            assert local_clustering(permuted, int(perm[i])) == pytest.approx(
                local_clustering(g, i), abs=1e-12
            )
            assert permuted.degree(int(perm[i])) == g.degree(i)


class TestEdgeMonotonicity:
    def test_adding_edge_never_increases_distance(self):
        rng = np.random.default_rng(7)
        for _ in range(25):
            g = random_graph(rng, max_n=8)
            missing = [
                (u, v)
                for u, v in itertools.combinations(range(g.n), 2)
                if not g.has_edge(u, v)
            ]
            if not missing:
                continue
            u, v = missing[rng.integers(0, len(missing))]
            augmented = Graph(g.n, list(g.edges()) + [(u, v)])
            before = all_pairs_distances(g)
            after = all_pairs_distances(augmented)
            assert np.all(after <= before)


class TestSummary:
    def test_complete_graph_summary(self):
        s = summarize(complete(6))
        assert s.n == 6 and s.m == 15
        assert s.average_path_length == 1.0
        assert s.diameter == 1
        assert s.global_clustering == 1.0
        assert s.connected

    def test_diameter_bounds_apl(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            g = random_graph(rng, max_n=9)
            s = summarize(g)
            if s.connected and g.n >= 2:
                assert s.diameter >= s.average_path_length >= 1.0

    def test_degenerate_fields_none(self):
        s = summarize(Graph(3))
        assert s.average_path_length is None
        assert s.diameter is None
        assert s.component_count == 3

    def test_distribution_sums_to_one(self):
        s = summarize(star(7))
        assert abs(sum(s.degree_distribution.values()) - 1.0) < 1e-12


class TestNodeStats:
    def test_star_rows(self):
        rows = node_stats(star(4))
        center = rows[0]
        assert center.degree == 4
        assert center.betweenness == 6.0
        assert center.eigenvector == pytest.approx(1.0)
        leaf = rows[1]
        assert leaf.clustering == 0.0
        assert leaf.betweenness == 0.0

    def test_isolated_node_has_no_closeness(self):
        rows = node_stats(Graph(3, [(0, 1)]))
        assert rows[2].closeness is None
        assert rows[2].eigenvector == 0.0
