"""Automorphism-group order against closed forms and brute force."""

import random
from itertools import combinations, permutations

import pytest

from m0n import automorphism_group_order
from m0n.aut import kneser_graph
from m0n.errors import InconsistencyError


def matrix_from_edges(n, edges):
    rows = [[0] * n for _ in range(n)]
    for a, b in edges:
        rows[a][b] = rows[b][a] = 1
    return rows


def brute_force_order(neigh):
    n = len(neigh)
    sets = [frozenset(x) for x in neigh]
    count = 0
    for perm in permutations(range(n)):
        if all(
            frozenset(perm[w] for w in sets[v]) == sets[perm[v]] for v in range(n)
        ):
            count += 1
    return count


class TestClosedForms:
    def test_complete_graph(self):
        edges = list(combinations(range(5), 2))
        assert automorphism_group_order(matrix_from_edges(5, edges)) == 120

    def test_empty_graph(self):
        assert automorphism_group_order(matrix_from_edges(4, [])) == 24

    def test_cycle(self):
        edges = [(k, (k + 1) % 6) for k in range(6)]
        assert automorphism_group_order(matrix_from_edges(6, edges)) == 12

    def test_path(self):
        edges = [(0, 1), (1, 2), (2, 3)]
        assert automorphism_group_order(matrix_from_edges(4, edges)) == 2

    def test_two_disjoint_edges(self):
        edges = [(0, 1), (2, 3)]
        assert automorphism_group_order(matrix_from_edges(4, edges)) == 8

    def test_star(self):
        edges = [(0, k) for k in range(1, 5)]
        assert automorphism_group_order(matrix_from_edges(5, edges)) == 24

    def test_complete_bipartite(self):
        edges = [(a, b) for a in range(3) for b in range(3, 6)]
        assert automorphism_group_order(matrix_from_edges(6, edges)) == 72

    def test_cube(self):
        edges = [
            (a, b)
            for a in range(8)
            for b in range(a + 1, 8)
            if bin(a ^ b).count("1") == 1
        ]
        assert automorphism_group_order(matrix_from_edges(8, edges)) == 48

    def test_petersen(self):
        assert automorphism_group_order(kneser_graph(5, 2)) == 120

    def test_single_vertex_and_empty_input(self):
        assert automorphism_group_order([[0]]) == 1
        assert automorphism_group_order([]) == 1


class TestInputForms:
    def test_matrix_and_neighbour_lists_agree(self):
        edges = [(0, 1), (1, 2), (2, 0), (2, 3)]
        matrix = matrix_from_edges(4, edges)
        neigh = [{1, 2}, {0, 2}, {0, 1, 3}, {2}]
        assert automorphism_group_order(matrix) == automorphism_group_order(neigh)

    def test_rejects_self_loop(self):
        with pytest.raises(InconsistencyError):
            automorphism_group_order([[1]])

    def test_rejects_asymmetric_edges(self):
        with pytest.raises(InconsistencyError):
            automorphism_group_order([{1}, set()])

    def test_rejects_unknown_neighbour(self):
        with pytest.raises(InconsistencyError):
            automorphism_group_order([{5}, {0}])


class TestAgainstBruteForce:
    @pytest.mark.parametrize("vertices, cases, seed", [(6, 40, 0), (7, 15, 1)])
    def test_random_graphs(self, vertices, cases, seed):
        rng = random.Random(seed)
        for _ in range(cases):
            p = rng.uniform(0.2, 0.8)
            neigh = [set() for _ in range(vertices)]
            for a, b in combinations(range(vertices), 2):
                if rng.random() < p:
                    neigh[a].add(b)
                    neigh[b].add(a)
            assert automorphism_group_order(neigh) == brute_force_order(neigh)
