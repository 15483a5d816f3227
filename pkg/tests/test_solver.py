"""Tests for lightsout.solver module."""

import itertools

import numpy as np
import pytest

from lightsout.errors import ContractViolation, GraphFormatError, UnsupportedSize
from lightsout.gf2 import BitVec
from lightsout.graph import (
    Graph,
    all_graphs,
    closed_neighborhood_matrix,
    complete_graph,
    cycle_graph,
    delete_edge,
    empty_graph,
    path_graph,
    random_graph,
)
from lightsout.solver import (
    SolutionSet,
    apply_pattern,
    is_always_solvable,
    is_solvable,
    null_patterns,
    nullity,
    parse_config,
    rank,
    solve_all_ones,
    solve_config,
    transported_config,
)


def _span(basis):
    """Every vector of the span of basis, as bitstrings."""
    n = len(basis[0])
    found = set()
    for coefficients in itertools.product((0, 1), repeat=len(basis)):
        v = BitVec.zeros(n)
        for c, b in zip(coefficients, basis):
            if c:
                v = v + b
        found.add(v.to_string())
    return found


class TestNullity:
    @pytest.mark.parametrize("n", range(1, 17))
    def test_complete_graph(self, n):
        assert nullity(complete_graph(n)) == n - 1

    def test_empty_graph_has_nullity_zero(self):
        assert nullity(empty_graph(0)) == 0
        assert is_always_solvable(empty_graph(0))

    def test_isolated_vertices(self):
        assert nullity(empty_graph(5)) == 0

    @pytest.mark.parametrize("n", range(1, 16))
    def test_paths(self, n):
        # a path is singular exactly when n + 1 is divisible by 3
        assert nullity(path_graph(n)) == (1 if (n + 1) % 3 == 0 else 0)

    def test_cycle_six(self):
        assert nullity(cycle_graph(6)) == 2

    def test_rank_plus_nullity(self):
        for seed in range(10):
            G = random_graph(10, 0.4, seed=seed)
            assert rank(G) + nullity(G) == G.n


class TestNullPatterns:
    def test_path_two(self):
        assert [p.to_string() for p in null_patterns(path_graph(2))] == ["11"]

    def test_cycle_six_span(self):
        basis = null_patterns(cycle_graph(6))
        assert len(basis) == 2
        assert _span(basis) == {"000000", "110110", "011011", "101101"}

    def test_null_patterns_change_nothing(self):
        G = complete_graph(4)
        c = BitVec.from_string("1010")
        for ell in null_patterns(G):
            assert apply_pattern(G, c, ell) == c


class TestSolve:
    def test_path_three_all_ones(self):
        solution = solve_config(path_graph(3), BitVec.ones(3))
        assert solution.particular.to_string() == "010"
        assert solution.count == 1

    def test_unsolvable(self):
        assert solve_config(path_graph(2), BitVec.from_string("10")) is None
        assert not is_solvable(path_graph(2), BitVec.from_string("10"))

    def test_all_zeros(self):
        G = cycle_graph(6)
        solution = solve_config(G, BitVec.zeros(6))
        assert solution.particular == BitVec.zeros(6)
        assert solution.nullity == 2

    def test_solvable_iff_orthogonal_to_null_patterns(self):
        G = cycle_graph(6)
        for code in range(64):
            c = BitVec.from_int(code, 6)
            assert is_solvable(G, c) == (solve_config(G, c) is not None)

    def test_solutions_actually_solve(self):
        G = random_graph(8, 0.5, seed=9)
        N = closed_neighborhood_matrix(G)
        for code in range(0, 256, 17):
            c = BitVec.from_int(code, 8)
            solution = solve_config(G, c)
            if solution is None:
                continue
            for p in solution.solutions():
                assert N.matvec(p) == c
                assert solution.contains(p)

    def test_solutions_sorted_and_complete(self):
        solution = solve_config(complete_graph(3), BitVec.ones(3))
        patterns = solution.solutions()
        assert len(patterns) == solution.count == 4
        assert [p.to_int() for p in patterns] == sorted(p.to_int() for p in patterns)
        assert {p.to_string() for p in patterns} == {"100", "010", "001", "111"}

    def test_contains_rejects_other_patterns(self):
        solution = solve_config(path_graph(3), BitVec.ones(3))
        assert not solution.contains(BitVec.from_string("111"))
        assert not solution.contains(BitVec.from_string("01"))

    def test_solution_listing_guard(self):
        basis = tuple(BitVec.unit(21, i) for i in range(21))
        huge = SolutionSet(BitVec.zeros(21), basis)
        assert huge.count == 2**21
        with pytest.raises(UnsupportedSize):
            huge.solutions()

    def test_solvable_iff_solution_found(self):
        graphs = [G for n in range(1, 5) for G in all_graphs(n)]
        graphs += [random_graph(n, 0.45, seed=seed) for n in range(5, 9) for seed in range(10)]
        for G in graphs:
            for code in range(1 << G.n):
                c = BitVec.from_int(code, G.n)
                assert is_solvable(G, c) == (solve_config(G, c) is not None)

    def test_length_mismatch(self):
        with pytest.raises(ContractViolation):
            solve_config(path_graph(3), BitVec.ones(2))


class TestAllOnes:
    def test_always_solvable(self):
        for seed in range(1000):
            n = 1 + seed % 64
            G = random_graph(n, (0.1, 0.3, 0.5, 0.8)[seed % 4], seed=seed)
            solution = solve_all_ones(G)
            assert closed_neighborhood_matrix(G).matvec(solution.particular) == BitVec.ones(n)

    def test_needs_a_vertex(self):
        with pytest.raises(ContractViolation):
            solve_all_ones(empty_graph(0))


class TestPatterns:
    def test_apply_pattern(self):
        G = path_graph(3)
        assert apply_pattern(G, BitVec.ones(3), BitVec.from_string("010")) == BitVec.zeros(3)

    def test_transported_config_matches_edge_deletion(self):
        G = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2)])
        H = Graph(4, G.edges - {(0, 2)})
        N_H = closed_neighborhood_matrix(H)
        for code in range(16):
            p = BitVec.from_int(code, 4)
            assert transported_config(G, (2, 0), p) == N_H.matvec(p)

    def test_transported_config_on_random_graphs(self):
        rng = np.random.default_rng(11)
        for seed in range(12):
            G = random_graph(1 + seed, 0.35, seed=seed)
            patterns = [BitVec.from_int(int(code), G.n) for code in rng.integers(0, 1 << G.n, size=100)]
            for e in G.sorted_edges():
                H = delete_edge(G, e)
                for p in patterns:
                    assert transported_config(G, e, p) == apply_pattern(H, BitVec.zeros(G.n), p)

    def test_transported_config_missing_edge(self):
        with pytest.raises(ContractViolation):
            transported_config(path_graph(3), (0, 2), BitVec.zeros(3))

    def test_parse_config(self):
        assert parse_config(path_graph(3), "101").to_string() == "101"
        with pytest.raises(ContractViolation):
            parse_config(path_graph(3), "10")
        with pytest.raises(GraphFormatError):
            parse_config(path_graph(3), "1x1")
