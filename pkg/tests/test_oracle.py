"""Tests for lightsout.oracle module."""

from fractions import Fraction

import pytest

from lightsout.classify import ActivationClass, activation_vector
from lightsout.errors import InvariantViolation, UnsupportedSize
from lightsout.gf2 import BitVec
from lightsout.graph import (
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    random_graph,
    star_graph,
)
from lightsout.oracle import (
    ActivationStats,
    JoinCase,
    activation_classes,
    activation_stats,
    brute_force_nullity,
    enumerate_solutions,
    expected_join_cases,
    join_cases,
    pi_partition_oracle,
)
from lightsout.solver import nullity
from lightsout.structure import verify_pass

K1 = empty_graph(1)


class TestEnumerateSolutions:
    def test_path_three(self):
        assert [p.to_string() for p in enumerate_solutions(path_graph(3), BitVec.ones(3))] == ["010"]

    def test_triangle_in_integer_order(self):
        solutions = enumerate_solutions(complete_graph(3), BitVec.ones(3))
        assert [p.to_string() for p in solutions] == ["100", "010", "001", "111"]

    def test_zero_configuration_gives_kernel(self):
        G = cycle_graph(6)
        assert len(enumerate_solutions(G, BitVec.zeros(6))) == 2 ** nullity(G)

    def test_unsolvable(self):
        assert enumerate_solutions(path_graph(2), BitVec.from_string("10")) == []

    def test_size_guard(self):
        with pytest.raises(UnsupportedSize):
            enumerate_solutions(empty_graph(21), BitVec.zeros(21))


class TestBruteForceNullity:
    def test_matches_elimination(self):
        for seed in range(30):
            G = random_graph(8, 0.5, seed=seed)
            assert brute_force_nullity(G) == nullity(G)

    def test_empty_graph(self):
        assert brute_force_nullity(empty_graph(0)) == 0


class TestActivationStats:
    def test_single_vertex(self):
        stats = activation_stats(K1)
        assert stats.activated == (1,)
        assert stats.total == 1

    def test_path_two(self):
        stats = activation_stats(path_graph(2))
        assert stats.activated == (1, 1)
        assert stats.total == 2

    def test_star(self):
        stats = activation_stats(star_graph(3))
        assert stats.total == 2
        assert stats.activated == (1, 1, 1, 1)
        assert activation_classes(stats) == [ActivationClass.HALF] * 4

    def test_classes_match_elimination(self):
        for seed in range(30):
            G = random_graph(9, 0.3, seed=seed)
            assert activation_stats(G).classes() == activation_vector(G)

    def test_non_dichotomy_count_is_a_violation(self):
        with pytest.raises(InvariantViolation):
            ActivationStats((1,), 4).classes()

    def test_to_dict(self):
        assert activation_stats(path_graph(3)).to_dict() == {
            "total_solutions": 1,
            "activated": [0, 1, 0],
            "activation": [0, 1, 0],
        }


class TestPiOracle:
    def test_single_vertex(self):
        count, witness = pi_partition_oracle(K1)
        assert count == 1
        assert witness.blocks == ((0,),)

    def test_cycle_six(self):
        count, witness = pi_partition_oracle(cycle_graph(6))
        assert count == 2
        assert verify_pass(cycle_graph(6), witness, claim_minimal=True)

    def test_triangle(self):
        count, witness = pi_partition_oracle(complete_graph(3))
        assert count == 3
        assert witness.blocks == ((0,), (1,), (2,))

    def test_empty_graph(self):
        assert pi_partition_oracle(empty_graph(0))[0] == 0

    def test_size_guard(self):
        with pytest.raises(UnsupportedSize):
            pi_partition_oracle(path_graph(11))


class TestJoinCases:
    def test_two_single_vertices(self):
        assert join_cases(K1, 0, K1, 0) == {
            JoinCase(0, 1, "inverse", "ones"): Fraction(1, 2),
            JoinCase(1, 0, "ones", "inverse"): Fraction(1, 2),
        }

    @pytest.mark.parametrize(
        "G1, u, G2, w",
        [
            (path_graph(3), 0, path_graph(3), 0),
            (path_graph(3), 0, K1, 0),
            (K1, 0, path_graph(3), 0),
            (path_graph(3), 0, path_graph(2), 0),
            (K1, 0, path_graph(2), 1),
            (path_graph(2), 0, K1, 0),
            (path_graph(2), 1, path_graph(5), 0),
            (complete_graph(3), 2, cycle_graph(6), 4),
        ],
    )
    def test_matches_prediction(self, G1, u, G2, w):
        a = int(activation_vector(G1)[u])
        b = int(activation_vector(G2)[w])
        assert join_cases(G1, u, G2, w) == expected_join_cases(a, b)

    def test_cut_edge_never_has_both_endpoints_pushed(self):
        for seed in range(20):
            G1 = random_graph(5, 0.5, seed=seed)
            G2 = random_graph(4, 0.5, seed=seed + 100)
            for case in join_cases(G1, seed % 5, G2, seed % 4):
                assert (case.s_u, case.s_w) != (1, 1)
