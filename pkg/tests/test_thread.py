"""Tests for thread.py — dense threads, level graphs, G_1 and obstructions."""

import random

import pytest

from descol.models import DenseThread, Lasso
from descol.seqspace import normalize
from descol.solver import chromatic_number, structure_checks
from descol.thread import (
    achievable_length, bitstring, canonical_thread, check_obstruction, g1_adjacent,
    g1_clique, g1_graph, level_graph, prefix_obstruction, random_thread, validate_thread,
    vertex_of,
)


def _threads(depth):
    rng = random.Random(4)
    return [canonical_thread(depth)] + [random_thread(depth, rng) for _ in range(3)]


class TestCanonicalThread:
    def test_depth_three(self):
        assert canonical_thread(3).rows == ("", "0", "10")

    def test_depth_one(self):
        assert canonical_thread(1).rows == ("",)

    def test_length_lex_then_padding(self):
        rows = canonical_thread(8).rows
        assert rows[3] == "000"
        assert rows[4] == "0100"
        assert rows[6] == "110000"
        assert rows[7] == "0000000"

    def test_bad_depth(self):
        with pytest.raises(ValueError):
            canonical_thread(0)


class TestValidateThread:
    def test_canonical_is_valid(self):
        for depth in range(1, 20):
            result = validate_thread(canonical_thread(depth))
            assert result["valid"], result
            assert result["undominated"] == []

    def test_single_branch(self):
        result = validate_thread(DenseThread(("", "0", "00", "000")))
        assert not result["valid"]
        assert "1" in result["undominated"]
        assert result["errors"] == []

    def test_wrong_row_length(self):
        result = validate_thread(DenseThread(("", "0", "101")))
        assert not result["valid"]
        assert any("row 2" in e for e in result["errors"])

    def test_non_binary_row(self):
        result = validate_thread(DenseThread(("", "2")))
        assert any("binary" in e for e in result["errors"])

    def test_pending_strings_only_need_depth(self):
        result = validate_thread(canonical_thread(4))
        assert result["achievable_length"] == 1
        assert "11" in result["pending"]

    def test_random_threads_are_valid(self):
        rng = random.Random(1)
        for depth in (1, 5, 12, 30):
            assert validate_thread(random_thread(depth, rng))["valid"]

    def test_achievable_length(self):
        assert [achievable_length(d) for d in (1, 2, 3, 6, 7, 15)] == [0, 0, 1, 1, 2, 3]

    def test_uncovered_string_past_bound_is_pending(self):
        # depth 6 never reaches "11" in length-lex order
        result = validate_thread(canonical_thread(6))
        assert result["achievable_length"] == 1
        assert result["valid"]
        assert result["undominated"] == []
        assert "11" in result["pending"]

    def test_bound_ignores_early_coverage(self):
        # rows 2 to 5 already cover every length-2 string
        t = DenseThread(("", "0", "10", "110", "0100", "00000"))
        result = validate_thread(t)
        assert result["valid"]
        assert result["achievable_length"] == 1
        assert not any(len(a) == 2 for a in result["pending"])


class TestBitstrings:
    def test_msb_first(self):
        assert bitstring(1, 3) == "001"
        assert vertex_of("100") == 4

    def test_empty(self):
        assert bitstring(0, 0) == ""
        assert vertex_of("") == 0


class TestLevelGraph:
    def test_level_one(self):
        for t in _threads(3):
            assert level_graph(t, 1).graph.sorted_edges() == [(0, 1)]

    def test_level_two_canonical(self):
        g = level_graph(canonical_thread(3), 2).graph
        expected = {(vertex_of("00"), vertex_of("10")), (vertex_of("01"), vertex_of("11")),
                    (vertex_of("00"), vertex_of("01"))}
        assert g.edges == frozenset(expected)

    def test_level_zero(self):
        level = level_graph(canonical_thread(1), 0)
        assert level.graph.vertex_count == 1
        assert level.graph.edge_count == 0

    @pytest.mark.parametrize("k", range(1, 11))
    def test_levels_are_trees(self, k):
        for t in _threads(11):
            g = level_graph(t, k).graph
            assert g.edge_count == 2 ** k - 1
            s = structure_checks(g)
            assert s["acyclic"] and s["connected"] and s["bipartite"]

    @pytest.mark.parametrize("k", range(1, 11))
    def test_levels_have_chi_two(self, k):
        assert chromatic_number(level_graph(canonical_thread(11), k).graph).chi == 2

    def test_neighbours_differ_in_one_coordinate(self):
        for t in _threads(9):
            for k in range(1, 9):
                for u, v in level_graph(t, k).graph.edges:
                    assert bin(u ^ v).count("1") == 1

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            level_graph(canonical_thread(3), 3)

    def test_bad_row_rejected(self):
        with pytest.raises(ValueError, match="row 1"):
            level_graph(DenseThread(("", "01", "00")), 2)


class TestG1:
    def test_differ_once(self):
        assert g1_adjacent(Lasso(2, (), (0,)), normalize(2, (1,), (0,)))

    def test_out_of_phase(self):
        assert not g1_adjacent(Lasso(2, (), (0, 1)), Lasso(2, (), (1, 0)))

    def test_irreflexive(self):
        x = Lasso(2, (1,), (0,))
        assert not g1_adjacent(x, x)

    def test_alphabet(self):
        with pytest.raises(ValueError, match="alphabet"):
            g1_adjacent(Lasso(3, (), (0,)), Lasso(3, (), (1,)))

    def test_clique(self):
        points = g1_clique(3)
        assert len(set(points)) == 8
        g = g1_graph(points)
        assert g.edge_count == 8 * 7 // 2

    def test_graph_on_mixed_points(self):
        points = [Lasso(2, (), (0,)), Lasso(2, (), (1,)), normalize(2, (1,), (0,))]
        assert g1_graph(points).sorted_edges() == [(0, 2)]


class TestPrefixObstruction:
    def test_g0_depth_zero(self):
        w = prefix_obstruction("g0", 0, 2)
        assert (w.first, w.second, w.level) == ("0", "1", 1)
        assert check_obstruction(w)

    def test_g0_depth_two(self):
        t = canonical_thread(4)
        w = prefix_obstruction("g0", 2, 3, thread=t)
        assert w.first == t.rows[2] + "0"
        assert w.second == t.rows[2] + "1"
        assert w.level == 3
        assert check_obstruction(w, thread=t)

    def test_g1_depth_three(self):
        w = prefix_obstruction("g1", 3, 2)
        assert w.first == Lasso(2, (), (0,))
        assert w.second == Lasso(2, (0, 0, 0, 1), (0,))
        assert check_obstruction(w)

    @pytest.mark.parametrize("d", range(9))
    def test_every_depth(self, d):
        for t in _threads(10):
            assert check_obstruction(prefix_obstruction("g0", d, 2, thread=t), thread=t)
        assert check_obstruction(prefix_obstruction("g1", d, 5))

    def test_shallow_thread(self):
        with pytest.raises(ValueError, match="too shallow"):
            prefix_obstruction("g0", 3, 2, thread=canonical_thread(4))

    def test_bad_arguments(self):
        with pytest.raises(ValueError, match="family"):
            prefix_obstruction("g2", 1, 2)
        with pytest.raises(ValueError, match="colour count"):
            prefix_obstruction("g1", 1, 0)
        with pytest.raises(ValueError, match="depth"):
            prefix_obstruction("g1", -1, 2)

    def test_wrong_pair_fails_check(self):
        w = prefix_obstruction("g0", 1, 2)
        bad = type(w)("g0", 1, 2, "00", "11", level=2)
        assert not check_obstruction(bad)
