"""
超平面排列工具测试
"""
import pytest
from hypothesis import given

from arrangement_utils import (
    CONFLICT, Subarrangement, Wall, build_jn, centrality_agrees, classify_linear,
    enumerate_subarrangements, first_centrality_mismatch, from_colored_graph,
    is_central_linear, linear_system, rank_linear, to_colored_graph
)
from graph_utils import ColoredGraph, is_central
from rank_utils import build_cincidence, integer_rank, rank_formula
from strategies import colored_graphs


def sub(n, *walls):
    return Subarrangement.build(n, walls)


H = Wall.type_i


def zero(i):
    return Wall.type_ii(i, 0)


def one(i):
    return Wall.type_ii(i, 1)


class TestWalls:
    def test_type_i_canonical(self):
        assert Wall.type_i(3, 1) == Wall.type_i(1, 3)
        with pytest.raises(ValueError):
            Wall.type_i(2, 2)

    def test_type_ii_value(self):
        with pytest.raises(ValueError):
            Wall.type_ii(1, 2)

    def test_equations(self):
        assert H(1, 3).equation(3) == ((1, 0, 1), 1)
        assert one(2).equation(2) == ((0, 1), 1)
        assert Wall.diagonal(1).equation(2) == ((2, 0), 1)

    def test_validate(self):
        with pytest.raises(ValueError):
            Subarrangement(2, frozenset({H(1, 3)}))

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            Subarrangement.build(2, [zero(1), zero(1)])


class TestBuildJn:
    def test_n1(self):
        assert build_jn(1) == [zero(1), one(1)]

    @pytest.mark.parametrize("n, count", [(2, 5), (3, 9), (4, 14)])
    def test_counts(self, n, count):
        walls = build_jn(n)
        assert len(walls) == count == len(set(walls))

    def test_order(self):
        assert build_jn(2) == [H(1, 2), zero(1), one(1), zero(2), one(2)]

    def test_diagonal(self):
        walls = build_jn(2, include_diagonal=True)
        assert walls[-2:] == [Wall.diagonal(1), Wall.diagonal(2)]


class TestToColoredGraph:
    def test_edge_and_color(self):
        g = to_colored_graph(sub(2, H(1, 2), one(1)))
        assert g == ColoredGraph.build(2, (1, 0), [(1, 2)])

    def test_conflict(self):
        assert to_colored_graph(sub(1, zero(1), one(1))) is CONFLICT

    def test_empty(self):
        assert to_colored_graph(sub(3)) == ColoredGraph.build(3)

    def test_zero_wall_is_negative(self):
        assert to_colored_graph(sub(1, zero(1))).colors == (-1,)

    def test_diagonal_has_no_graph(self):
        with pytest.raises(ValueError):
            to_colored_graph(sub(2, Wall.diagonal(1)))

    @given(colored_graphs(max_n=6))
    def test_round_trip(self, g):
        assert to_colored_graph(from_colored_graph(g)) == g


class TestLinear:
    def test_parallel_walls(self):
        assert not is_central_linear(sub(1, zero(1), one(1)))

    def test_explicit_solution(self):
        s = sub(2, H(1, 2), zero(1), one(2))
        assert is_central_linear(s)
        assert rank_linear(s) == 2

    def test_explicit_contradiction(self):
        assert not is_central_linear(sub(2, H(1, 2), zero(1), zero(2)))

    def test_ranks(self):
        assert rank_linear(sub(2)) == 0
        assert rank_linear(sub(2, H(1, 2))) == 1

    def test_diagonal_walls(self):
        assert is_central_linear(sub(2, Wall.diagonal(1), H(1, 2)))
        assert not is_central_linear(sub(1, Wall.diagonal(1), zero(1)))

    def test_triangle_of_colored_vertex(self):
        s = sub(3, H(1, 2), H(2, 3), H(1, 3), one(1))
        assert not is_central_linear(s)
        assert classify_linear(s) == (False, 3)

    @given(colored_graphs(max_n=6))
    def test_matrix_matches_cincidence(self, g):
        rows, _ = linear_system(from_colored_graph(g))
        nonzero = [row for row in build_cincidence(g).rows if any(row)]
        assert sorted(tuple(abs(x) for x in row) for row in rows) == \
            sorted(tuple(abs(x) for x in row) for row in nonzero)
        assert integer_rank(rows) == rank_formula(g)

    def test_rank_monotone(self):
        walls = build_jn(3)
        for mask, s in enumerate_subarrangements(3):
            r = rank_linear(s)
            assert r <= min(len(s), 3)
            for j in range(len(walls)):
                if not mask >> j & 1:
                    bigger = Subarrangement(3, s.walls | {walls[j]})
                    assert rank_linear(bigger) >= r


class TestCorrespondence:
    def test_agrees_example(self):
        assert centrality_agrees(sub(2, H(1, 2), zero(1), one(2)))
        assert centrality_agrees(sub(1, zero(1), one(1)))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_exhaustive_small(self, n):
        assert first_centrality_mismatch(n, 0, 1 << len(build_jn(n))) is None

    def test_exhaustive_four(self):
        assert first_centrality_mismatch(4, 0, 1 << 14) is None

    def test_graph_and_linear_detail(self):
        for _, s in enumerate_subarrangements(2):
            g = to_colored_graph(s)
            central, rank = classify_linear(s)
            if g is CONFLICT:
                assert not central
            else:
                assert is_central(g) == central
                assert rank_formula(g) == rank
