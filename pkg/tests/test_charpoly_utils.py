"""
特征多项式工具测试
"""
import pytest
from hypothesis import given, strategies as st

from census_utils import CountTable
from charpoly_utils import (
    IntPolynomial, arrangement_rank, bounded_chambers, chambers, charpoly_bruteforce,
    charpoly_census, charpoly_from_table, charpoly_graph, compute_charpoly,
    finite_field_count, is_prime
)
from config_utils import LimitExceededError
from rank_utils import PreconditionError


CHI_1 = IntPolynomial((-2, 1))
CHI_2 = IntPolynomial((6, -5, 1))


class TestIntPolynomial:
    def test_text(self):
        assert str(CHI_1) == "t - 2"
        assert str(CHI_2) == "t^2 - 5t + 6"
        assert str(IntPolynomial((0, 0, -3))) == "-3t^2"
        assert str(IntPolynomial(())) == "0"

    def test_trailing_zeros_dropped(self):
        assert IntPolynomial((1, 2, 0, 0)) == IntPolynomial((1, 2))
        assert IntPolynomial((1, 2, 0)).degree == 1

    def test_evaluate(self):
        assert CHI_2(2) == 0 and CHI_2(3) == 0
        assert CHI_2(-1) == 12

    @given(st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=1, max_size=8))
    def test_dict_round_trip(self, coeffs):
        p = IntPolynomial(tuple(coeffs))
        assert IntPolynomial.from_dict(p.to_dict()) == p

    def test_descending(self):
        assert CHI_2.descending() == [1, -5, 6]

    def test_from_table(self):
        table = CountTable(2, {(0, 0): 1, (1, 1): 5, (2, 2): 8, (2, 3): 2})
        assert charpoly_from_table(table) == CHI_2


class TestRoutes:
    @pytest.mark.parametrize("route", [charpoly_bruteforce, charpoly_graph, charpoly_census])
    def test_small_values(self, route):
        assert route(1) == CHI_1
        assert route(2) == CHI_2

    @pytest.mark.parametrize("n", range(1, 5))
    def test_three_routes_agree(self, n):
        census = charpoly_census(n)
        assert charpoly_graph(n) == census
        assert charpoly_bruteforce(n) == census

    @pytest.mark.slow
    def test_three_routes_agree_five(self):
        census = charpoly_census(5)
        assert charpoly_graph(5, jobs=4) == census
        assert charpoly_bruteforce(5, jobs=4) == census

    def test_n3_regression(self):
        p = charpoly_census(3)
        assert p == IntPolynomial((-27, 27, -9, 1))
        assert chambers(p, 3) == 64 and bounded_chambers(p, 3) == 8
        assert p == charpoly_bruteforce(3)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_leading_and_signs(self, n):
        p = charpoly_census(n)
        assert p.degree == n and p.leading == 1
        assert p(0) == p.coeffs[0]
        coeffs = p.descending()
        assert all(c * (-1) ** i >= 0 for i, c in enumerate(coeffs))

    def test_jobs_do_not_change_result(self):
        assert charpoly_bruteforce(3, jobs=3) == charpoly_bruteforce(3)
        assert charpoly_graph(3, jobs=5) == charpoly_graph(3)

    def test_limits(self):
        with pytest.raises(LimitExceededError):
            charpoly_bruteforce(6)
        with pytest.raises(LimitExceededError):
            charpoly_graph(3, limit=2)

    def test_dispatch(self):
        assert compute_charpoly("census", 2) == CHI_2
        with pytest.raises(ValueError):
            compute_charpoly("graph", 2, include_diagonal=True)
        with pytest.raises(ValueError):
            compute_charpoly("bogus", 2)

    def test_diagonal_n1(self):
        # 墙 x=0, x=1/2, x=1
        assert charpoly_bruteforce(1, include_diagonal=True) == IntPolynomial((-3, 1))


class TestChambers:
    def test_small(self):
        assert chambers(CHI_1, 1) == 3
        assert chambers(CHI_2, 2) == 12
        assert bounded_chambers(CHI_1, 1) == 1
        assert bounded_chambers(CHI_2, 2) == 2

    def test_empty_arrangement(self):
        assert bounded_chambers(IntPolynomial((0, 0, 1)), 0) == 1

    def test_wrong_degree(self):
        with pytest.raises(PreconditionError):
            chambers(CHI_2, 3)

    def test_nonpositive(self):
        with pytest.raises(PreconditionError):
            chambers(IntPolynomial((1, 1)), 1)
        with pytest.raises(PreconditionError):
            bounded_chambers(IntPolynomial((-2, 1)), 0)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_full_rank(self, n):
        assert arrangement_rank(n) == n

    @pytest.mark.parametrize("n", range(1, 5))
    def test_invariant_across_routes(self, n):
        routes = [charpoly_census(n), charpoly_graph(n), charpoly_bruteforce(n)]
        assert len({chambers(p, n) for p in routes}) == 1
        assert len({bounded_chambers(p, n) for p in routes}) == 1


class TestFiniteField:
    def test_examples(self):
        assert finite_field_count(1, 7) == 5
        assert finite_field_count(2, 7) == 20

    @pytest.mark.parametrize("n", range(1, 4))
    @pytest.mark.parametrize("q", [5, 7, 11, 13])
    def test_matches_charpoly(self, n, q):
        assert finite_field_count(n, q) == charpoly_census(n)(q)

    @pytest.mark.slow
    @pytest.mark.parametrize("q", [5, 7])
    def test_matches_charpoly_four(self, q):
        assert finite_field_count(4, q) == charpoly_census(4)(q)

    def test_diagonal(self):
        for q in (5, 7):
            assert finite_field_count(2, q, include_diagonal=True) == \
                charpoly_bruteforce(2, include_diagonal=True)(q)

    def test_brute_force_points(self):
        q = 5
        expected = sum(1 for x in range(q) for y in range(q) for z in range(q)
                       if all(v not in (0, 1) for v in (x, y, z))
                       and (x + y) % q != 1 and (x + z) % q != 1 and (y + z) % q != 1)
        assert finite_field_count(3, q) == expected

    @pytest.mark.parametrize("q", [2, 3, 4, 9, 15])
    def test_rejects_bad_q(self, q):
        with pytest.raises(ValueError):
            finite_field_count(2, q)

    def test_budget(self):
        with pytest.raises(LimitExceededError):
            finite_field_count(3, 7, budget=100)

    def test_is_prime(self):
        assert [q for q in range(20) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19]
