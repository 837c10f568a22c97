from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fracmatch.counting import binomial, bounds_M, eval_M, integer_ns_grid, perfect_matching_maximand
from fracmatch.errors import InvalidParameters, NonIntegerNS, SBelowThreshold, SOutOfRange
from oracles import enumerate_terms, pascal_binomial


@pytest.mark.parametrize("a,b,expected", [(5, 2, 10), (1, 2, 0), (5, -1, 0), (0, 0, 1), (7, 7, 1)])
def test_binomial_small(a, b, expected):
    assert binomial(a, b) == expected


def test_binomial_50_25():
    expected = pascal_binomial(50, 25)
    assert expected == 126410606437752
    assert binomial(50, 25) == expected


@given(st.integers(0, 80), st.integers(-3, 85))
def test_binomial_matches_pascal(a, b):
    assert binomial(a, b) == pascal_binomial(a, b)


@pytest.mark.parametrize(
    "n,k,s,M,c,terms",
    [
        (6, 3, Fraction(2, 3), 10, 1, (10, 4, 1)),
        (5, 2, Fraction(3, 5), 4, 1, (4, 1)),
        (4, 2, Fraction(1), 3, 1, (3, 1, 3)),
    ],
)
def test_eval_M_examples(n, k, s, M, c, terms):
    assert list(terms) == enumerate_terms(n, k, s)
    ec = eval_M(n, k, s)
    assert (ec.M, ec.argmax_c, ec.terms) == (M, c, terms)


def test_string_s_accepted():
    assert eval_M(6, 3, "2/3").M == 10
    assert eval_M(5, 2, "0.6").M == 4
    with pytest.raises(NonIntegerNS):
        eval_M(6, 3, "0.6666")


@pytest.mark.parametrize(
    "n,k,s,exc",
    [
        (6, 3, Fraction(1, 2), SBelowThreshold),
        (6, 3, Fraction(1, 3), SBelowThreshold),
        (6, 3, Fraction(7, 6), SOutOfRange),
        (6, 3, Fraction(3, 5), NonIntegerNS),
        (6, 6, Fraction(1), InvalidParameters),
        (6, 0, Fraction(1), InvalidParameters),
    ],
)
def test_eval_M_errors(n, k, s, exc):
    with pytest.raises(exc):
        eval_M(n, k, s)


def test_non_integer_ns_message_points_to_bounds():
    with pytest.raises(NonIntegerNS, match="bounds"):
        eval_M(6, 3, Fraction(3, 5))


admissible = st.integers(2, 14).flatmap(
    lambda n: st.integers(1, n - 1).flatmap(
        lambda k: st.tuples(st.just(n), st.just(k), st.sampled_from(integer_ns_grid(n, k)))
    )
)


@settings(max_examples=150)
@given(admissible)
def test_oracle_equivalence(nks):
    n, k, s = nks
    ec = eval_M(n, k, s)
    assert list(ec.terms) == enumerate_terms(n, k, s)
    assert ec.M == max(ec.terms)
    assert ec.term(ec.argmax_c) == ec.M
    assert all(t < ec.M for t in ec.terms[: ec.argmax_c - 1])
    assert 0 <= ec.M < binomial(n, k)


@pytest.mark.parametrize("n", range(2, 17))
def test_monotone_on_grid(n):
    for k in range(1, n):
        values = [eval_M(n, k, s).M for s in integer_ns_grid(n, k)]
        assert values == sorted(values)


@pytest.mark.parametrize("n", range(2, 13))
def test_s1_is_perfect_matching_maximand(n):
    for k in range(1, n):
        assert eval_M(n, k, 1).M == perfect_matching_maximand(n, k)


def test_large_n_no_enumeration_needed():
    ec = eval_M(200, 7, Fraction(1, 2))
    assert ec.M < binomial(200, 7)
    assert ec.M > 0


class TestBounds:
    @pytest.mark.parametrize(
        "n,k,s,lo,hi",
        [(6, 3, Fraction(3, 5), 0, 10), (7, 2, Fraction(1, 2), 6, 6), (6, 3, Fraction(2, 3), 10, 10)],
    )
    def test_examples(self, n, k, s, lo, hi):
        b = bounds_M(n, k, s)
        assert (b.lower, b.upper) == (lo, hi)

    def test_7_2_half_by_enumeration(self):
        assert max(enumerate_terms(7, 2, Fraction(3, 7))) == 6
        assert max(enumerate_terms(7, 2, Fraction(4, 7))) == 6

    @pytest.mark.parametrize(
        "s,exc", [(Fraction(1, 2), SBelowThreshold), (Fraction(5, 4), SOutOfRange), (Fraction(0), SOutOfRange)]
    )
    def test_errors(self, s, exc):
        with pytest.raises(exc):
            bounds_M(6, 3, s)

    @given(st.integers(2, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))), st.fractions(0, 1, max_denominator=30))
    def test_brackets_and_collapses(self, nk, s):
        n, k = nk
        if not (Fraction(k, n) < s <= 1):
            return
        b = bounds_M(n, k, s)
        assert b.lower <= b.upper
        if (n * s).denominator == 1:
            assert b.lower == b.upper == eval_M(n, k, s).M
