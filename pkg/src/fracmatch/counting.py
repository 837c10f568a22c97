"""Closed-form extremal counts.

For integer ``m = n*s`` the largest k-uniform hypergraph on [n] without a
fractional matching of cardinality s has

    M(s, n, k) = max_{1 <= c <= m-1}  sum_{i > kc/m} C(c, i) C(n-c, k-i)

edges. The strict comparison ``i > kc/m`` is done as ``i*m > k*c``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import check_admissible, parse_rational
from .errors import NonIntegerNS


def binomial(a: int, b: int) -> int:
    """C(a, b) with the convention C(a, b) = 0 outside 0 <= b <= a."""
    if b < 0 or b > a or a < 0:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class ExtremalCount:
    M: int
    argmax_c: int
    terms: tuple[int, ...]  # terms[c - 1] is the value at c

    def term(self, c: int) -> int:
        return self.terms[c - 1]


@dataclass(frozen=True)
class CountBounds:
    lower: int
    upper: int


def family_term(n: int, k: int, m: int, c: int) -> int:
    """Number of k-subsets x of [n] with |x & [c]| > k*c/m."""
    return sum(binomial(c, i) * binomial(n - c, k - i) for i in range(k + 1) if i * m > k * c)


def _terms(n: int, k: int, m: int) -> tuple[int, ...]:
    return tuple(family_term(n, k, m, c) for c in range(1, m))


def eval_M(n: int, k: int, s) -> ExtremalCount:
    s = check_admissible(n, k, s)
    ns = n * s
    if ns.denominator != 1:
        raise NonIntegerNS(n, s)
    terms = _terms(n, k, int(ns))
    M = max(terms)
    return ExtremalCount(M=M, argmax_c=terms.index(M) + 1, terms=terms)


def _max_at(n: int, k: int, m: int) -> int:
    # m <= k means s' <= k/n: only the empty hypergraph is matching-free
    if m <= k:
        return 0
    return max(_terms(n, k, m))


def bounds_M(n: int, k: int, s) -> CountBounds:
    """Interval for M(s, n, k) from the neighbouring integer grid points.

    M is nondecreasing in s, so the values at floor(ns)/n and ceil(ns)/n
    bracket it.
    """
    s = check_admissible(n, k, s)
    ns = n * s
    lo = math.floor(ns)
    hi = math.ceil(ns)
    return CountBounds(lower=_max_at(n, k, lo), upper=_max_at(n, k, hi))


def integer_ns_grid(n: int, k: int) -> list[Fraction]:
    """All s in (k/n, 1] with n*s an integer."""
    return [Fraction(m, n) for m in range(k + 1, n + 1)]


def perfect_matching_maximand(n: int, k: int) -> int:
    """max over 1 <= a <= n-1 of sum_{i > ka/n} C(a, i) C(n-a, k-i)."""
    return max(
        sum(binomial(a, i) * binomial(n - a, k - i) for i in range(k + 1) if i * n > k * a)
        for a in range(1, n)
    )


def is_integer_ns(n: int, s) -> bool:
    return (n * parse_rational(s)).denominator == 1
