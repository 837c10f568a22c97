"""Threshold families {x : sum_j alpha_j x_j > k/(sn)} and their extremal step cases."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .core import Hypergraph, all_k_subsets, check_admissible, parse_rational, require_enumerable
from .counting import binomial
from .errors import COutOfRange, InvalidParameters, NegativeWeight, NonIntegerNS, WeightsNotNormalized


def threshold_value(n: int, k: int, s) -> Fraction:
    return Fraction(k) / (parse_rational(s) * n)


@dataclass(frozen=True)
class ThresholdWeights:
    """Nonnegative weights on vertices 1..len(alpha) summing to one, plus the cut k/(sn)."""

    alpha: tuple[Fraction, ...]
    threshold: Fraction

    def __post_init__(self):
        alpha = tuple(parse_rational(a) for a in self.alpha)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "threshold", parse_rational(self.threshold))
        for j, a in enumerate(alpha, start=1):
            if a < 0:
                raise NegativeWeight(f"alpha_{j} = {a} is negative")
        if sum(alpha, Fraction(0)) != 1:
            raise WeightsNotNormalized(f"weights sum to {sum(alpha, Fraction(0))}, not 1")

    @classmethod
    def for_instance(cls, alpha: Sequence, n: int, k: int, s) -> "ThresholdWeights":
        return cls(tuple(alpha), threshold_value(n, k, s))

    @classmethod
    def uniform(cls, c: int, n: int, k: int, s) -> "ThresholdWeights":
        return cls.for_instance([Fraction(1, c)] * c, n, k, s)

    @property
    def support(self) -> int:
        return sum(1 for a in self.alpha if a)


@dataclass(frozen=True)
class ThresholdFamily:
    weights: ThresholdWeights
    family: Hypergraph
    count: int


@dataclass(frozen=True)
class ThresholdProfile:
    """Counts of k-subsets strictly above and exactly on the threshold.

    ``min_gap`` is the smallest |sum alpha_j x_j - threshold| over all k-subsets
    not on the boundary (``None`` if every subset is on it).
    """

    above: int
    on_boundary: int
    min_gap: Fraction | None


def _validate(n: int, k: int, s, w: ThresholdWeights) -> Fraction:
    s = check_admissible(n, k, s)
    require_enumerable(n)
    if len(w.alpha) > n:
        raise InvalidParameters(f"{len(w.alpha)} weights for only {n} vertices")
    if w.threshold != threshold_value(n, k, s):
        raise InvalidParameters(f"threshold {w.threshold} != k/(sn) = {threshold_value(n, k, s)}")
    return s


def _integer_form(w: ThresholdWeights) -> tuple[list[int], Fraction]:
    # common denominator D: alpha_j = a_j / D, compare sum a_j x_j with D*threshold
    D = math.lcm(*(a.denominator for a in w.alpha)) if w.alpha else 1
    return [int(a * D) for a in w.alpha], w.threshold * D


def build_extremal(n: int, k: int, s, c: int) -> Hypergraph:
    """All k-subsets x of [n] with |x & [c]| > kc/(ns)."""
    s = check_admissible(n, k, s)
    require_enumerable(n)
    ns = n * s
    if ns.denominator != 1:
        raise NonIntegerNS(n, s)
    m = int(ns)
    if not (isinstance(c, int) and 1 <= c <= m - 1):
        raise COutOfRange(f"c = {c!r} outside [1, {m - 1}]")
    edges = []
    for e in all_k_subsets(n, k):
        inter = sum(1 for v in e if v <= c)
        if inter * m > k * c:
            edges.append(e)
    return Hypergraph(n, k, tuple(edges))


def build_threshold_family(n: int, k: int, s, w: ThresholdWeights) -> ThresholdFamily:
    _validate(n, k, s, w)
    ints, cut = _integer_form(w)
    L = len(ints)
    edges = [e for e in all_k_subsets(n, k) if sum(ints[v - 1] for v in e if v <= L) > cut]
    fam = Hypergraph(n, k, tuple(edges))
    return ThresholdFamily(weights=w, family=fam, count=len(fam))


def threshold_profile(n: int, k: int, s, w: ThresholdWeights) -> ThresholdProfile:
    """Stream over subsets of the weighted coordinates only.

    A k-subset meeting the weighted prefix [L] in T is determined by T and
    any (k-|T|)-subset of the remaining n-L vertices, so each T contributes
    C(n-L, k-|T|) subsets with the same weight sum.
    """
    _validate(n, k, s, w)
    ints, cut = _integer_form(w)
    L = len(ints)
    rest = n - L
    above = on = 0
    gap = None
    for i in range(0, min(k, L) + 1):
        mult = binomial(rest, k - i)
        if mult == 0:
            continue
        for T in combinations(ints, i):
            t = sum(T)
            if t > cut:
                above += mult
            elif t == cut:
                on += mult
            if t != cut:
                d = abs(t - cut)
                if gap is None or d < gap:
                    gap = d
    D = math.lcm(*(a.denominator for a in w.alpha)) if w.alpha else 1
    return ThresholdProfile(above=above, on_boundary=on, min_gap=None if gap is None else gap / D)


def count_threshold(n: int, k: int, s, w: ThresholdWeights) -> int:
    """N(alpha): number of k-subsets strictly above the threshold."""
    return threshold_profile(n, k, s, w).above
