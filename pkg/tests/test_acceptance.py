"""Acceptance criteria, one test each, with their time budgets.

Run ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion is
printed in the terminal summary) or ``python tests/test_acceptance.py``.
"""
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES  # noqa: E402
from fracmatch.core import Hypergraph, all_k_subsets, relabel  # noqa: E402
from fracmatch.counting import bounds_M, eval_M, integer_ns_grid  # noqa: E402
from fracmatch.lp import check_certificates, matching_number  # noqa: E402
from fracmatch.verify import (  # noqa: E402
    cross_check_bounds,
    exhaustive_tightness,
    threshold_search,
    verify_extremal,
)
from oracles import enumerate_terms, enumerate_perfect_maximand  # noqa: E402


class criterion:
    def __init__(self, number, title, budget):
        self.number, self.title, self.budget = number, title, budget

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        dt = time.perf_counter() - self.t0
        ok = exc_type is None and dt < self.budget
        ACCEPTANCE_LINES.append(
            f"[{'PASS' if ok else 'FAIL'}] {self.number}. {self.title} ({dt:.2f}s / budget {self.budget}s)"
        )
        if exc_type is None:
            assert dt < self.budget, f"criterion {self.number} took {dt:.2f}s, budget {self.budget}s"
        return False


def test_1_formula_values():
    with criterion(1, "formula values match brute force", 1.0):
        for n, k, s, M in [(6, 3, Fraction(2, 3), 10), (5, 2, Fraction(3, 5), 4), (4, 2, Fraction(1), 3)]:
            ec = eval_M(n, k, s)
            assert ec.M == M
            assert list(ec.terms) == enumerate_terms(n, k, s)
            assert max(enumerate_terms(n, k, s)) == M


def test_2_perfect_matching_consistency():
    with criterion(2, "s = 1 agrees with the perfect-matching maximand, n <= 12", 10.0):
        for n in range(2, 13):
            for k in range(1, n):
                assert eval_M(n, k, 1).M == enumerate_perfect_maximand(n, k), (n, k)


def test_3_extremal_verification():
    with criterion(3, "verify_extremal on every admissible instance with n <= 8", 300.0):
        count = 0
        for n in range(2, 9):
            for k in range(1, n):
                for s in integer_ns_grid(n, k):
                    rep = verify_extremal(n, k, s)
                    assert rep.passed, rep.to_json()
                    count += 1
        assert count == sum(n - k for n in range(2, 9) for k in range(1, n))


def test_4_exhaustive_tightness():
    with criterion(4, "exhaustive tightness for (4,2,1) and (5,2,3/5)", 60.0):
        a = exhaustive_tightness(4, 2, 1, 10**6)
        b = exhaustive_tightness(5, 2, Fraction(3, 5), 10**6)
        assert a.passed and a.stats["enumerated"] == 15
        assert b.passed and b.stats["enumerated"] == 252


def test_5_threshold_optimality():
    with criterion(5, "1000 random weight vectors never beat the step weights", 120.0):
        for n, k, s in [(6, 3, Fraction(2, 3)), (5, 2, Fraction(3, 5)), (7, 2, Fraction(3, 7)), (8, 4, Fraction(5, 8))]:
            rep = threshold_search(n, k, s, trials=1000, seed=0)
            assert rep.passed, rep.to_json()
            assert rep.stats["best_step_count"] == str(eval_M(n, k, s).M)


def _random_hypergraph(rng, max_n=10):
    n = rng.randint(2, max_n)
    k = rng.randint(1, n - 1)
    edges = list(all_k_subsets(n, k))
    return Hypergraph(n, k, tuple(rng.sample(edges, rng.randint(0, len(edges)))))


def test_6_lp_certification():
    with criterion(6, "LP certificates, duality, monotonicity, relabeling", 300.0):
        rng = random.Random(20261015)
        for _ in range(1000):
            h = _random_hypergraph(rng)
            r = matching_number(h)
            assert check_certificates(r, h), check_certificates(r, h).reason
            assert r.primal.cardinality == r.dual.value == r.nu

        for _ in range(200):
            h = _random_hypergraph(rng, max_n=8)
            rest = h.complement_edges()
            if not rest:
                continue
            g = h.add_edge(rng.choice(rest))
            assert matching_number(g).nu >= matching_number(h).nu

        for _ in range(200):
            h = _random_hypergraph(rng, max_n=8)
            perm = list(range(1, h.n + 1))
            rng.shuffle(perm)
            assert matching_number(relabel(h, perm)).nu == matching_number(h).nu


def _non_integer_grid(n, k):
    out = set()
    for q in range(2, 13):
        for p in range(1, q):
            s = Fraction(p, q)
            if Fraction(k, n) < s < 1 and (n * s).denominator != 1:
                out.add(s)
    return sorted(out)


def test_7_bounds_sandwich():
    with criterion(7, "bounds sandwich on a grid with n <= 8; (7,2,1/2) pinned at 6", 60.0):
        for n in range(2, 9):
            for k in range(1, n):
                for s in integer_ns_grid(n, k):
                    b = bounds_M(n, k, s)
                    assert b.lower == b.upper == eval_M(n, k, s).M
                for s in _non_integer_grid(n, k):
                    b = bounds_M(n, k, s)
                    assert b.lower <= b.upper
                    assert cross_check_bounds(n, k, s).passed, (n, k, s)
        b = bounds_M(7, 2, Fraction(1, 2))
        assert b.lower == b.upper == 6


if __name__ == "__main__":
    failed = False
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed = True
    print("\n".join(ACCEPTANCE_LINES))
    sys.exit(1 if failed else 0)
