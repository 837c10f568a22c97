"""Small-instance verification of the extremal count.

Every check either passes or fails with a witness that can be re-checked
independently (a hypergraph, a certificate, or a weight vector).
"""
from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Iterable, Sequence

from .construct import ThresholdWeights, build_extremal, build_threshold_family, threshold_profile
from .core import Hypergraph, all_k_subsets, check_admissible, format_rational, hypergraph_to_json
from .counting import bounds_M, eval_M
from .errors import EnumerationTooLarge, IntegerNS, NonIntegerNS, TooManyEdges
from .lp import DEFAULT_MAX_EDGES, check_cover, cover_to_json, has_matching, matching_to_json

DEFAULT_LIMIT = 10**6


@dataclass
class Check:
    name: str
    status: str  # "pass" | "fail"
    witness: Any = None

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "witness": self.witness}


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)
    stats: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def add(self, name: str, ok: bool, witness: Any = None) -> None:
        self.checks.append(Check(name, "pass" if ok else "fail", None if ok else witness))

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "stats": self.stats,
        }


def _decide(args):
    h, s = args
    return has_matching(h, s)


def _decide_many(hgs: Iterable[Hypergraph], s: Fraction, jobs: int = 1):
    """Yield decisions in input order; ``jobs > 1`` fans out over processes."""
    if jobs <= 1:
        for h in hgs:
            yield h, has_matching(h, s)
        return
    hgs = list(hgs)
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        yield from zip(hgs, ex.map(_decide, [(h, s) for h in hgs], chunksize=max(1, len(hgs) // (4 * jobs))))


def _integer_ns(n: int, k: int, s) -> tuple[Fraction, int]:
    s = check_admissible(n, k, s)
    if (n * s).denominator != 1:
        raise NonIntegerNS(n, s)
    return s, int(n * s)


def _guard_complete(n: int, k: int, max_edges: int) -> None:
    if math.comb(n, k) > max_edges:
        raise TooManyEdges(f"C({n},{k}) = {math.comb(n, k)} exceeds the edge guard {max_edges}")


def verify_extremal(n: int, k: int, s, jobs: int = 1, max_edges: int = DEFAULT_MAX_EDGES) -> VerifyReport:
    s, _ = _integer_ns(n, k, s)
    _guard_complete(n, k, max_edges)
    ec = eval_M(n, k, s)
    h = build_extremal(n, k, s, ec.argmax_c)
    rep = VerifyReport(stats={"n": n, "k": k, "s": format_rational(s), "M": str(ec.M), "argmax_c": ec.argmax_c})
    rep.add("extremal_size_matches_formula", len(h) == ec.M, {"size": len(h), "hypergraph": hypergraph_to_json(h)})

    d = has_matching(h, s)
    rep.stats["extremal_nu"] = format_rational(d.nu)
    if d.has_matching:
        rep.add("extremal_has_no_matching", False, {"matching": matching_to_json(d.matching)})
    else:
        rep.add("extremal_has_no_matching", bool(check_cover(d.cover, h)), {"cover": cover_to_json(d.cover)})

    extensions = [h.add_edge(e) for e in h.complement_edges()]
    bad = None
    for g, dec in _decide_many(extensions, s, jobs):
        if not dec.has_matching and bad is None:
            bad = {"hypergraph": hypergraph_to_json(g), "cover": cover_to_json(dec.cover)}
    rep.add("every_extension_has_matching", bad is None, bad)
    rep.stats["extensions"] = len(extensions)
    return rep


def exhaustive_tightness(n: int, k: int, s, limit: int = DEFAULT_LIMIT, jobs: int = 1) -> VerifyReport:
    """Check every (M+1)-edge hypergraph has an s-matching, and some M-edge one does not."""
    s, _ = _integer_ns(n, k, s)
    ec = eval_M(n, k, s)
    edges = list(all_k_subsets(n, k))
    total = math.comb(len(edges), ec.M + 1)
    if total > limit:
        raise EnumerationTooLarge(total, limit)
    rep = VerifyReport(stats={"n": n, "k": k, "s": format_rational(s), "M": str(ec.M)})

    fams = (Hypergraph(n, k, tuple(es)) for es in combinations(edges, ec.M + 1))
    bad = None
    count = 0
    for g, dec in _decide_many(fams, s, jobs):
        count += 1
        if not dec.has_matching and bad is None:
            bad = {"hypergraph": hypergraph_to_json(g), "cover": cover_to_json(dec.cover)}
    rep.add("all_M_plus_1_families_have_matching", bad is None, bad)
    rep.stats["enumerated"] = count

    total_m = math.comb(len(edges), ec.M)
    if total_m <= limit:
        found = None
        scanned = 0
        for es in combinations(edges, ec.M):
            scanned += 1
            g = Hypergraph(n, k, es)
            if not has_matching(g, s).has_matching:
                found = g
                break
        rep.add("some_M_family_lacks_matching", found is not None, {"scanned": scanned})
        rep.stats["enumerated_M"] = scanned
        rep.stats["skipped_by_limit"] = 0
    else:
        rep.stats["enumerated_M"] = 0
        rep.stats["skipped_by_limit"] = total_m
    return rep


def randomized_tightness(
    n: int, k: int, s, samples: int, seed: int, jobs: int = 1, max_edges: int = DEFAULT_MAX_EDGES
) -> VerifyReport:
    s, _ = _integer_ns(n, k, s)
    _guard_complete(n, k, max_edges)
    ec = eval_M(n, k, s)
    edges = list(all_k_subsets(n, k))
    rng = random.Random(seed)
    fams = [Hypergraph(n, k, tuple(rng.sample(edges, ec.M + 1))) for _ in range(samples)]
    rep = VerifyReport(stats={"n": n, "k": k, "s": format_rational(s), "M": str(ec.M), "seed": seed})
    ok = 0
    bad = None
    for i, (g, dec) in enumerate(_decide_many(fams, s, jobs)):
        if dec.has_matching:
            ok += 1
        elif bad is None:
            bad = {"sample": i, "hypergraph": hypergraph_to_json(g), "cover": cover_to_json(dec.cover)}
    rep.add("sampled_M_plus_1_families_have_matching", bad is None, bad)
    rep.stats["sampled"] = samples
    rep.stats["with_matching"] = ok
    return rep


def _normalize(nums: Sequence[int]) -> tuple[Fraction, ...]:
    t = sum(nums)
    return tuple(Fraction(a, t) for a in nums)


def _random_weights(rng: random.Random, length: int, denom: int) -> tuple[Fraction, ...]:
    keep = rng.random()
    nums = [rng.randint(0, denom) if rng.random() < keep else 0 for _ in range(length)]
    if not any(nums):
        nums[rng.randrange(length)] = 1
    return _normalize(nums)


def _perturbed_step(rng: random.Random, length: int, c: int, denom: int, spread: int) -> tuple[Fraction, ...]:
    nums = [max(0, (denom if j < c else 0) + rng.randint(-spread, spread)) for j in range(length)]
    if not any(nums):
        nums[0] = 1
    return _normalize(nums)


def threshold_search(n: int, k: int, s, trials: int, seed: int, denom: int = 100, spread: int = 5) -> VerifyReport:
    """Compare the step weights against random and perturbed weight vectors.

    Weight vectors have length ns-1 and are drawn as integers in [0, denom]
    then normalised, so every comparison stays exact.
    """
    s, m = _integer_ns(n, k, s)
    ec = eval_M(n, k, s)
    L = m - 1
    rep = VerifyReport(stats={"n": n, "k": k, "s": format_rational(s), "M": str(ec.M), "seed": seed})

    step = []
    for c in range(1, m):
        w = ThresholdWeights.uniform(c, n, k, s)
        step.append((c, threshold_profile(n, k, s, w)))
    best_c, best = max(step, key=lambda t: (t[1].above, -t[0]))
    rep.add(
        "step_weights_attain_M",
        best.above == ec.M,
        {"best_step_count": str(best.above), "best_c": best_c, "M": str(ec.M)},
    )
    rep.stats["best_c"] = best_c
    rep.stats["best_step_count"] = str(best.above)
    rep.stats["best_step_boundary_subsets"] = best.on_boundary
    rep.stats["best_step_min_gap"] = None if best.min_gap is None else format_rational(best.min_gap)

    rng = random.Random(seed)
    boundary = 0
    exceed = None
    top_random = 0
    for kind in ("random", "perturbed"):
        for _ in range(trials):
            if kind == "random":
                alpha = _random_weights(rng, L, denom)
            else:
                alpha = _perturbed_step(rng, L, best_c, denom, spread)
            prof = threshold_profile(n, k, s, ThresholdWeights.for_instance(alpha, n, k, s))
            boundary += prof.on_boundary > 0
            top_random = max(top_random, prof.above)
            if prof.above > ec.M and exceed is None:
                exceed = {"kind": kind, "alpha": [format_rational(a) for a in alpha], "count": str(prof.above)}
    rep.add("no_weights_exceed_M", exceed is None, exceed)
    rep.stats["trials"] = trials
    rep.stats["best_sampled_count"] = str(top_random)
    rep.stats["boundary_touching_weights"] = boundary
    return rep


def cross_check_bounds(n: int, k: int, s) -> VerifyReport:
    """For non-integer ns: lower <= best step-family count at s <= upper.

    Each step family at s is checked by LP to have no s-matching, so its size
    is a genuine lower bound for the true maximum.
    """
    s = check_admissible(n, k, s)
    if (n * s).denominator == 1:
        raise IntegerNS(n, s)
    b = bounds_M(n, k, s)
    rep = VerifyReport(
        stats={"n": n, "k": k, "s": format_rational(s), "lower": str(b.lower), "upper": str(b.upper)}
    )
    rep.add("interval_ordered", b.lower <= b.upper, {"lower": str(b.lower), "upper": str(b.upper)})

    best = 0
    best_c = None
    lp_bad = None
    for c in range(1, math.ceil(n * s)):
        fam = build_threshold_family(n, k, s, ThresholdWeights.uniform(c, n, k, s))
        d = has_matching(fam.family, s)
        if d.has_matching and lp_bad is None:
            lp_bad = {"c": c, "hypergraph": hypergraph_to_json(fam.family), "matching": matching_to_json(d.matching)}
        if fam.count > best:
            best, best_c = fam.count, c
    rep.add("step_families_have_no_matching", lp_bad is None, lp_bad)
    rep.add(
        "best_step_within_bounds",
        b.lower <= best <= b.upper,
        {"best": str(best), "lower": str(b.lower), "upper": str(b.upper)},
    )
    rep.stats["best_step_count"] = str(best)
    rep.stats["best_c"] = best_c
    return rep
