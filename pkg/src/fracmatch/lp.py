"""Exact fractional-matching LP with primal and dual certificates.

A fractional matching of cardinality s puts nonnegative weights on edges,
summing to s, such that every vertex carries total weight at most k/n. The
fractional matching number ``nu`` is the largest attainable total. It is
computed by a dense-tableau primal simplex over Fractions with Bland's rule,
on the rescaled packing problem

    max  sum_e w_e   s.t.  sum_{e containing v} w_e <= 1,   w >= 0

with ``nu = (k/n) * opt``. The origin is feasible so the slack basis is a
valid start. The optimal reduced costs of the slacks are a fractional vertex
cover ``y`` (every edge has sum_{v in e} y_v >= 1) of value ``(k/n) * sum y``,
which equals ``nu`` by strong duality.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .core import Edge, Hypergraph, format_rational, parse_rational, require_enumerable
from .errors import InvalidRational, MalformedEdge, SOutOfRange, TooManyEdges

DEFAULT_MAX_EDGES = 5000


@dataclass(frozen=True)
class FractionalMatching:
    weights: dict[Edge, Fraction]  # zero weights omitted
    cardinality: Fraction


@dataclass(frozen=True)
class CoverCertificate:
    prices: dict[int, Fraction]  # zero prices omitted
    value: Fraction


@dataclass(frozen=True)
class LpResult:
    nu: Fraction
    primal: FractionalMatching
    dual: CoverCertificate
    pivots: int = field(default=0, compare=False)


@dataclass(frozen=True)
class MatchingDecision:
    has_matching: bool
    s: Fraction
    nu: Fraction
    matching: FractionalMatching | None = None
    cover: CoverCertificate | None = None


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: str = "ok"

    def __bool__(self):
        return self.ok


def _solve_packing(n: int, edges: tuple[Edge, ...]) -> tuple[list[Fraction], list[Fraction], Fraction, int]:
    """Return (w, y, opt, pivots) for max 1.w s.t. Aw <= 1, w >= 0."""
    m = len(edges)
    width = m + n + 1
    rows: list[list] = []
    for v in range(1, n + 1):
        row = [0] * width
        for j, e in enumerate(edges):
            if v in e:
                row[j] = 1
        row[m + v - 1] = 1
        row[-1] = 1
        rows.append(row)
    obj = [-1] * m + [0] * (n + 1)
    basis = [m + i for i in range(n)]
    pivots = 0
    while True:
        # Bland: lowest-index improving column
        col = next((j for j in range(m + n) if obj[j] < 0), None)
        if col is None:
            break
        best = None
        for i, row in enumerate(rows):
            a = row[col]
            if a > 0:
                ratio = Fraction(row[-1]) / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        # packing LPs are bounded (w_e <= 1), so a leaving row always exists
        assert best is not None, "unbounded packing LP"
        r = best[1]
        prow = rows[r]
        p = prow[col]
        if p != 1:
            prow = [Fraction(x) / p if x else 0 for x in prow]
            rows[r] = prow
        nz = [j for j, x in enumerate(prow) if x]
        for i, row in enumerate(rows):
            f = row[col]
            if i != r and f:
                for j in nz:
                    row[j] = row[j] - f * prow[j]
        f = obj[col]
        for j in nz:
            obj[j] = obj[j] - f * prow[j]
        basis[r] = col
        pivots += 1
    w = [Fraction(0)] * m
    for i, b in enumerate(basis):
        if b < m:
            w[b] = Fraction(rows[i][-1])
    y = [Fraction(obj[m + i]) for i in range(n)]
    return w, y, Fraction(obj[-1]), pivots


def matching_number(h: Hypergraph, max_edges: int = DEFAULT_MAX_EDGES) -> LpResult:
    require_enumerable(h.n)
    if len(h.edges) > max_edges:
        raise TooManyEdges(f"{len(h.edges)} edges exceed the guard of {max_edges}")
    cap = Fraction(h.k, h.n)
    w, y, opt, pivots = _solve_packing(h.n, h.edges)
    weights = {e: cap * x for e, x in zip(h.edges, w) if x}
    prices = {v: p for v, p in enumerate(y, start=1) if p}
    nu = cap * opt
    primal = FractionalMatching(weights, sum(weights.values(), Fraction(0)))
    dual = CoverCertificate(prices, cap * sum(prices.values(), Fraction(0)))
    return LpResult(nu=nu, primal=primal, dual=dual, pivots=pivots)


def has_matching(h: Hypergraph, s, max_edges: int = DEFAULT_MAX_EDGES) -> MatchingDecision:
    """Decide whether h has a fractional matching of cardinality exactly s.

    Feasible totals form the interval [0, nu], so YES iff nu >= s; the
    witness is the optimal matching scaled by s/nu. NO comes with the optimal
    cover, whose value nu < s.
    """
    s = parse_rational(s)
    if s <= 0 or s > 1:
        raise SOutOfRange(s)
    r = matching_number(h, max_edges)
    if r.nu >= s:
        scale = s / r.nu
        weights = {e: x * scale for e, x in r.primal.weights.items()}
        return MatchingDecision(True, s, r.nu, matching=FractionalMatching(weights, s))
    return MatchingDecision(False, s, r.nu, cover=r.dual)


def check_matching(m: FractionalMatching, h: Hypergraph) -> CertificateCheck:
    cap = Fraction(h.k, h.n)
    load = {v: Fraction(0) for v in range(1, h.n + 1)}
    total = Fraction(0)
    for e, x in m.weights.items():
        if e not in h:
            return CertificateCheck(False, f"primal weight on non-edge {list(e)}")
        if x < 0:
            return CertificateCheck(False, f"negative primal weight on {list(e)}")
        for v in e:
            load[v] += x
        total += x
    for v, a in load.items():
        if a > cap:
            return CertificateCheck(False, f"vertex {v} load {a} exceeds {cap}")
    if total != m.cardinality:
        return CertificateCheck(False, f"weights sum to {total}, claimed {m.cardinality}")
    return CertificateCheck(True)


def check_cover(c: CoverCertificate, h: Hypergraph) -> CertificateCheck:
    cap = Fraction(h.k, h.n)
    for v, p in c.prices.items():
        if not 1 <= v <= h.n:
            return CertificateCheck(False, f"price on unknown vertex {v}")
        if p < 0:
            return CertificateCheck(False, f"negative price on vertex {v}")
    for e in h.edges:
        if sum((c.prices.get(v, 0) for v in e), Fraction(0)) < 1:
            return CertificateCheck(False, f"edge {list(e)} priced below 1")
    if cap * sum(c.prices.values(), Fraction(0)) != c.value:
        return CertificateCheck(False, "cover value does not match prices")
    return CertificateCheck(True)


def check_certificates(r: LpResult, h: Hypergraph) -> CertificateCheck:
    """Re-verify an LpResult against h by direct substitution."""
    for chk in (check_matching(r.primal, h), check_cover(r.dual, h)):
        if not chk:
            return chk
    if not r.primal.cardinality == r.dual.value == r.nu:
        return CertificateCheck(
            False, f"duality gap: primal {r.primal.cardinality}, dual {r.dual.value}, nu {r.nu}"
        )
    return CertificateCheck(True)


# --- JSON -----------------------------------------------------------------

def _edge_key(e: Edge) -> str:
    return "[" + ",".join(map(str, e)) + "]"


def matching_to_json(m: FractionalMatching) -> dict:
    return {_edge_key(e): format_rational(x) for e, x in sorted(m.weights.items())}


def cover_to_json(c: CoverCertificate) -> dict:
    return {str(v): format_rational(p) for v, p in sorted(c.prices.items())}


def lp_result_to_json(r: LpResult) -> dict:
    return {"nu": format_rational(r.nu), "primal": matching_to_json(r.primal), "dual": cover_to_json(r.dual)}


def lp_result_from_json(obj: dict | str, k: int, n: int) -> LpResult:
    """Rebuild an LpResult; totals are recomputed from the entries, not trusted."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        weights = {}
        for key, val in obj["primal"].items():
            e = tuple(json.loads(key))
            if not all(isinstance(v, int) for v in e):
                raise MalformedEdge(f"bad edge key {key!r}")
            weights[e] = parse_rational(val)
        prices = {int(v): parse_rational(p) for v, p in obj["dual"].items()}
        nu = parse_rational(obj["nu"])
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise InvalidRational(f"malformed certificate JSON: {exc}") from None
    cap = Fraction(k, n)
    return LpResult(
        nu=nu,
        primal=FractionalMatching(weights, sum(weights.values(), Fraction(0))),
        dual=CoverCertificate(prices, cap * sum(prices.values(), Fraction(0))),
    )


def decision_to_json(d: MatchingDecision) -> dict:
    if d.has_matching:
        return {"has_matching": True, "primal": matching_to_json(d.matching), "cardinality": format_rational(d.s)}
    return {"has_matching": False, "dual": cover_to_json(d.cover), "value": format_rational(d.cover.value)}
