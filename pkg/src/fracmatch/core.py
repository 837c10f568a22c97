"""Exact rationals, k-uniform hypergraphs, and their text/JSON formats.

Vertices are 1-based. When bitmasks are used, vertex ``v`` maps to bit ``v - 1``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    DuplicateVertex,
    InvalidParameters,
    InvalidRational,
    MalformedEdge,
    MalformedHeader,
    NotAPermutation,
    SBelowThreshold,
    SOutOfRange,
    VertexOutOfRange,
    WrongEdgeSize,
)

MAX_ENUM_N = 64

Edge = tuple[int, ...]

_RATIONAL_RE = re.compile(r"^[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.\d*)$")


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"``, an integer, or a finite decimal into an exact Fraction.

    Decimals are read exactly (``"0.6"`` is 3/5); floats are refused because
    their binary expansion is almost never the value the user typed.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool) or isinstance(text, float):
        raise InvalidRational(f"refusing non-exact value {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    t = str(text).strip()
    if not _RATIONAL_RE.match(t):
        raise InvalidRational(f"not a rational literal: {text!r}")
    try:
        return Fraction(t)
    except ZeroDivisionError:
        raise InvalidRational(f"zero denominator: {text!r}") from None


def format_rational(x: Fraction | int) -> str:
    """Lowest-terms string; integers print without a denominator."""
    return str(Fraction(x))


def edge_mask(edge: Iterable[int]) -> int:
    m = 0
    for v in edge:
        m |= 1 << (v - 1)
    return m


def mask_edge(mask: int) -> Edge:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class Hypergraph:
    """A k-uniform hypergraph on vertices ``1..n``.

    ``edges`` is kept as a lexicographically sorted tuple of sorted vertex
    tuples, so two hypergraphs with the same edge set compare equal no matter
    how they were built.
    """

    n: int
    k: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidParameters(f"n must be a positive integer, got {self.n!r}")
        if not isinstance(self.k, int) or not 1 <= self.k <= self.n:
            raise InvalidParameters(f"k must satisfy 1 <= k <= n, got k={self.k!r}")
        seen = set()
        canon = []
        for raw in self.edges:
            e = tuple(sorted(raw))
            if len(set(e)) != len(e):
                raise DuplicateVertex(f"edge {list(raw)} repeats a vertex")
            if len(e) != self.k:
                raise WrongEdgeSize(f"edge {list(raw)} has {len(e)} vertices, expected {self.k}")
            for v in e:
                if not isinstance(v, int) or not 1 <= v <= self.n:
                    raise VertexOutOfRange(f"vertex {v!r} outside [1, {self.n}]")
            if e in seen:
                raise DuplicateEdge(f"edge {list(e)} appears twice")
            seen.add(e)
            canon.append(e)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    def __len__(self):
        return len(self.edges)

    def __contains__(self, edge):
        return tuple(sorted(edge)) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...] | None:
        """Edge bitmasks, or ``None`` when n exceeds the machine-word size."""
        if self.n > MAX_ENUM_N:
            return None
        return tuple(edge_mask(e) for e in self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def add_edge(self, edge: Iterable[int]) -> "Hypergraph":
        return Hypergraph(self.n, self.k, self.edges + (tuple(edge),))

    def complement_edges(self) -> list[Edge]:
        """All k-subsets of [n] that are not edges, in lexicographic order."""
        return [e for e in all_k_subsets(self.n, self.k) if e not in self._edge_set]


def all_k_subsets(n: int, k: int) -> Iterable[Edge]:
    return combinations(range(1, n + 1), k)


def complete_hypergraph(n: int, k: int) -> Hypergraph:
    return Hypergraph(n, k, tuple(all_k_subsets(n, k)))


def require_enumerable(n: int) -> None:
    if n > MAX_ENUM_N:
        raise InvalidParameters(f"n = {n} exceeds the enumeration limit {MAX_ENUM_N}")


def check_admissible(n: int, k: int, s: Fraction) -> Fraction:
    """Validate ``1 <= k < n`` and ``k/n < s <= 1``; return s as a Fraction."""
    s = parse_rational(s)
    if not (isinstance(n, int) and isinstance(k, int) and 1 <= k < n):
        raise InvalidParameters(f"need integers 1 <= k < n, got n={n!r}, k={k!r}")
    if s <= 0 or s > 1:
        raise SOutOfRange(s)
    if s * n <= k:
        raise SBelowThreshold(n, k, s)
    return s


# --- text formats ---------------------------------------------------------

def _parse_int(tok: str, what: str, exc) -> int:
    if not re.fullmatch(r"\d+", tok):
        raise exc(f"{what}: expected a decimal integer, got {tok!r}")
    return int(tok)


def _parse_plain(text: str) -> Hypergraph:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise MalformedHeader("empty input")
    head = lines[0].split()
    if len(head) != 3:
        raise MalformedHeader(f"header must be 'n k m', got {lines[0]!r}")
    n, k, m = (_parse_int(t, "header", MalformedHeader) for t in head)
    if n < 1 or not 1 <= k <= n:
        raise MalformedHeader(f"header values out of range: n={n}, k={k}")
    body = lines[1:]
    if len(body) != m:
        raise MalformedHeader(f"header announces {m} edges, found {len(body)}")
    edges = []
    for ln in body:
        edges.append(_check_edge([_parse_int(t, "edge", MalformedEdge) for t in ln.split()], n, k))
    return Hypergraph(n, k, tuple(edges))


def _check_edge(vs: Sequence[int], n: int, k: int) -> Edge:
    for v in vs:
        if not 1 <= v <= n:
            raise VertexOutOfRange(f"vertex {v} outside [1, {n}]")
    if len(set(vs)) != len(vs):
        raise DuplicateVertex(f"edge {list(vs)} repeats a vertex")
    if len(vs) != k:
        raise WrongEdgeSize(f"edge {list(vs)} has {len(vs)} vertices, expected {k}")
    if any(a >= b for a, b in zip(vs, vs[1:])):
        raise MalformedEdge(f"edge {list(vs)} is not strictly increasing")
    return tuple(vs)


def _parse_json(text: str) -> Hypergraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedHeader(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or not {"n", "k", "edges"} <= obj.keys():
        raise MalformedHeader("JSON hypergraph needs keys n, k, edges")
    n, k, raw = obj["n"], obj["k"], obj["edges"]
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in (n, k)):
        raise MalformedHeader("n and k must be integers")
    if n < 1 or not 1 <= k <= n:
        raise MalformedHeader(f"header values out of range: n={n}, k={k}")
    if not isinstance(raw, list):
        raise MalformedHeader("edges must be an array")
    edges = []
    for e in raw:
        if not isinstance(e, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in e):
            raise MalformedEdge(f"edge must be an array of integers, got {e!r}")
        edges.append(_check_edge(e, n, k))
    return Hypergraph(n, k, tuple(edges))


def parse_hypergraph(text: str, format: str = "plain") -> Hypergraph:
    """Parse and validate a hypergraph. Invalid input raises, it is never repaired."""
    if format == "plain":
        return _parse_plain(text)
    if format == "json":
        return _parse_json(text)
    raise ValueError(f"unknown format {format!r}")


def detect_format(text: str) -> str:
    return "json" if text.lstrip().startswith("{") else "plain"


def hypergraph_to_json(h: Hypergraph) -> dict:
    return {"n": h.n, "k": h.k, "edges": [list(e) for e in h.edges]}


def serialize_hypergraph(h: Hypergraph, format: str = "plain") -> str:
    if format == "plain":
        lines = [f"{h.n} {h.k} {len(h.edges)}"]
        lines += [" ".join(map(str, e)) for e in h.edges]
        return "\n".join(lines) + "\n"
    if format == "json":
        return json.dumps(hypergraph_to_json(h), separators=(",", ":"))
    raise ValueError(f"unknown format {format!r}")


def relabel(h: Hypergraph, perm: Sequence[int] | dict[int, int]) -> Hypergraph:
    """Apply a vertex permutation; ``perm[v]`` (or ``perm[v-1]`` for sequences) is the image of v."""
    if isinstance(perm, dict):
        image = {v: perm.get(v) for v in range(1, h.n + 1)}
    else:
        if len(perm) != h.n:
            raise NotAPermutation(f"permutation has length {len(perm)}, expected {h.n}")
        image = {v: perm[v - 1] for v in range(1, h.n + 1)}
    if sorted(x for x in image.values() if isinstance(x, int)) != list(range(1, h.n + 1)):
        raise NotAPermutation("mapping is not a bijection on [1, n]")
    return Hypergraph(h.n, h.k, tuple(tuple(image[v] for v in e) for e in h.edges))


def invert_permutation(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm, start=1):
        inv[p - 1] = i
    return inv
