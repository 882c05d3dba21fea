"""Labelled GKM graphs, their divisibility subgraphs and the divisor tree.

A graph file is a JSON document::

    {"rank": 3,
     "vertices": ["N", "S"],
     "edges": [{"ends": ["N", "S"], "weight": [4, 0, 0]}, ...]}

Weights are integer vectors defined up to sign. Multi-edges are allowed and
parallel edges count as adjacent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd
from pathlib import Path
from typing import Any, Iterable, Sequence

Weight = tuple[int, ...]


class GraphFormatError(ValueError):
    """Malformed graph document. The message names the offending field."""


def content(w: Sequence[int]) -> int:
    """gcd of the entries (0 for the zero vector)."""
    return reduce(gcd, (abs(x) for x in w), 0)


def prime_factors(k: int) -> list[int]:
    out = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            out.append(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        out.append(k)
    return out


@dataclass(frozen=True)
class Edge:
    a: int
    b: int
    weight: Weight

    @property
    def content(self) -> int:
        return content(self.weight)


@dataclass(frozen=True)
class GkmGraph:
    rank: int
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @classmethod
    def build(cls, rank: int, vertices: Iterable[str], edges: Iterable[tuple[str, str, Sequence[int]]]) -> GkmGraph:
        """Convenience constructor taking vertex names in the edge list."""
        verts = tuple(vertices)
        idx = {v: i for i, v in enumerate(verts)}
        return cls(rank, verts, tuple(Edge(idx[a], idx[b], tuple(int(x) for x in w)) for a, b, w in edges))

    @classmethod
    def from_dict(cls, doc: Any) -> GkmGraph:
        if not isinstance(doc, dict):
            raise GraphFormatError("top level: expected an object")
        for key in ("rank", "vertices", "edges"):
            if key not in doc:
                raise GraphFormatError(f"field '{key}': missing")
        rank = doc["rank"]
        if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
            raise GraphFormatError(f"field 'rank': expected a positive integer, got {rank!r}")
        verts = doc["vertices"]
        if not isinstance(verts, list):
            raise GraphFormatError("field 'vertices': expected a list of names")
        idx: dict[str, int] = {}
        for i, v in enumerate(verts):
            if not isinstance(v, str):
                raise GraphFormatError(f"field 'vertices[{i}]': expected a string, got {v!r}")
            if v in idx:
                raise GraphFormatError(f"field 'vertices[{i}]': duplicate vertex name {v!r}")
            idx[v] = i
        raw_edges = doc["edges"]
        if not isinstance(raw_edges, list):
            raise GraphFormatError("field 'edges': expected a list")
        edges = []
        for k, e in enumerate(raw_edges):
            where = f"edges[{k}]"
            if not isinstance(e, dict) or "ends" not in e or "weight" not in e:
                raise GraphFormatError(f"field '{where}': expected an object with 'ends' and 'weight'")
            ends = e["ends"]
            if not isinstance(ends, list) or len(ends) != 2:
                raise GraphFormatError(f"field '{where}.ends': expected two vertex names")
            for j, name in enumerate(ends):
                if name not in idx:
                    raise GraphFormatError(f"field '{where}.ends[{j}]': unknown vertex {name!r}")
            w = e["weight"]
            if not isinstance(w, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in w):
                raise GraphFormatError(f"field '{where}.weight': expected a list of integers")
            edges.append(Edge(idx[ends[0]], idx[ends[1]], tuple(w)))
        return cls(rank, tuple(verts), tuple(edges))

    @classmethod
    def from_json(cls, text: str) -> GkmGraph:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
        return cls.from_dict(doc)

    @classmethod
    def load(cls, path: str | Path) -> GkmGraph:
        return cls.from_json(Path(path).read_text())

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "vertices": list(self.vertices),
            "edges": [
                {"ends": [self.vertices[e.a], self.vertices[e.b]], "weight": list(e.weight)} for e in self.edges
            ],
        }

    def valence(self, v: int) -> int:
        return sum((e.a == v) + (e.b == v) for e in self.edges)

    @property
    def max_valence(self) -> int:
        return max((self.valence(v) for v in range(len(self.vertices))), default=0)

    def adjacent_index_pairs(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for (i, e), (j, f) in combinations(enumerate(self.edges), 2)
            if {e.a, e.b} & {f.a, f.b}
        ]

    def adjacent_pairs(self) -> list[tuple[Edge, Edge]]:
        return [(self.edges[i], self.edges[j]) for i, j in self.adjacent_index_pairs()]

    def with_weights(self, weights: Sequence[Sequence[int]]) -> GkmGraph:
        return GkmGraph(
            self.rank,
            self.vertices,
            tuple(Edge(e.a, e.b, tuple(w)) for e, w in zip(self.edges, weights)),
        )


@dataclass(frozen=True)
class Diagnostic:
    level: str  # "error" | "warning" | "info"
    code: str
    message: str


def _dependent(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(u[i] * v[j] == u[j] * v[i] for i in range(len(u)) for j in range(i + 1, len(u)))


def adjacent_contents_coprime(g: GkmGraph) -> bool:
    return all(gcd(e.content, f.content) == 1 for e, f in g.adjacent_pairs())


def validate(g: GkmGraph) -> list[Diagnostic]:
    out = []
    for k, e in enumerate(g.edges):
        if len(e.weight) != g.rank:
            out.append(Diagnostic("error", "rank mismatch", f"edge {k} has a weight of length {len(e.weight)}, rank is {g.rank}"))
        elif not any(e.weight):
            out.append(Diagnostic("error", "zero weight", f"edge {k} has zero weight"))
        if e.a == e.b:
            out.append(Diagnostic("error", "self-loop", f"edge {k} joins vertex {g.vertices[e.a]!r} to itself"))
    if any(d.level == "error" for d in out):
        return out
    for ke, kf in g.adjacent_index_pairs():
        e, f = g.edges[ke], g.edges[kf]
        if _dependent(e.weight, f.weight):
            out.append(
                Diagnostic(
                    "warning",
                    "dependent adjacent weights",
                    f"edges {ke} and {kf} share a vertex and have linearly dependent weights "
                    f"{list(e.weight)}, {list(f.weight)}",
                )
            )
    if adjacent_contents_coprime(g):
        out.append(Diagnostic("info", "coprime adjacent weights", "all adjacent weight contents are coprime"))
    else:
        out.append(
            Diagnostic("info", "non-coprime adjacent weights", "some adjacent edges have weights with a common divisor")
        )
    return out


def subgraph_mod_n(g: GkmGraph, n: int) -> GkmGraph:
    """Same vertices, keeping the edges whose weight is divisible by ``n``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return GkmGraph(g.rank, g.vertices, tuple(e for e in g.edges if all(x % n == 0 for x in e.weight)))


def relevant_primes(g: GkmGraph, n: int) -> frozenset[int]:
    """Primes ``p`` such that ``n*p`` divides the weights of two distinct adjacent edges."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    primes: set[int] = set()
    for e, f in g.adjacent_pairs():
        c = gcd(e.content, f.content)
        if c % n == 0:
            primes.update(prime_factors(c // n))
    return frozenset(primes)


@dataclass(frozen=True)
class DivisorNode:
    n: int
    relevant_primes: tuple[int, ...]

    @property
    def children(self) -> tuple[int, ...]:
        return tuple(self.n * p for p in self.relevant_primes)


def divisor_tree(g: GkmGraph, root: int = 1) -> list[DivisorNode]:
    """All moduli reachable from ``root`` through relevant primes, sorted by ``n``.

    Distinct prime orders can reach the same modulus, so this is really a DAG;
    each modulus appears once.
    """
    seen: dict[int, DivisorNode] = {}
    todo = [root]
    while todo:
        n = todo.pop()
        if n in seen:
            continue
        node = DivisorNode(n, tuple(sorted(relevant_primes(g, n))))
        seen[n] = node
        todo.extend(node.children)
    return [seen[n] for n in sorted(seen)]
