"""Recursive computation of the modified graph cohomology.

For each modulus ``n`` in the divisor tree the module at ``n`` is

    H_n  intersected with  R_n-span(Hhat_{np})   for every relevant prime p,

with leaves (no relevant primes) equal to their plain graph cohomology.
Coefficient extension always acts on the already intersected child, so
intersections and extensions alternate down the tree.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import prod
from typing import Callable, Iterable, TypeVar

from .gkmgraph import Diagnostic, DivisorNode, GkmGraph, divisor_tree, prime_factors, relevant_primes, validate
from .graphcohomology import (
    GradedSubmodule,
    cohomology_slice,
    cohomology_slices,
    extract_generators,
    hilbert_rank,
    span_slice,
)
from .intlinalg import Lattice, intersect_all, quotient_with_lifts

T = TypeVar("T")
U = TypeVar("U")


class Memo:
    """Write-once map from modulus to module, safe for concurrent readers."""

    def __init__(self):
        self._data: dict[int, GradedSubmodule] = {}
        self._lock = threading.Lock()

    def get(self, n: int) -> GradedSubmodule | None:
        return self._data.get(n)

    def put(self, n: int, module: GradedSubmodule) -> GradedSubmodule:
        with self._lock:
            old = self._data.get(n)
            if old is not None:
                if old != module:
                    raise RuntimeError(f"conflicting results for modulus {n}")
                return old
            self._data[n] = module
            return module

    def __contains__(self, n: int) -> bool:
        return n in self._data


def _combine(g: GkmGraph, n: int, h_slices: list[Lattice], children: list[GradedSubmodule]) -> GradedSubmodule:
    if not children:
        return extract_generators(h_slices, n, g)
    slices = [
        intersect_all([h] + [span_slice(child, n, d) for child in children]) for d, h in enumerate(h_slices)
    ]
    return extract_generators(slices, n, g)


def hhat(g: GkmGraph, n: int, max_degree: int, memo: Memo | None = None) -> GradedSubmodule:
    """``Hhat*_{T/T_n}(Gamma_n)`` up to polynomial degree ``max_degree``."""
    if memo is None:
        memo = Memo()
    hit = memo.get(n)
    if hit is not None:
        return hit
    children = [hhat(g, n * p, max_degree, memo) for p in sorted(relevant_primes(g, n))]
    module = _combine(g, n, cohomology_slices(g, n, max_degree), children)
    return memo.put(n, module)


@dataclass(frozen=True)
class NodeResult:
    n: int
    relevant_primes: tuple[int, ...]
    h: GradedSubmodule
    hhat: GradedSubmodule
    seconds: float = field(compare=False)


@dataclass(frozen=True)
class HhatResult:
    graph: GkmGraph
    max_degree: int
    nodes: dict[int, NodeResult]
    diagnostics: tuple[Diagnostic, ...]

    @property
    def root(self) -> NodeResult:
        return self.nodes[min(self.nodes)]

    @property
    def tree(self) -> list[DivisorNode]:
        return [DivisorNode(n, node.relevant_primes) for n, node in sorted(self.nodes.items())]


def default_max_degree(g: GkmGraph) -> int:
    """Polynomial degree bound used when the caller gives none."""
    return g.max_valence


def _pmap(fn: Callable[[T], U], items: Iterable[T], workers: int) -> list[U]:
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def run_pipeline(g: GkmGraph, max_degree: int | None = None, workers: int = 1, root: int = 1) -> HhatResult:
    """Compute ``H`` and ``Hhat`` at every node of the divisor tree below ``root``.

    Slices for all (modulus, degree) pairs are independent and are computed
    first; the intersections then run level by level from the leaves up.
    ``workers`` only changes scheduling, never the output.
    """
    diags = [d for d in validate(g) if d.level != "info"]
    errors = [d for d in diags if d.level == "error"]
    if errors:
        raise ValueError("; ".join(f"{d.code}: {d.message}" for d in errors))
    D = default_max_degree(g) if max_degree is None else max_degree
    if D < 0:
        raise ValueError(f"max_degree must be nonnegative, got {D}")

    tree = {node.n: node for node in divisor_tree(g, root)}

    jobs = [(n, d) for n in sorted(tree) for d in range(D + 1)]
    flat = _pmap(lambda job: cohomology_slice(g, *job), jobs, workers)
    h_slices = {n: [flat[i * (D + 1) + d] for d in range(D + 1)] for i, n in enumerate(sorted(tree))}

    h_modules = dict(zip(sorted(tree), _pmap(lambda n: extract_generators(h_slices[n], n, g), sorted(tree), workers)))

    height: dict[int, int] = {}
    for n in sorted(tree, reverse=True):
        height[n] = 1 + max((height[c] for c in tree[n].children), default=-1)
    memo = Memo()
    timings: dict[int, float] = {}
    for level in range(max(height.values()) + 1):
        todo = sorted(n for n in tree if height[n] == level)

        def work(n: int) -> tuple[GradedSubmodule, float]:
            started = time.perf_counter()
            if not tree[n].children:
                return h_modules[n], 0.0
            module = _combine(g, n, h_slices[n], [memo.get(c) for c in tree[n].children])
            return module, time.perf_counter() - started

        for n, (module, seconds) in zip(todo, _pmap(work, todo, workers)):
            memo.put(n, module)
            timings[n] = seconds

    nodes = {
        n: NodeResult(n, tree[n].relevant_primes, h_modules[n], memo.get(n), timings[n]) for n in sorted(tree)
    }
    diags.extend(_module_diagnostics(nodes, root, D))
    return HhatResult(g, D, nodes, tuple(diags))


def _module_diagnostics(nodes: dict[int, NodeResult], root_n: int, D: int) -> list[Diagnostic]:
    out = []
    for n, node in sorted(nodes.items()):
        for label, m in (("H", node.h), ("Hhat", node.hhat)):
            for d, factors in enumerate(m.torsion):
                if factors:
                    out.append(
                        Diagnostic(
                            "warning",
                            "not free",
                            f"{label} at n={n}, degree {2 * d}: torsion quotient {list(factors)}; "
                            "torsion-freeness hypotheses violated",
                        )
                    )
        for d in range(D + 1):
            if node.h.slices[d].rank != node.hhat.slices[d].rank:
                out.append(
                    Diagnostic(
                        "warning",
                        "rank drop",
                        f"n={n}, degree {2 * d}: Hhat has rank {node.hhat.slices[d].rank}, "
                        f"H has rank {node.h.slices[d].rank}",
                    )
                )
    root = nodes[root_n].hhat
    if root.slices[D].rank != hilbert_rank(root, D):
        out.append(
            Diagnostic(
                "warning",
                "degree bound",
                f"rank {root.slices[D].rank} at degree {2 * D} differs from the free-module prediction "
                f"{hilbert_rank(root, D)}; generators may be incomplete, raise the degree bound",
            )
        )
    return out


@dataclass(frozen=True)
class ExactnessReport:
    exact: bool
    first_disagreement: int | None  # polynomial degree
    indices: tuple[int | None, ...]  # [H_d : Hhat_d]; None when infinite
    tree: tuple[DivisorNode, ...]
    result: HhatResult = field(compare=False, repr=False)

    @property
    def index_primes(self) -> set[int]:
        return {p for i in self.indices if i for p in prime_factors(i)}


def quotient_index(sub: Lattice, sup: Lattice) -> int | None:
    _, factors = quotient_with_lifts(sub, sup)
    if any(f == 0 for f in factors):
        return None
    return prod(factors)


def exactness_report(g: GkmGraph, max_degree: int | None = None, workers: int = 1) -> ExactnessReport:
    """Compare ``H*_T`` with ``Hhat*_T`` degree by degree.

    They agree in every degree exactly when the graph-level sequence built from
    the one-skeleton alone is exact.
    """
    res = run_pipeline(g, max_degree, workers)
    h, hh = res.root.h, res.root.hhat
    indices = tuple(quotient_index(hh.slices[d], h.slices[d]) for d in range(res.max_degree + 1))
    first = next((d for d, i in enumerate(indices) if i != 1), None)
    return ExactnessReport(first is None, first, indices, tuple(res.tree), res)
