"""Cross-checks run by ``gkmcohom check`` on a single graph.

Each check carries a stable identifier so failures can be named in output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gkmgraph import GkmGraph, prime_factors, relevant_primes, validate
from .graphcohomology import cohomology_slice, hilbert_rank, rational_dimension, span_slice
from .recursion import HhatResult, Memo, hhat, quotient_index, run_pipeline


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    ok: bool
    detail: str = ""


def _tree_primes(res: HhatResult) -> set[int]:
    return {p for n in res.nodes for p in prime_factors(n)}


def run_checks(g: GkmGraph, max_degree: int | None = None, workers: int = 1) -> list[CheckResult]:
    diags = validate(g)
    errors = [d for d in diags if d.level == "error"]
    if errors:
        return [CheckResult("validate", False, "; ".join(f"{d.code}: {d.message}" for d in errors))]
    out = [CheckResult("validate", True)]
    res = run_pipeline(g, max_degree, workers)
    D = res.max_degree

    bad = [
        f"n={n} d={d}: {node.h.slices[d].rank} vs {rational_dimension(g, n, d)}"
        for n, node in res.nodes.items()
        for d in range(D + 1)
        if node.h.slices[d].rank != rational_dimension(g, n, d)
    ]
    out.append(CheckResult("rational-rank", not bad, "; ".join(bad)))

    bad = []
    for n, node in res.nodes.items():
        for label, m in (("H", node.h), ("Hhat", node.hhat)):
            bad += [f"{label} n={n} d={d}" for d in range(D + 1) if span_slice(m, n, d) != m.slices[d]]
    out.append(CheckResult("self-consistency", not bad, "; ".join(bad)))

    bad = [
        f"n={n} d={d}"
        for n, node in res.nodes.items()
        for d in range(D + 1)
        if not node.hhat.slices[d].issubset(node.h.slices[d])
    ]
    out.append(CheckResult("containment", not bad, "; ".join(bad)))

    bad = [
        f"n={n} d={d}"
        for n, node in res.nodes.items()
        for d in range(D + 1)
        if node.hhat.slices[d].rank != node.h.slices[d].rank
    ]
    out.append(CheckResult("rank-equality", not bad, "; ".join(bad)))

    allowed = _tree_primes(res)
    bad = []
    for n, node in res.nodes.items():
        for d in range(D + 1):
            idx = quotient_index(node.hhat.slices[d], node.h.slices[d])
            if idx is None or not set(prime_factors(idx)) <= allowed:
                bad.append(f"n={n} d={d}: index {idx}")
    out.append(CheckResult("index-primes", not bad, "; ".join(bad)))

    if not relevant_primes(g, 1):
        ok = res.root.h == res.root.hhat
        out.append(CheckResult("coprime-shortcut", ok, "" if ok else "Hhat differs from H"))

    bad = []
    for n, node in res.nodes.items():
        for label, m in (("H", node.h), ("Hhat", node.hhat)):
            if all(m.freeness):
                bad += [f"{label} n={n} d={d}" for d in range(D + 1) if m.slices[d].rank != hilbert_rank(m, d)]
    out.append(CheckResult("hilbert-certificate", not bad, "; ".join(bad)))

    flipped = g.with_weights([[-x for x in e.weight] for e in g.edges])
    bad = [f"d={d}" for d in range(D + 1) if cohomology_slice(flipped, 1, d) != res.root.h.slices[d]]
    flipped_hat = hhat(flipped, 1, D)
    if flipped_hat.slices != res.root.hhat.slices:
        bad.append("Hhat")
    out.append(CheckResult("sign-invariance", not bad, "; ".join(bad)))

    ok = hhat(g, 1, D, Memo()) == res.root.hhat
    out.append(CheckResult("memo-transparency", ok, "" if ok else "recursive and scheduled results differ"))
    return out
