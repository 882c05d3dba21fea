"""Command line interface.

    gkmcohom compute <file> [--hhat] [--mod-n N] [--max-degree 2D] [--format json|text] [--rational] [--jobs J]
    gkmcohom report  <file> [--max-degree 2D] [--format json|text] [--jobs J]
    gkmcohom check   <file> [--max-degree 2D] [--jobs J]

Degrees on the command line and in all output are cohomological (even).
Exit status: 0 success, 1 invalid input, 2 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .checks import run_checks
from .gkmgraph import GkmGraph, GraphFormatError, adjacent_contents_coprime, validate
from .graphcohomology import (
    GradedSubmodule,
    InconsistencyError,
    graph_cohomology,
    hilbert_certificate,
    rational_dimension,
)
from .polyring import PolyVector, format_poly
from .recursion import default_max_degree, exactness_report, run_pipeline

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class RunOptions:
    command: str
    path: str
    max_degree: int | None = None  # cohomological
    mod_n: int = 1
    hhat: bool = False
    fmt: str = "json"
    rational: bool = False
    jobs: int = 1

    def __post_init__(self):
        if self.max_degree is not None and (self.max_degree < 0 or self.max_degree % 2):
            raise UsageError(f"--max-degree must be even and nonnegative, got {self.max_degree}")
        if self.mod_n < 1:
            raise UsageError(f"--mod-n must be at least 1, got {self.mod_n}")
        if self.jobs < 1:
            raise UsageError(f"--jobs must be at least 1, got {self.jobs}")

    def poly_degree(self, g: GkmGraph) -> int:
        return default_max_degree(g) if self.max_degree is None else self.max_degree // 2


def exponent_key(m: Sequence[int]) -> str:
    return " ".join(str(e) for e in m)


def generator_to_json(gen: PolyVector, vertices: Sequence[str]) -> dict:
    return {
        "degree": 2 * gen.degree,
        "vertices": {
            name: {exponent_key(m): c for m, c in sorted(poly.items())} for name, poly in zip(vertices, gen.values)
        },
    }


def generator_from_json(doc: dict, vertices: Sequence[str], rank: int) -> PolyVector:
    vals = []
    for name in vertices:
        vals.append({tuple(int(e) for e in k.split()): int(c) for k, c in doc["vertices"][name].items()})
    return PolyVector(rank, doc["degree"] // 2, vals)


def module_document(m: GradedSubmodule, label: str, warnings: Sequence[str]) -> dict:
    return {
        "module": label,
        "ring_modulus": m.ring_modulus,
        "max_degree": 2 * m.max_degree,
        "generators": [generator_to_json(gen, m.vertices) for gen in m.generators],
        "freeness": list(m.freeness),
        "torsion": [{"degree": 2 * d, "factors": list(f)} for d, f in enumerate(m.torsion) if f],
        "slice_ranks": [sl.rank for sl in m.slices],
        "hilbert_certificate": hilbert_certificate(m),
        "warnings": list(warnings),
    }


def _emit(doc: dict, fmt: str, text: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        out.write(text)


def _module_text(m: GradedSubmodule, doc: dict) -> str:
    lines = [f"{doc['module']} over R_{m.ring_modulus}, cohomological degrees 0..{2 * m.max_degree}", "generators:"]
    for gen in m.generators:
        vals = ", ".join(f"{name}: {format_poly(p)}" for name, p in zip(m.vertices, gen.values))
        lines.append(f"  degree {2 * gen.degree}: ({vals})")
    lines.append("slice ranks: " + " ".join(str(r) for r in doc["slice_ranks"]))
    lines.append("free: " + ("yes" if all(m.freeness) else "no"))
    lines.append("hilbert certificate: " + ("yes" if doc["hilbert_certificate"] else "no"))
    if "rational_dimensions" in doc:
        lines.append("rational dimensions: " + " ".join(str(r) for r in doc["rational_dimensions"]))
    lines += [f"warning: {w}" for w in doc["warnings"]]
    return "\n".join(lines) + "\n"


def _load(opts: RunOptions) -> GkmGraph:
    g = GkmGraph.load(opts.path)
    errors = [d for d in validate(g) if d.level == "error"]
    if errors:
        raise GraphFormatError("; ".join(f"{d.code}: {d.message}" for d in errors))
    return g


def cmd_compute(opts: RunOptions, out: TextIO = sys.stdout) -> int:
    g = _load(opts)
    D = opts.poly_degree(g)
    if opts.hhat:
        res = run_pipeline(g, D, opts.jobs, root=opts.mod_n)
        module, label = res.root.hhat, "Hhat"
        warnings = [f"{d.code}: {d.message}" for d in res.diagnostics]
    else:
        module, label = graph_cohomology(g, opts.mod_n, D), "H"
        warnings = [f"{d.code}: {d.message}" for d in validate(g) if d.level == "warning"]
        warnings += [
            f"not free: degree {2 * d}: torsion quotient {list(f)}" for d, f in enumerate(module.torsion) if f
        ]
        if not hilbert_certificate(module):
            warnings.append("degree bound: slice ranks differ from the free-module prediction")
    doc = module_document(module, label, warnings)
    if opts.rational:
        dims = [rational_dimension(g, opts.mod_n, d) for d in range(D + 1)]
        doc["rational_dimensions"] = dims
        doc["rational_check"] = dims == doc["slice_ranks"]
    _emit(doc, opts.fmt, _module_text(module, doc), out)
    return EXIT_OK


def cmd_report(opts: RunOptions, out: TextIO = sys.stdout) -> int:
    g = _load(opts)
    rep = exactness_report(g, opts.poly_degree(g), opts.jobs)
    doc = {
        "exact": rep.exact,
        "first_disagreement": None if rep.first_disagreement is None else 2 * rep.first_disagreement,
        "divisor_tree": [
            {"n": node.n, "relevant_primes": list(node.relevant_primes), "children": list(node.children)}
            for node in rep.tree
        ],
        "indices": [{"degree": 2 * d, "index": i} for d, i in enumerate(rep.indices)],
        "coprime_adjacent_weights": adjacent_contents_coprime(g),
        "warnings": [f"{d.code}: {d.message}" for d in rep.result.diagnostics],
    }
    lines = [f"exact: {'true' if rep.exact else 'false'}"]
    if rep.first_disagreement is not None:
        lines.append(f"first disagreement: degree {2 * rep.first_disagreement}")
    lines.append("divisor tree: " + ", ".join(f"{n.n} -> {list(n.children)}" for n in rep.tree))
    lines += [f"  [H : Hhat] in degree {2 * d}: {'inf' if i is None else i}" for d, i in enumerate(rep.indices)]
    lines += [f"warning: {w}" for w in doc["warnings"]]
    _emit(doc, opts.fmt, "\n".join(lines) + "\n", out)
    return EXIT_OK


def cmd_check(opts: RunOptions, out: TextIO = sys.stdout) -> int:
    g = GkmGraph.load(opts.path)
    diags = validate(g)
    results = run_checks(g, None if opts.max_degree is None else opts.max_degree // 2, opts.jobs)
    for r in results:
        out.write(f"{'PASS' if r.ok else 'FAIL'} {r.check_id}{': ' + r.detail if r.detail else ''}\n")
    for d in diags:
        if d.level != "error":
            out.write(f"{d.level}: {d.code}: {d.message}\n")
    if not results[0].ok:
        return EXIT_INPUT
    return EXIT_OK if all(r.ok for r in results) else EXIT_INTERNAL


COMMANDS = {"compute": cmd_compute, "report": cmd_report, "check": cmd_check}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gkmcohom", description="Integral GKM graph cohomology and its modified recursive version.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("file")
        p.add_argument("--max-degree", type=int, default=None, help="cohomological degree bound (even)")
        p.add_argument("--jobs", type=int, default=1, help="worker threads; output does not depend on it")
        if name != "check":
            p.add_argument("--format", choices=("json", "text"), default="json")
        if name == "compute":
            p.add_argument("--hhat", action="store_true", help="compute the recursive modified cohomology")
            p.add_argument("--mod-n", type=int, default=1, help="work with Gamma_n over R_n")
            p.add_argument("--rational", action="store_true", help="add rational slice dimensions as a cross-check")
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        ns = build_parser().parse_args(argv)
        opts = RunOptions(
            command=ns.command,
            path=ns.file,
            max_degree=ns.max_degree,
            mod_n=getattr(ns, "mod_n", 1),
            hhat=getattr(ns, "hhat", False),
            fmt=getattr(ns, "format", "json"),
            rational=getattr(ns, "rational", False),
            jobs=ns.jobs,
        )
        return COMMANDS[opts.command](opts, out)
    except (UsageError, GraphFormatError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except InconsistencyError as exc:
        err.write(f"internal inconsistency: {exc}\n")
        return EXIT_INTERNAL


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
