"""Integral graph cohomology of GKM graphs and its recursive modification.

Typical use::

    from gkmcohom import fixtures, run_pipeline
    res = run_pipeline(fixtures.load("s6-pullback-p2q3"), max_degree=4)
    res.root.hhat.generators
"""

from .gkmgraph import DivisorNode, GkmGraph, GraphFormatError, divisor_tree, relevant_primes, subgraph_mod_n, validate
from .graphcohomology import (
    GradedSubmodule,
    cohomology_slice,
    extract_generators,
    graph_cohomology,
    hilbert_rank,
    rational_dimension,
    span_slice,
)
from .intlinalg import Lattice
from .polyring import PolyVector
from .recursion import ExactnessReport, HhatResult, exactness_report, hhat, run_pipeline

__all__ = [
    "DivisorNode",
    "ExactnessReport",
    "GkmGraph",
    "GradedSubmodule",
    "GraphFormatError",
    "HhatResult",
    "Lattice",
    "PolyVector",
    "cohomology_slice",
    "divisor_tree",
    "exactness_report",
    "extract_generators",
    "graph_cohomology",
    "hhat",
    "hilbert_rank",
    "rational_dimension",
    "relevant_primes",
    "run_pipeline",
    "span_slice",
    "subgraph_mod_n",
    "validate",
]
