"""Acceptance criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import io
import json
import os
import random
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gkmcohom import fixtures
from gkmcohom.cli import main
from gkmcohom.gkmgraph import GkmGraph, prime_factors
from gkmcohom.graphcohomology import graph_cohomology, rational_dimension, span_slice
from gkmcohom.intlinalg import Lattice, hnf, member, quotient_with_lifts
from gkmcohom.polyring import PolyVector, linear_form
from gkmcohom.recursion import exactness_report, quotient_index, run_pipeline

from conftest import s6_graph
from oracles import TwoVertexOracle

X123 = (1, 1, 1)
criterion = pytest.mark.criterion


def compute(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    assert code == 0, err.getvalue()
    return out.getvalue()


def top_generator(module, degree):
    (gen,) = [g for g in module.generators if g.degree == degree]
    return gen


@criterion("C1", "s6 pullback p=2 q=3: Hhat = <1, 96 x1x2x3> to degree 8 in under 10 s")
def test_c1_end_to_end():
    start = time.perf_counter()
    doc = json.loads(compute("compute", fixtures.path("s6-pullback-p2q3"), "--hhat", "--max-degree", 8))
    elapsed = time.perf_counter() - start
    assert [g["degree"] for g in doc["generators"]] == [0, 6]
    one, top = (g["vertices"] for g in doc["generators"])
    assert one == {"N": {"0 0 0": 1}, "S": {"0 0 0": 1}}
    assert top["N"] == {} and top["S"] in ({"1 1 1": 96}, {"1 1 1": -96})
    assert elapsed < 10


@criterion("C2", "parameter robustness: q=5 gives 160, p=3 q=2 gives 486")
@pytest.mark.parametrize("p, q, coeff", [(2, 5, 160), (3, 2, 486)])
def test_c2_parameters(p, q, coeff):
    g = fixtures.load(f"s6-pullback-p{p}q{q}")
    assert g == s6_graph(p, q)
    m = run_pipeline(g, 4).root.hhat
    assert m.generator_degrees == [0, 3]
    assert abs(top_generator(m, 3).values[1][X123]) == coeff == p**5 * q


@criterion("C3", "Gamma_4 over R_4 has generators (1,1) and (0, 16 x1x2)")
def test_c3_gamma4():
    m = graph_cohomology(fixtures.load("s6-pullback-p2q3"), 4, 4)
    assert m.generators == (
        PolyVector(3, 0, [{(0, 0, 0): 1}, {(0, 0, 0): 1}]),
        PolyVector(3, 2, [{}, {(1, 1, 0): 16}]),
    )


@criterion("C4", "H coefficient 12 and Gamma_2 coefficient 48 agree with the two-vertex lcm oracle")
@pytest.mark.parametrize("n, coeff", [(1, 12), (2, 48)])
def test_c4_oracle(n, coeff):
    g = fixtures.load("s6-pullback-p2q3")
    oracle = TwoVertexOracle(3, [e.weight for e in g.edges], n, 3)
    assert oracle.difference_modulus(X123) == coeff
    m = graph_cohomology(g, n, 4)
    assert abs(top_generator(m, 3).values[1][X123]) == coeff
    sl = m.slices[3]
    assert all(oracle.contains(row) for row in sl.basis)
    assert all(member(sl, v) for v in oracle.generators())


@criterion("C5", "coprime fixture: Hhat = H bit-exactly to degree 10 and the report says exact")
def test_c5_coprime():
    g = fixtures.load("cp2-coprime")
    res = run_pipeline(g, 5)
    assert res.root.hhat == res.root.h
    assert res.root.hhat.slices == res.root.h.slices
    rep = exactness_report(g, 5)
    assert rep.exact and rep.first_disagreement is None
    assert all(i == 1 for i in rep.indices)


def random_weights(count=20, seed=20240611):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        r = rng.randint(1, 3)
        w = [rng.randint(-9, 9) for _ in range(r)]
        if any(w):
            out.append(w)
    return out


@criterion("C6", "single edge: generators are (1,1) and (0, alpha) for 20 random weights")
@pytest.mark.parametrize("w", random_weights())
def test_c6_single_edge(w):
    r = len(w)
    g = GkmGraph.build(r, ["N", "S"], [("N", "S", w)])
    m = run_pipeline(g, 3).root.hhat
    alpha = PolyVector(r, 1, [{}, linear_form(w)])
    assert len(m.generators) == 2
    assert m.generators[0] == PolyVector(r, 0, [{(0,) * r: 1}, {(0,) * r: 1}])
    assert m.generators[1] in (alpha, -alpha)


def unimodular(rng, r, steps=8):
    m = [[int(i == j) for j in range(r)] for i in range(r)]
    for _ in range(steps):
        if r == 1:
            break
        i, j = rng.sample(range(r), 2)
        k = rng.choice([-2, -1, 1, 2])
        m[i] = [x + k * y for x, y in zip(m[i], m[j])]
    if rng.random() < 0.5:
        m[0] = [-x for x in m[0]]
    return m


def invariants(g, D):
    """Ranks and invariant factors of every H_d and Hhat_d at every node."""
    res = run_pipeline(g, D)
    out = {}
    for n, node in res.nodes.items():
        for d in range(D + 1):
            h, hh = node.h.slices[d], node.hhat.slices[d]
            full = Lattice.full(h.ambient_dim)
            out[n, d] = (h.rank, quotient_with_lifts(h, full)[1], quotient_with_lifts(hh, h)[1])
    return out


def random_graph(rng):
    r, nv = rng.randint(1, 3), rng.randint(2, 3)
    names = [f"v{i}" for i in range(nv)]
    es = []
    for _ in range(rng.randint(1, 4)):
        a, b = rng.sample(range(nv), 2)
        w = [0] * r
        while not any(w):
            w = [rng.choice([-6, -4, -3, -2, 0, 1, 2, 3, 4, 6]) for _ in range(r)]
        es.append((names[a], names[b], w))
    return GkmGraph.build(r, names, es)


@criterion("C7", "property suite: ranks, containment, index primes, invariance, HNF, self-consistency in under 60 s")
def test_c7_property_suite():
    start = time.perf_counter()
    rng = random.Random(7)
    graphs = [fixtures.load(name) for name in fixtures.names()] + [random_graph(rng) for _ in range(10)]
    D = 5
    for g in graphs:
        res = run_pipeline(g, D)
        tree_primes = {p for n in res.nodes for p in prime_factors(n)}
        for n, node in res.nodes.items():
            for d in range(D + 1):
                h, hh = node.h.slices[d], node.hhat.slices[d]
                assert h.rank == rational_dimension(g, n, d), (g, n, d)
                assert hh.issubset(h) and hh.rank == h.rank
                idx = quotient_index(hh, h)
                assert idx is not None and set(prime_factors(idx)) <= tree_primes
                assert span_slice(node.h, n, d) == h
                assert span_slice(node.hhat, n, d) == hh

    for g in graphs:
        base = invariants(g, 3)
        flipped = g.with_weights([[-x for x in e.weight] if rng.random() < 0.5 else e.weight for e in g.edges])
        u = unimodular(rng, g.rank)
        moved = g.with_weights([[sum(u[i][j] * e.weight[j] for j in range(g.rank)) for i in range(g.rank)] for e in g.edges])
        assert invariants(flipped, 3) == base
        assert invariants(moved, 3) == base

    matrices = st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-10, 10), min_size=c, max_size=c), min_size=1, max_size=5)
    )

    @settings(max_examples=500, deadline=None, derandomize=True)
    @given(matrices)
    def hnf_idempotent_and_span_preserving(m):
        h = hnf(m)
        assert hnf(h) == h
        a, b = Lattice.from_generators(m), Lattice(len(m[0]), tuple(map(tuple, h)))
        assert a == b
        assert all(member(b, row) for row in m) and all(member(a, row) for row in h)

    hnf_idempotent_and_span_preserving()
    assert time.perf_counter() - start < 60


def cli_outputs(name, jobs):
    path = fixtures.path(name)
    return [compute("compute", path, *flags, "--jobs", jobs) for flags in ([], ["--hhat"], ["--format", "text"])]


@criterion("C8", "determinism: compute output byte-identical across runs and parallelism levels")
@pytest.mark.parametrize("name", fixtures.names())
def test_c8_determinism(name):
    jobs = max(8, os.cpu_count() or 1)
    first = cli_outputs(name, 1)
    assert cli_outputs(name, 1) == first
    assert cli_outputs(name, jobs) == first


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
