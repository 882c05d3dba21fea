import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gkmcohom import fixtures
from gkmcohom.gkmgraph import GkmGraph
from gkmcohom.graphcohomology import (
    GradedSubmodule,
    cohomology_slice,
    extract_generators,
    graph_cohomology,
    hilbert_certificate,
    hilbert_rank,
    rational_dimension,
    span_slice,
)
from gkmcohom.intlinalg import Lattice, member, quotient_with_lifts
from gkmcohom.polyring import PolyVector, linear_form, monomial_basis, pack

from conftest import s6_graph
from oracles import TwoVertexOracle

X123 = (1, 1, 1)


def single_edge(w):
    return GkmGraph.build(len(w), ["N", "S"], [("N", "S", w)])


def alpha_coefficient(module, degree, mono):
    """Coefficient of ``mono`` in the second vertex of the unique degree-``degree`` generator."""
    (gen,) = [g for g in module.generators if g.degree == degree]
    assert not gen.values[0]
    return gen.values[1][mono]


class TestCohomologySlice:
    def test_single_edge_degree_zero(self):
        assert cohomology_slice(single_edge([3, 5]), 1, 0) == Lattice.from_generators([[1, 1]])

    def test_s6_degree3_constrained_to_12(self, s6):
        lat = cohomology_slice(s6, 1, 3)
        basis = monomial_basis(3, 3)
        v = pack(PolyVector(3, 3, [{}, {X123: 12}]), basis)
        w = pack(PolyVector(3, 3, [{}, {X123: 6}]), basis)
        assert member(lat, v) and not member(lat, w)

    def test_gamma4_degree2(self, s6):
        basis = monomial_basis(3, 2)
        diag = [pack(PolyVector(3, 2, [{m: 16}, {m: 16}]), basis) for m in basis.monomials]
        extra = pack(PolyVector(3, 2, [{}, {(1, 1, 0): 16}]), basis)
        assert cohomology_slice(s6, 4, 2) == Lattice.from_generators(diag + [extra])

    def test_no_edges_gives_scaled_full_lattice(self):
        g = fixtures.load("edgeless")
        assert cohomology_slice(g, 3, 2) == Lattice.full(9, 9)


def monomial_weights(r, k):
    return st.lists(
        st.tuples(st.integers(0, r - 1), st.integers(1, 8), st.booleans()), min_size=1, max_size=k
    ).map(lambda ws: [[(c if neg else -c) if i == var else 0 for i in range(r)] for var, c, neg in ws])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3).flatmap(lambda r: st.tuples(st.just(r), monomial_weights(r, 3))), st.sampled_from([1, 2, 3, 4]), st.integers(0, 4))
def test_two_vertex_brute_force(rw, n, d):
    r, ws = rw
    if r == 3 and d == 4 and len(ws) == 3:
        d = 3  # keep runtime in check
    g = GkmGraph.build(r, ["N", "S"], [("N", "S", w) for w in ws])
    lat = cohomology_slice(g, n, d)
    oracle = TwoVertexOracle(r, ws, n, d)
    assert all(oracle.contains(row) for row in lat.basis)
    assert all(member(lat, v) for v in oracle.generators())


def test_s6_oracle_coefficients(s6):
    basis = monomial_basis(3, 3)
    assert TwoVertexOracle(3, [e.weight for e in s6.edges], 1, 3).difference_modulus(X123) == 12
    assert TwoVertexOracle(3, [e.weight for e in s6.edges], 2, 3).difference_modulus(X123) == 48
    assert len(basis) == 10


class TestSpanSlice:
    def test_diagonal(self):
        m = extract_generators([Lattice.from_generators([[1, 1]])], 1, single_edge([1]))
        assert span_slice(m, 1, 1) == Lattice.from_generators([[1, 1]])

    def test_extension_forces_extra_factor(self, s6):
        m4 = graph_cohomology(s6, 4, 3)
        lat = span_slice(m4, 2, 3)
        basis = monomial_basis(3, 3)
        v32 = pack(PolyVector(3, 3, [{}, {X123: 32}]), basis)
        v16 = pack(PolyVector(3, 3, [{}, {X123: 16}]), basis)
        assert member(lat, v32) and not member(lat, v16)

    def test_below_generators_is_zero(self, s6):
        m = graph_cohomology(s6, 1, 4)
        lonely = GradedSubmodule(3, m.vertices, 1, m.generators[1:], m.freeness, m.torsion, m.slices)
        assert span_slice(lonely, 1, 2) == Lattice.zero(2 * 6)

    def test_modulus_must_divide(self, s6):
        m = graph_cohomology(s6, 4, 2)
        with pytest.raises(ValueError):
            span_slice(m, 3, 1)


class TestExtractGenerators:
    @pytest.mark.parametrize("w", [[1], [3, -2], [0, 0, 5], [2, 4, 6]])
    def test_single_edge(self, w):
        r = len(w)
        m = graph_cohomology(single_edge(w), 1, 3)
        one, alpha = m.generators
        assert one == PolyVector(r, 0, [{(0,) * r: 1}, {(0,) * r: 1}])
        assert alpha in (PolyVector(r, 1, [{}, linear_form(w)]), -PolyVector(r, 1, [{}, linear_form(w)]))

    def test_s6_h(self, s6):
        m = graph_cohomology(s6, 1, 4)
        assert m.generator_degrees == [0, 3]
        assert alpha_coefficient(m, 3, X123) == 12
        assert all(m.freeness)

    def test_s6_gamma4(self, s6):
        m = graph_cohomology(s6, 4, 4)
        assert m.generator_degrees == [0, 2]
        assert m.generators[1] == PolyVector(3, 2, [{}, {(1, 1, 0): 16}])

    def test_torsion_is_flagged_not_fatal(self):
        g = GkmGraph.build(1, ["v"], [])
        m = extract_generators([Lattice.from_generators([[2]]), Lattice.full(1)], 1, g)
        assert m.freeness == (True, False)
        assert m.torsion == ((), (2,))
        assert m.generator_degrees == [0, 1]


class TestHilbert:
    def test_examples(self, s6):
        m = graph_cohomology(single_edge([1]), 1, 3)
        assert hilbert_rank(m, 3) == 2
        hs = graph_cohomology(s6, 1, 4)
        assert hilbert_rank(hs, 3) == comb(5, 2) + comb(2, 2) == 11
        empty = GradedSubmodule(2, ("a",), 1, (), (), (), ())
        assert hilbert_rank(empty, 4) == 0

    @pytest.mark.parametrize("name", fixtures.names())
    def test_certificate_on_fixtures(self, name):
        g = fixtures.load(name)
        m = graph_cohomology(g, 1, 4)
        assert all(m.freeness)
        assert hilbert_certificate(m)


class TestRationalDimension:
    def test_examples(self, s6):
        assert rational_dimension(fixtures.load("s2"), 1, 1) == 2
        assert rational_dimension(s6, 1, 3) == 11
        for d in range(4):
            assert rational_dimension(fixtures.load("edgeless"), 1, d) == 3 * comb(d + 1, 1)


def random_graph(rng, nv=3, r=2, ne=3, bound=4):
    names = [f"v{i}" for i in range(nv)]
    es = []
    for _ in range(ne):
        a, b = rng.sample(range(nv), 2)
        w = [0] * r
        while not any(w):
            w = [rng.randint(-bound, bound) for _ in range(r)]
        es.append((names[a], names[b], w))
    return GkmGraph.build(r, names, es)


def unimodular(rng, r, steps=6):
    m = [[int(i == j) for j in range(r)] for i in range(r)]
    for _ in range(steps):
        i, j = rng.sample(range(r), 2)
        k = rng.choice([-2, -1, 1, 2])
        m[i] = [x + k * y for x, y in zip(m[i], m[j])]
    return m


@pytest.mark.parametrize("seed", range(12))
def test_random_graph_invariants(seed):
    rng = random.Random(seed)
    g = random_graph(rng, nv=rng.choice([2, 3]), ne=rng.choice([2, 3, 4]))
    D = 3
    m = graph_cohomology(g, 1, D)
    for d in range(D + 1):
        assert m.slices[d].rank == rational_dimension(g, 1, d)
        assert span_slice(m, 1, d) == m.slices[d]

    # adding an edge only shrinks
    bigger = random_graph(rng, nv=len(g.vertices), ne=1)
    g2 = GkmGraph(g.rank, g.vertices, g.edges + bigger.edges)
    for d in range(D + 1):
        assert cohomology_slice(g2, 1, d).issubset(m.slices[d])

    # sign flips and unimodular changes of variables preserve ranks and factors
    u = unimodular(rng, g.rank)
    moved = g.with_weights([[sum(u[i][j] * e.weight[j] for j in range(g.rank)) for i in range(g.rank)] for e in g.edges])
    flipped = g.with_weights([[-x if k % 2 else x for x in e.weight] for k, e in enumerate(g.edges)])
    for other in (moved, flipped):
        m2 = graph_cohomology(other, 1, D)
        assert [s.rank for s in m2.slices] == [s.rank for s in m.slices]
        assert m2.generator_degrees == m.generator_degrees
        assert m2.torsion == m.torsion
    assert graph_cohomology(flipped, 1, D).slices == m.slices
