"""Degreewise graph cohomology over ``R_n`` and graded generator extraction.

Every graded module here is handled one polynomial degree at a time. The
degree-``d`` slice of a submodule of ``R^V`` is a lattice in
``Z^(|V| * |monomials of degree d|)`` (vertex-major packing), so equalities and
intersections of modules become canonical-HNF lattice operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .gkmgraph import GkmGraph, subgraph_mod_n
from .intlinalg import ContainmentError, Lattice, image, preimage, quotient_with_lifts
from .polyring import (
    PolyVector,
    linear_form,
    mono_mul,
    monomial_basis,
    mult_matrix,
    pack,
    rn_scale,
    unpack,
)
from .rational import rational_rank


class InconsistencyError(RuntimeError):
    """An internal invariant failed; indicates a bug rather than bad input."""


@dataclass(frozen=True)
class GradedSubmodule:
    """A graded ``R_n``-submodule of ``R^V`` known up to ``max_degree``.

    ``slices[d]`` is the degree-``d`` lattice and ``generators`` a minimal
    homogeneous generating set for it, in the sense that each generator of
    degree ``d`` is needed to pass from the ``R_n``-span of the lower ones to
    ``slices[d]``. ``freeness[d]`` is False when that passage involved a
    torsion quotient; the factors are kept in ``torsion[d]``.
    """

    rank: int
    vertices: tuple[str, ...]
    ring_modulus: int
    generators: tuple[PolyVector, ...]
    freeness: tuple[bool, ...]
    torsion: tuple[tuple[int, ...], ...]
    slices: tuple[Lattice, ...]

    @property
    def max_degree(self) -> int:
        return len(self.slices) - 1

    @property
    def generator_degrees(self) -> list[int]:
        return [gen.degree for gen in self.generators]

    def slice(self, d: int) -> Lattice:
        return self.slices[d]


def _slice_dim(g: GkmGraph, d: int) -> int:
    return len(g.vertices) * len(monomial_basis(g.rank, d))


def _direct_sum(parts: Sequence[Lattice]) -> Lattice:
    total = sum(p.ambient_dim for p in parts)
    rows = []
    offset = 0
    for p in parts:
        for row in p.basis:
            rows.append((0,) * offset + row + (0,) * (total - offset - p.ambient_dim))
        offset += p.ambient_dim
    # block-diagonal HNF blocks are already in canonical form
    return Lattice(total, tuple(rows))


def cohomology_slice(g: GkmGraph, n: int, d: int) -> Lattice:
    """Degree-``d`` slice of the graph cohomology of ``Gamma_n`` over ``R_n``.

    The result is ``{f in (n^d Z^B)^V : f_a - f_b in alpha(e) * n^(d-1) Z^B'
    for every edge e = (a, b) of Gamma_n}``. It is computed by writing
    ``f = n^d h`` and taking one preimage under the stacked difference map.
    """
    gn = subgraph_mod_n(g, n)
    basis = monomial_basis(g.rank, d)
    b = len(basis)
    nv = len(g.vertices)
    scale = rn_scale(n, d)
    if not gn.edges:
        return Lattice.full(nv * b, scale)

    diff_rows = []
    targets = []
    for e in gn.edges:
        for i in range(b):
            row = [0] * (nv * b)
            row[e.a * b + i] += scale
            row[e.b * b + i] -= scale
            diff_rows.append(row)
        if d == 0:
            targets.append(Lattice.zero(b))
        else:
            mult = mult_matrix(linear_form(e.weight), g.rank, d - 1)
            s = rn_scale(n, d - 1)
            targets.append(image([[s * x for x in row] for row in mult], b))
    h = preimage(diff_rows, _direct_sum(targets), nv * b)
    return h.scaled(scale)


def cohomology_slices(g: GkmGraph, n: int, max_degree: int) -> list[Lattice]:
    return [cohomology_slice(g, n, d) for d in range(max_degree + 1)]


def _span(generators: Sequence[PolyVector], r: int, nv: int, n: int, d: int) -> Lattice:
    basis = monomial_basis(r, d)
    rows = []
    for gen in generators:
        k = d - gen.degree
        if k < 0:
            continue
        c = rn_scale(n, k)
        for mu in monomial_basis(r, k).monomials:
            rows.append(pack(gen.times_monomial(mu, c), basis))
    return Lattice.from_generators(rows, nv * len(basis))


def span_slice(m: GradedSubmodule, n: int, d: int) -> Lattice:
    """Degree-``d`` slice of the ``R_n``-span of ``m``'s generators.

    Only ``R_n`` coefficients are allowed, so a generator of degree ``d_j`` is
    multiplied by ``n^(d - d_j)`` times monomials.
    """
    if n < 1 or m.ring_modulus % n:
        raise ValueError(f"cannot extend coefficients from R_{m.ring_modulus} to R_{n}: {n} must divide {m.ring_modulus}")
    return _span(m.generators, m.rank, len(m.vertices), n, d)


def extract_generators(slices: Sequence[Lattice], n: int, g: GkmGraph) -> GradedSubmodule:
    r, nv = g.rank, len(g.vertices)
    for d, sl in enumerate(slices):
        if sl.ambient_dim != _slice_dim(g, d):
            raise ValueError(f"slice {d} lives in Z^{sl.ambient_dim}, expected Z^{_slice_dim(g, d)}")
    gens: list[PolyVector] = []
    freeness = []
    torsion = []
    for d, sl in enumerate(slices):
        spanned = _span(gens, r, nv, n, d)
        try:
            lifts, factors = quotient_with_lifts(spanned, sl)
        except ContainmentError as exc:
            raise InconsistencyError(f"span of lower generators escapes the degree-{d} slice") from exc
        basis = monomial_basis(r, d)
        gens.extend(unpack(v, basis, nv) for v in lifts)
        freeness.append(all(f == 0 for f in factors))
        torsion.append(tuple(f for f in factors if f > 1))
    module = GradedSubmodule(r, g.vertices, n, tuple(gens), tuple(freeness), tuple(torsion), tuple(slices))
    for d, sl in enumerate(slices):
        if span_slice(module, n, d) != sl:
            raise InconsistencyError(f"generators do not reproduce the degree-{d} slice")
    return module


def graph_cohomology(g: GkmGraph, n: int, max_degree: int) -> GradedSubmodule:
    """``H*_{T/T_n}(Gamma_n)`` up to polynomial degree ``max_degree``."""
    return extract_generators(cohomology_slices(g, n, max_degree), n, g)


def hilbert_rank(m: GradedSubmodule, d: int) -> int:
    """Slice rank in degree ``d`` if ``m`` were free on its generators."""
    r = m.rank
    return sum(comb(d - dj + r - 1, r - 1) for dj in m.generator_degrees if dj <= d)


def hilbert_certificate(m: GradedSubmodule) -> bool:
    return all(m.slices[d].rank == hilbert_rank(m, d) for d in range(m.max_degree + 1))


def rational_dimension(g: GkmGraph, n: int, d: int) -> int:
    """Q-dimension of the degree-``d`` slice of graph cohomology of ``Gamma_n``.

    Solves ``f_a - f_b = alpha(e) q_e`` over Q by fraction elimination. The
    map ``(f, q) -> f`` is injective because ``alpha(e)`` is a nonzero divisor,
    so the solution space dimension is the answer.
    """
    gn = subgraph_mod_n(g, n)
    monos = monomial_basis(g.rank, d).monomials
    lower = monomial_basis(g.rank, d - 1).monomials if d > 0 else ()
    nv, b, bl = len(g.vertices), len(monos), len(lower)
    nunknowns = nv * b + len(gn.edges) * bl
    eqs = []
    for k, e in enumerate(gn.edges):
        offset = nv * b + k * bl
        for i, mu in enumerate(monos):
            row = [0] * nunknowns
            row[e.a * b + i] += 1
            row[e.b * b + i] -= 1
            for j, nu in enumerate(lower):
                for var, w in enumerate(e.weight):
                    if w and mono_mul(nu, tuple(int(t == var) for t in range(g.rank))) == mu:
                        row[offset + j] -= w
            eqs.append(row)
    return nunknowns - rational_rank(eqs)
