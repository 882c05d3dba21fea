"""Homogeneous slices of Z[x_1, ..., x_r] and vertex-indexed polynomial vectors.

Degrees here are polynomial degrees. A polynomial of degree ``d`` sits in
cohomological degree ``2d``; only user-facing output converts.

The subring ``R_n = Z[n x_1, ..., n x_r]`` is never given its own variables:
its degree-``d`` slice is ``n**d`` times the monomial lattice, expressed in the
ambient monomial coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Mapping, Sequence

Monomial = tuple[int, ...]
Poly = dict[Monomial, int]


@dataclass(frozen=True)
class SliceBasis:
    """Degree-``degree`` monomials in ``r`` variables, graded-lex ordered."""

    r: int
    degree: int
    monomials: tuple[Monomial, ...]
    index: Mapping[Monomial, int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.monomials)


@lru_cache(maxsize=None)
def monomial_basis(r: int, d: int) -> SliceBasis:
    if r < 1 or d < 0:
        raise ValueError(f"need r >= 1 and d >= 0, got r={r}, d={d}")
    monos = []
    for combo in combinations_with_replacement(range(r), d):
        e = [0] * r
        for i in combo:
            e[i] += 1
        monos.append(tuple(e))
    return SliceBasis(r, d, tuple(monos), {m: i for i, m in enumerate(monos)})


def slice_size(r: int, d: int) -> int:
    return comb(d + r - 1, r - 1)


def rn_scale(n: int, d: int) -> int:
    """Scale of the degree-``d`` slice of ``R_n`` inside the monomial lattice."""
    if n < 1 or d < 0:
        raise ValueError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    return n**d


def degree_of(m: Monomial) -> int:
    return sum(m)


def poly_degree(g: Mapping[Monomial, int]) -> int:
    """Degree of a nonzero homogeneous polynomial; raises otherwise."""
    degrees = {sum(m) for m, c in g.items() if c}
    if len(degrees) != 1:
        if not degrees:
            raise ValueError("the zero polynomial has no degree")
        raise ValueError(f"polynomial is not homogeneous (degrees {sorted(degrees)})")
    return degrees.pop()


def linear_form(weight: Sequence[int]) -> Poly:
    """The degree-1 polynomial ``sum w_i x_i``."""
    r = len(weight)
    return {tuple(int(i == j) for j in range(r)): int(w) for i, w in enumerate(weight) if w}


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def poly_mul(f: Mapping[Monomial, int], g: Mapping[Monomial, int]) -> Poly:
    out: Poly = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = mono_mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def mult_matrix(g: Mapping[Monomial, int], r: int, d: int) -> list[list[int]]:
    """Matrix of ``f -> g*f`` from degree ``d`` to degree ``d + deg g`` coordinates."""
    k = poly_degree(g)
    src = monomial_basis(r, d)
    dst = monomial_basis(r, d + k)
    mat = [[0] * len(src) for _ in range(len(dst))]
    for j, mu in enumerate(src.monomials):
        for nu, c in g.items():
            if c:
                mat[dst.index[mono_mul(mu, nu)]][j] += c
    return mat


class PolyVector:
    """A homogeneous element of ``R^V``: one sparse polynomial per vertex."""

    __slots__ = ("rank", "degree", "values")

    def __init__(self, rank: int, degree: int, values: Sequence[Mapping[Monomial, int]]):
        clean = []
        for poly in values:
            entry = {}
            for m, c in poly.items():
                m = tuple(int(x) for x in m)
                if len(m) != rank:
                    raise ValueError(f"monomial {m} has {len(m)} exponents, expected {rank}")
                if sum(m) != degree:
                    raise ValueError(f"monomial {m} has degree {sum(m)}, expected {degree}")
                if c:
                    entry[m] = entry.get(m, 0) + int(c)
            clean.append({m: c for m, c in entry.items() if c})
        self.rank = rank
        self.degree = degree
        self.values = tuple(clean)

    def __eq__(self, other):
        if not isinstance(other, PolyVector):
            return NotImplemented
        return (self.rank, self.degree, self.values) == (other.rank, other.degree, other.values)

    def __hash__(self):
        return hash((self.rank, self.degree, tuple(tuple(sorted(v.items())) for v in self.values)))

    def __repr__(self):
        parts = [format_poly(v) for v in self.values]
        return f"PolyVector(deg={self.degree}, ({', '.join(parts)}))"

    def __neg__(self) -> PolyVector:
        return PolyVector(self.rank, self.degree, [{m: -c for m, c in v.items()} for v in self.values])

    def __add__(self, other: PolyVector) -> PolyVector:
        if (self.rank, self.degree, len(self.values)) != (other.rank, other.degree, len(other.values)):
            raise ValueError("cannot add PolyVectors of different shape")
        vals = []
        for a, b in zip(self.values, other.values):
            s = dict(a)
            for m, c in b.items():
                s[m] = s.get(m, 0) + c
            vals.append(s)
        return PolyVector(self.rank, self.degree, vals)

    def scale(self, k: int) -> PolyVector:
        return PolyVector(self.rank, self.degree, [{m: k * c for m, c in v.items()} for v in self.values])

    def times_monomial(self, mu: Monomial, coeff: int = 1) -> PolyVector:
        return PolyVector(
            self.rank,
            self.degree + sum(mu),
            [{mono_mul(m, mu): coeff * c for m, c in v.items()} for v in self.values],
        )

    def is_zero(self) -> bool:
        return not any(self.values)


def pack(f: PolyVector, basis: SliceBasis) -> list[int]:
    """Coordinates of ``f`` in ``Z^(|V| * |basis|)``, vertex-major."""
    if f.degree != basis.degree or f.rank != basis.r:
        raise ValueError(f"PolyVector of degree {f.degree} does not fit slice of degree {basis.degree}")
    b = len(basis)
    out = [0] * (len(f.values) * b)
    for v, poly in enumerate(f.values):
        for m, c in poly.items():
            out[v * b + basis.index[m]] = c
    return out


def unpack(vec: Sequence[int], basis: SliceBasis, nvertices: int) -> PolyVector:
    b = len(basis)
    if len(vec) != nvertices * b:
        raise ValueError(f"vector of length {len(vec)} does not match {nvertices} x {b}")
    vals = []
    for v in range(nvertices):
        vals.append({basis.monomials[i]: vec[v * b + i] for i in range(b) if vec[v * b + i]})
    return PolyVector(basis.r, basis.degree, vals)


def format_monomial(m: Monomial) -> str:
    """``(1, 0, 2) -> 'x1*x3^2'``; the empty product is ``'1'``."""
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


def format_poly(p: Mapping[Monomial, int]) -> str:
    if not p:
        return "0"
    terms = []
    for m in sorted(p, reverse=True):
        c = p[m]
        mono = format_monomial(m)
        if mono == "1":
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append(f"-{mono}")
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms).replace("+ -", "- ")
