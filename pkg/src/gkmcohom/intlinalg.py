"""Exact integer matrices and lattices.

Matrices are plain lists of rows of Python ints. A :class:`Lattice` is a
subgroup of ``Z^N`` stored through its canonical row Hermite normal form, so
two lattices are equal exactly when their bases are equal.

>>> hnf([[4, 6], [2, 2]])
[[2, 0], [0, 2]]
>>> intersect(Lattice.from_generators([[2, 0], [0, 1]]),
...           Lattice.from_generators([[1, 1]])).basis
((2, 2),)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

IntMatrix = list[list[int]]
Vector = Sequence[int]


class DimensionError(ValueError):
    """Raised when operands live in incompatible ambient spaces."""


class ContainmentError(ValueError):
    """Raised when a lattice expected to be a sublattice is not one."""


def _copy(m: Iterable[Iterable[int]]) -> IntMatrix:
    return [[int(x) for x in row] for row in m]


def _pivot(row: Sequence[int]) -> int:
    for j, x in enumerate(row):
        if x:
            return j
    return -1


def hnf(m: Iterable[Iterable[int]], ncols: int | None = None) -> IntMatrix:
    """Canonical row Hermite normal form of ``m``.

    Zero rows are dropped, pivots are positive and every entry above a pivot
    lies in ``[0, pivot)``. The row span over Z is unchanged.
    """
    a = _copy(m)
    if not a:
        return []
    ncols = len(a[0]) if ncols is None else ncols
    a = [row for row in a if any(row)]
    nrows = len(a)
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        while True:
            nz = [i for i in range(r, nrows) if a[i][col]]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(a[i][col]))
            a[r], a[best] = a[best], a[r]
            prow = a[r]
            p = prow[col]
            clean = True
            for i in range(r + 1, nrows):
                x = a[i][col]
                if x:
                    q = x // p
                    if q:
                        row = a[i]
                        for j in range(col, ncols):
                            if prow[j]:
                                row[j] -= q * prow[j]
                    if a[i][col]:
                        clean = False
            if clean:
                break
        if r < nrows and a[r][col]:
            prow = a[r]
            if prow[col] < 0:
                a[r] = prow = [-x for x in prow]
            p = prow[col]
            for i in range(r):
                q = a[i][col] // p
                if q:
                    row = a[i]
                    for j in range(col, ncols):
                        if prow[j]:
                            row[j] -= q * prow[j]
            r += 1
    return a[:r]


def _transpose(m: Sequence[Sequence[int]], nrows: int | None = None) -> IntMatrix:
    if not m:
        return [[] for _ in range(nrows or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    bt = _transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class Lattice:
    """A subgroup of ``Z^ambient_dim`` in canonical HNF basis."""

    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_generators(cls, gens: Iterable[Vector], ambient_dim: int | None = None) -> Lattice:
        rows = _copy(gens)
        if ambient_dim is None:
            if not rows:
                raise DimensionError("ambient_dim is required for an empty generator list")
            ambient_dim = len(rows[0])
        for row in rows:
            if len(row) != ambient_dim:
                raise DimensionError(f"generator of length {len(row)} in Z^{ambient_dim}")
        return cls(ambient_dim, tuple(tuple(r) for r in hnf(rows, ambient_dim)))

    @classmethod
    def zero(cls, ambient_dim: int) -> Lattice:
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int, scale: int = 1) -> Lattice:
        """``scale * Z^ambient_dim``."""
        return cls(
            ambient_dim,
            tuple(tuple(scale if i == j else 0 for j in range(ambient_dim)) for i in range(ambient_dim)),
        )

    @property
    def rank(self) -> int:
        return len(self.basis)

    def scaled(self, k: int) -> Lattice:
        if k == 0:
            return Lattice.zero(self.ambient_dim)
        return Lattice.from_generators([[k * x for x in row] for row in self.basis], self.ambient_dim)

    def __contains__(self, v: Vector) -> bool:
        return member(self, v)

    def issubset(self, other: Lattice) -> bool:
        return all(member(other, row) for row in self.basis)


def _reduce(basis: Sequence[Sequence[int]], v: Vector) -> tuple[list[int], list[int]]:
    """Reduce ``v`` against an HNF basis.

    Returns the canonical coset representative of ``v`` modulo the lattice
    (entries at pivot columns in ``[0, pivot)``) and the coefficients used.
    """
    v = list(v)
    coeffs = []
    for row in basis:
        c = _pivot(row)
        q = v[c] // row[c]
        coeffs.append(q)
        if q:
            for j in range(c, len(v)):
                if row[j]:
                    v[j] -= q * row[j]
    return v, coeffs


def member(lat: Lattice, v: Vector) -> bool:
    """Exact test for ``v`` being an integer combination of the basis."""
    if len(v) != lat.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} tested against Z^{lat.ambient_dim}")
    rem, _ = _reduce(lat.basis, v)
    return not any(rem)


def coordinates(lat: Lattice, v: Vector) -> list[int]:
    """Coefficients expressing ``v`` in the HNF basis of ``lat``."""
    rem, coeffs = _reduce(lat.basis, v)
    if any(rem):
        raise ContainmentError(f"{tuple(v)} is not in the lattice")
    return coeffs


def kernel(m: Sequence[Sequence[int]], ncols: int | None = None) -> Lattice:
    """Saturated lattice ``{v in Z^ncols : m v = 0}``.

    Row-reduces ``[m^T | I]``; rows whose ``m^T`` part vanishes carry a basis
    of the kernel in their identity part, and unimodularity of the row
    operations makes that basis saturated.
    """
    nrows = len(m)
    if ncols is None:
        if not nrows:
            raise DimensionError("ncols is required for a matrix without rows")
        ncols = len(m[0])
    aug = [[m[i][j] for i in range(nrows)] + [int(j == k) for k in range(ncols)] for j in range(ncols)]
    red = hnf(aug, nrows + ncols)
    tails = [row[nrows:] for row in red if not any(row[:nrows])]
    return Lattice.from_generators(tails, ncols)


def image(m: Sequence[Sequence[int]], nrows: int) -> Lattice:
    """Column span of ``m`` (``nrows`` x k) as a lattice in ``Z^nrows``."""
    return Lattice.from_generators(_transpose(m, nrows), nrows)


def intersect(a: Lattice, b: Lattice) -> Lattice:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"cannot intersect Z^{a.ambient_dim} with Z^{b.ambient_dim}")
    n = a.ambient_dim
    if not a.basis or not b.basis:
        return Lattice.zero(n)
    if a == b:
        return a
    ka = a.rank
    stacked = [[a.basis[i][j] for i in range(ka)] + [-row[j] for row in b.basis] for j in range(n)]
    ker = kernel(stacked, ka + b.rank)
    gens = [[sum(u[i] * a.basis[i][j] for i in range(ka) if u[i]) for j in range(n)] for u in ker.basis]
    return Lattice.from_generators(gens, n)


def intersect_all(lattices: Sequence[Lattice]) -> Lattice:
    result = lattices[0]
    for lat in lattices[1:]:
        result = intersect(result, lat)
    return result


def preimage(m: Sequence[Sequence[int]], sub: Lattice, ncols: int | None = None) -> Lattice:
    """``{v : m v in sub}`` for ``m`` of shape ``sub.ambient_dim`` x ``ncols``."""
    if len(m) != sub.ambient_dim:
        raise DimensionError(f"map has {len(m)} rows but the target lattice lives in Z^{sub.ambient_dim}")
    if ncols is None:
        if not m:
            raise DimensionError("ncols is required for a matrix without rows")
        ncols = len(m[0])
    if any(len(row) != ncols for row in m):
        raise DimensionError("ragged map matrix")
    if not m:
        return Lattice.full(ncols)
    stacked = [list(m[i]) + [-row[i] for row in sub.basis] for i in range(len(m))]
    ker = kernel(stacked, ncols + sub.rank)
    return Lattice.from_generators([row[:ncols] for row in ker.basis], ncols)


def _snf_core(m: Sequence[Sequence[int]], ncols: int):
    """Smith form with left transform, right transform and its inverse."""
    a = _copy(m)
    nrows = len(a)
    left = identity(nrows)
    right = identity(ncols)
    right_inv = identity(ncols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]
        right_inv[i], right_inv[j] = right_inv[j], right_inv[i]

    def add_row(src, dst, q):  # row dst += q * row src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(src, dst, q):  # col dst += q * col src
        for row in a:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]
        # inverse: row src -= q * row dst
        right_inv[src] = [x - q * y for x, y in zip(right_inv[src], right_inv[dst])]

    t = 0
    while t < min(nrows, ncols):
        entries = [(abs(a[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, nrows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    if a[t][j]:
                        done = False
            if done:
                bad = next(
                    ((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                add_row(bad[0], t, 1)
                continue
            _, i, j = min(
                (abs(a[i][j]), i, j)
                for i in range(t, nrows)
                for j in range(t, ncols)
                if a[i][j] and (i == t or j == t)
            )
            swap_rows(t, i)
            swap_cols(t, j)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        t += 1
    factors = [a[i][i] for i in range(t)]
    return factors, left, right, right_inv


def snf(m: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[list[int], IntMatrix, IntMatrix]:
    """Smith normal form.

    Returns ``(factors, left, right)`` with ``left @ m @ right`` diagonal, the
    nonzero diagonal being ``factors`` (each dividing the next). Both
    transforms are unimodular.

    >>> snf([[2, 0], [0, 3]])[0]
    [1, 6]
    """
    if ncols is None:
        ncols = len(m[0]) if m else 0
    factors, left, right, _ = _snf_core(m, ncols)
    return factors, left, right


def quotient_with_lifts(sub: Lattice, sup: Lattice) -> tuple[list[tuple[int, ...]], list[int]]:
    """Describe ``sup / sub`` as an abelian group.

    Returns lifts in ``sup`` whose classes generate the quotient, paired with
    invariant factors (``0`` marks a free summand). Trivial summands are
    omitted. Lifts are reduced modulo ``sub`` and the free ones are put in
    HNF, so the output does not depend on incidental choices in the Smith
    reduction.
    """
    if sub.ambient_dim != sup.ambient_dim:
        raise DimensionError("sub and sup live in different ambient spaces")
    try:
        coords = [coordinates(sup, row) for row in sub.basis]
    except ContainmentError as exc:
        raise ContainmentError("sub is not contained in sup") from exc
    k = sup.rank
    if k == 0:
        return [], []
    factors, _, _, right_inv = _snf_core(coords, k) if coords else ([], None, None, identity(k))
    new_basis = matmul(right_inv, [list(r) for r in sup.basis])
    padded = factors + [0] * (k - len(factors))

    torsion = []
    free = []
    for f, w in zip(padded, new_basis):
        if f == 1:
            continue
        rep, _ = _reduce(sub.basis, w)
        (free if f == 0 else torsion).append((f, rep))
    torsion.sort(key=lambda fw: (fw[0], fw[1]))
    free_rows = hnf([w for _, w in free], sup.ambient_dim) if free else []
    free_rows = [_reduce(sub.basis, w)[0] for w in free_rows]

    lifts = [tuple(w) for _, w in torsion] + [tuple(w) for w in free_rows]
    inv = [f for f, _ in torsion] + [0] * len(free_rows)
    return lifts, inv


def rank(m: Sequence[Sequence[int]]) -> int:
    return len(hnf(m))
