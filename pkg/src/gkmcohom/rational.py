"""Gaussian elimination over Q with exact fractions.

Kept separate from the Hermite machinery so it can serve as an independent
check on ranks computed over Z.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rational_rank(m: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in row] for row in m if any(row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[col]
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            if f:
                f *= inv
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank
