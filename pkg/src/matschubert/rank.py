"""Exact rank of integer matrices without leaving Z."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping, Sequence

__all__ = ["sparse_rank", "bareiss_rank", "SparseEchelon"]


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


class SparseEchelon:
    """Incremental fraction-free row echelon form over sparse integer rows.

    Each stored row has a distinct leading column and primitive content.  A
    new row is cleared against stored pivots by cross-multiplication,
    ``row <- (b/g) * row - (a/g) * pivot`` with g = gcd(a, b), so entries stay
    integral and small.
    """

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: Mapping[int, int]) -> bool:
        """Insert a row; return True if it raised the rank."""
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                row = _primitive(row)
                self.pivots[lead] = row
                return True
            a, b = row[lead], piv[lead]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {c: fb * v for c, v in row.items()}
            for c, v in piv.items():
                s = new.get(c, 0) - fa * v
                if s:
                    new[c] = s
                else:
                    new.pop(c, None)
            row = _primitive(new) if new else new
        return False


def sparse_rank(rows: Iterable[Mapping[int, int]]) -> int:
    ech = SparseEchelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank by Bareiss one-step fraction-free elimination on a dense copy."""
    a = [list(map(int, r)) for r in matrix]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, nrows) if a[r][col]), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            f = a[r][col]
            row_r, row_p = a[r], a[rank]
            for c in range(col, ncols):
                # exact by Sylvester's identity
                row_r[c] = (p * row_r[c] - f * row_p[c]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank
