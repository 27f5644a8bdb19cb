"""Rank matrices, Rothe diagrams, essential sets and effective regions.

All box sets live on the grid of the normalized permutation; by the S_infinity
identification the diagram does not depend on how many trailing fixed points
the word carries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .perm import Permutation, PermutationError, normalize

__all__ = [
    "Box",
    "BoxSet",
    "RankMatrix",
    "rank_matrix",
    "rothe_diagram",
    "essential_set",
    "effective_region",
    "is_dominant",
    "is_young_diagram",
    "row_lengths",
    "render",
]

Box = tuple[int, int]


@dataclass(frozen=True)
class BoxSet:
    """Finite set of (row, col) cells, iterated in row-major order."""

    boxes: tuple[Box, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ordered = tuple(sorted(set(self.boxes)))
        object.__setattr__(self, "boxes", ordered)
        object.__setattr__(self, "_members", frozenset(ordered))

    @classmethod
    def of(cls, boxes: Iterable[Box]) -> "BoxSet":
        return cls(tuple((int(i), int(j)) for i, j in boxes))

    def __iter__(self) -> Iterator[Box]:
        return iter(self.boxes)

    def __len__(self) -> int:
        return len(self.boxes)

    def __contains__(self, box) -> bool:
        return box in self._members

    def issubset(self, other: "BoxSet") -> bool:
        return self._members <= other._members

    def to_json(self) -> list[list[int]]:
        return [[i, j] for i, j in self.boxes]


@dataclass(frozen=True)
class RankMatrix:
    """r_ij = number of permutation-matrix dots weakly northwest of (i, j)."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij: Box) -> int:
        i, j = ij
        if i == 0 or j == 0:
            return 0
        return self.entries[i - 1][j - 1]

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def rank_matrix(w: Permutation, n: int | None = None) -> RankMatrix:
    size = normalize(w).n
    if n is None:
        n = max(size, w.n)
    if n < size:
        raise PermutationError(f"grid size {n} smaller than permutation size {size}")
    rows = []
    prev = [0] * n
    for i in range(1, n + 1):
        wi = w(i)
        row = [prev[j - 1] + (1 if wi <= j else 0) for j in range(1, n + 1)]
        rows.append(tuple(row))
        prev = row
    return RankMatrix(n, tuple(rows))


def rothe_diagram(w: Permutation) -> BoxSet:
    w = normalize(w)
    inv = w.inverse_word()
    return BoxSet(
        tuple(
            (i, j)
            for i in range(1, w.n + 1)
            for j in range(1, w(i))
            if i < inv[j - 1]
        )
    )


def essential_set(w: Permutation) -> BoxSet:
    d = rothe_diagram(w)
    return BoxSet(
        tuple(
            (i, j) for i, j in d if (i, j + 1) not in d and (i + 1, j) not in d
        )
    )


def effective_region(w: Permutation) -> BoxSet:
    cells = set()
    for p, q in essential_set(w):
        cells.update((i, j) for i in range(1, p + 1) for j in range(1, q + 1))
    return BoxSet(tuple(cells))


def row_lengths(boxes: BoxSet) -> list[int]:
    """Number of boxes in each row 1..max_row."""
    if not len(boxes):
        return []
    counts = [0] * max(i for i, _ in boxes)
    for i, _ in boxes:
        counts[i - 1] += 1
    return counts


def is_young_diagram(boxes: BoxSet) -> bool:
    """True iff the boxes form a top-left justified partition shape."""
    lengths = row_lengths(boxes)
    expected = {(i, j) for i, ln in enumerate(lengths, start=1) for j in range(1, ln + 1)}
    if expected != set(boxes):
        return False
    return all(a >= b for a, b in zip(lengths, lengths[1:]))


def is_dominant(w: Permutation) -> bool:
    return effective_region(w) == rothe_diagram(w)


def render(w: Permutation) -> str:
    """Plain-text grid: ``*`` dot, ``#`` essential box, ``o`` other diagram box,
    ``+`` effective-region cell outside the diagram, ``.`` elsewhere."""
    w = normalize(w)
    d = rothe_diagram(w)
    e = essential_set(w)
    lam = effective_region(w)
    lines = []
    for i in range(1, w.n + 1):
        cells = []
        for j in range(1, w.n + 1):
            if w(i) == j:
                cells.append("*")
            elif (i, j) in e:
                cells.append("#")
            elif (i, j) in d:
                cells.append("o")
            elif (i, j) in lam:
                cells.append("+")
            else:
                cells.append(".")
        lines.append(" ".join(cells))
    return "\n".join(lines)
