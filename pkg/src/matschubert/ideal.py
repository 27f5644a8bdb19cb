"""Fulton generators of Schubert determinantal ideals and a brute-force oracle.

The oracle computes dim (S/I)_k directly: it spans the degree-k piece of I by
all products monomial * generator, takes the exact integer rank of their
coefficient vectors, and subtracts from the number of degree-k monomials.  It
shares no code with the Grothendieck pipeline it is meant to check.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from . import diagram
from .hilbert import AmbientSpec, hilbert_function, k_polynomial
from .perm import Permutation, normalize
from .poly import MultiPoly
from .rank import SparseEchelon

__all__ = [
    "MinorSpec",
    "GeneratorSet",
    "TooLarge",
    "DEFAULT_MAX_MONOMIALS",
    "DEFAULT_MAX_ROWS",
    "fulton_generators",
    "expand_minor",
    "brute_force_hf",
    "CrossCheckReport",
    "cross_check",
]

DEFAULT_MAX_MONOMIALS = 20_000
DEFAULT_MAX_ROWS = 200_000


class TooLarge(RuntimeError):
    """The requested graded piece exceeds the tractability guard."""


@dataclass(frozen=True)
class MinorSpec:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    box: tuple[int, int]
    rank: int

    def __post_init__(self):
        i, j = self.box
        if len(self.rows) != len(self.cols) or len(self.rows) != self.rank + 1:
            raise ValueError("minor size must equal rank + 1 on both sides")
        if list(self.rows) != sorted(set(self.rows)) or list(self.cols) != sorted(set(self.cols)):
            raise ValueError("row and column indices must be strictly ascending")
        if self.rows[-1] > i or self.cols[-1] > j or self.rows[0] < 1 or self.cols[0] < 1:
            raise ValueError(f"minor {self.rows}x{self.cols} leaves the {i}x{j} corner")

    @property
    def size(self) -> int:
        return len(self.rows)

    def variables(self) -> list[tuple[int, int]]:
        return [(r, c) for r in self.rows for c in self.cols]

    def to_json(self) -> dict:
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "box": list(self.box),
            "rank": self.rank,
        }


@dataclass(frozen=True)
class GeneratorSet:
    variables: tuple[tuple[int, int], ...]
    minors: tuple[MinorSpec, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {v: k for k, v in enumerate(self.variables, start=1)}
        object.__setattr__(self, "_index", index)
        for m in self.minors:
            for v in m.variables():
                if v not in index:
                    raise ValueError(f"minor on rows {m.rows} cols {m.cols} uses z{v} outside the ambient")

    def variable_index(self, box: tuple[int, int]) -> int:
        return self._index[box]

    def polynomials(self) -> list[MultiPoly]:
        return [expand_minor(m, self.variables) for m in self.minors]

    def to_json(self, expand: bool = False) -> dict:
        out = {
            "variables": [list(v) for v in self.variables],
            "minors": [m.to_json() for m in self.minors],
        }
        if expand:
            out["polynomials"] = [p.to_json() for p in self.polynomials()]
        return out


def _ambient_variables(w: Permutation, ambient: AmbientSpec) -> tuple[tuple[int, int], ...]:
    if ambient.kind == "full":
        n = ambient.n
        return tuple((i, j) for i in range(1, n + 1) for j in range(1, n + 1))
    return diagram.effective_region(w).boxes


def fulton_generators(
    w: Permutation, essential_only: bool = True, ambient: AmbientSpec | None = None
) -> GeneratorSet:
    """Size r_ij + 1 minors of the northwest i x j corner of the generic matrix.

    With ``essential_only`` the boxes (i, j) range over the essential set;
    otherwise over the whole grid (the ambient n for a full ambient, the
    normalized size for an effective one).  Duplicate (rows, cols) pairs keep
    the first source box in row-major order.
    """
    w = normalize(w)
    if ambient is None:
        ambient = AmbientSpec.full(w.n)
    ambient.check(w)
    grid = ambient.n if ambient.kind == "full" else w.n
    ranks = diagram.rank_matrix(w, grid)
    if essential_only:
        boxes = list(diagram.essential_set(w))
    else:
        boxes = [(i, j) for i in range(1, grid + 1) for j in range(1, grid + 1)]
    minors: list[MinorSpec] = []
    seen = set()
    for i, j in boxes:
        r = ranks[i, j]
        size = r + 1
        if size > min(i, j):
            continue
        for rows in itertools.combinations(range(1, i + 1), size):
            for cols in itertools.combinations(range(1, j + 1), size):
                if (rows, cols) in seen:
                    continue
                seen.add((rows, cols))
                minors.append(MinorSpec(rows, cols, (i, j), r))
    return GeneratorSet(_ambient_variables(w, ambient), tuple(minors))


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            if p[a] > p[b]:
                sign = -sign
    return sign


def expand_minor(m: MinorSpec, variables: Sequence[tuple[int, int]] | None = None) -> MultiPoly:
    """Leibniz expansion; z_ij becomes x_k where k is its 1-based position in
    ``variables`` (default: row-major over the source box's corner)."""
    if variables is None:
        i, j = m.box
        variables = [(a, b) for a in range(1, i + 1) for b in range(1, j + 1)]
    index = {v: k for k, v in enumerate(variables)}
    nv = len(variables)
    terms: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(m.size)):
        exps = [0] * nv
        for a, b in enumerate(perm):
            exps[index[(m.rows[a], m.cols[b])]] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + _perm_sign(perm)
    return MultiPoly(terms)


def _monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the given degree in descending lexicographic order."""
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def _guard_limits(max_monomials: int | None, max_rows: int | None) -> tuple[int, int]:
    if max_monomials is None:
        max_monomials = int(os.environ.get("SCHUBERT_MAX_MONOMIALS", DEFAULT_MAX_MONOMIALS))
    if max_rows is None:
        max_rows = DEFAULT_MAX_ROWS
    return max_monomials, max_rows


def brute_force_hf(
    gens: GeneratorSet,
    k: int,
    max_monomials: int | None = None,
    max_rows: int | None = None,
) -> int:
    """dim_k (S/I) by exact linear algebra on the degree-k piece."""
    max_monomials, max_rows = _guard_limits(max_monomials, max_rows)
    V = len(gens.variables)
    if k < 0:
        return 0
    total = comb(V + k - 1, k) if V else (1 if k == 0 else 0)
    if total > max_monomials:
        raise TooLarge(f"{total} monomials of degree {k} in {V} variables exceeds {max_monomials}")
    polys = [(m.size, p) for m, p in zip(gens.minors, gens.polynomials()) if m.size <= k]
    n_rows = sum(comb(V + k - d - 1, k - d) for d, _ in polys)
    if n_rows > max_rows:
        raise TooLarge(f"{n_rows} generator multiples exceeds {max_rows}")
    if not polys:
        return total
    column = {e: c for c, e in enumerate(_monomials(V, k))}
    ech = SparseEchelon()
    for d, p in polys:
        terms = [(e + (0,) * (V - len(e)), c) for e, c in p.terms.items()]
        for mono in _monomials(V, k - d):
            row = {}
            for e, c in terms:
                row[column[tuple(x + y for x, y in zip(mono, e))]] = c
            ech.add(row)
            if ech.rank == total:
                return 0
    return total - ech.rank


@dataclass
class CrossCheckReport:
    permutation: Permutation
    ambient: AmbientSpec
    k_max: int
    expected: list[int]
    actual: list[int]
    all_boxes: list[int] | None
    mismatches: list[str]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "permutation": list(self.permutation.word),
            "ambient": self.ambient.to_json(),
            "k_max": self.k_max,
            "expected": [str(v) for v in self.expected],
            "actual": [str(v) for v in self.actual],
            "all_boxes": None if self.all_boxes is None else [str(v) for v in self.all_boxes],
            "passed": self.passed,
            "mismatches": self.mismatches,
        }

    def format(self) -> str:
        lines = [f"oracle check for {self.permutation} ({self.ambient.kind}, N = {self.ambient.variable_count})"]
        for k in range(self.k_max + 1):
            extra = "" if self.all_boxes is None else f"  all-boxes {self.all_boxes[k]}"
            lines.append(f"k={k}: series {self.expected[k]}  brute force {self.actual[k]}{extra}")
        lines.append("PASS" if self.passed else "FAIL")
        lines.extend(self.mismatches)
        return "\n".join(lines)


def cross_check(
    w: Permutation,
    ambient: AmbientSpec,
    k_max: int,
    compare_all_boxes: bool = True,
    max_monomials: int | None = None,
) -> CrossCheckReport:
    """Compare brute-force graded dimensions with the K-polynomial series.

    With ``compare_all_boxes`` the generator list over every box is checked
    too; for an effective ambient this is skipped when some of those minors
    leave the effective variables.
    """
    w = normalize(w)
    N = ambient.variable_count
    K = k_polynomial(w)
    ess = fulton_generators(w, True, ambient)
    full_gens = None
    if compare_all_boxes:
        try:
            full_gens = fulton_generators(w, False, ambient)
        except ValueError:
            full_gens = None
    expected, actual, all_boxes, bad = [], [], [] if full_gens else None, []
    for k in range(k_max + 1):
        e = hilbert_function(K, N, k)
        a = brute_force_hf(ess, k, max_monomials)
        expected.append(e)
        actual.append(a)
        if a != e:
            bad.append(f"w={w} k={k}: expected {e} from the K-polynomial, brute force gave {a}")
        if full_gens is not None:
            b = brute_force_hf(full_gens, k, max_monomials)
            all_boxes.append(b)
            if b != a:
                bad.append(f"w={w} k={k}: essential generators give {a}, all boxes give {b}")
    return CrossCheckReport(w, ambient, k_max, expected, actual, all_boxes, bad)
