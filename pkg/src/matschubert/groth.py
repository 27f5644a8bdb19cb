"""Grothendieck polynomials by two independent routes.

:class:`TransitionEngine` runs Lascoux's transition recursion down to
``G_id = 1``.  :func:`pipe_dream_grothendieck` sums signed weights over all
(possibly non-reduced) pipe dreams in the staircase whose Demazure product is
``w``.  The second route shares nothing with the first beyond the
permutation type and polynomial arithmetic.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import diagram
from .perm import (
    Permutation,
    PermutationError,
    apply_transposition,
    coxeter_length,
    descents,
    is_length_increasing_transposition,
    normalize,
)
from .poly import MultiPoly, total_degree

__all__ = [
    "TransitionData",
    "TransitionEngine",
    "PipeDream",
    "transition_step",
    "grothendieck",
    "demazure_product",
    "pipe_dream_word",
    "pipe_dreams",
    "pipe_dream_table",
    "pipe_dream_grothendieck",
    "groth_degree",
    "dominant_monomial",
    "all_grothendiecks",
]


@dataclass(frozen=True)
class TransitionData:
    g: int
    m: int
    w_prime: Permutation
    i_list: tuple[int, ...]


def transition_step(w: Permutation) -> TransitionData:
    """Locate the last descent g, its partner m, w' = w t_{g<->m} and the i_j."""
    w = normalize(w)
    desc = descents(w)
    if not desc:
        raise PermutationError("no descent: the identity has no transition")
    g = desc[-1]
    m = max(c for c in range(g + 1, w.n + 1) if w(c) < w(g))
    w_prime = apply_transposition(w, g, m)
    i_list = tuple(
        i for i in range(1, g) if is_length_increasing_transposition(w_prime, i, g)
    )
    return TransitionData(g, m, w_prime, i_list)


class TransitionEngine:
    """Memoized transition recursion.

    The cache maps normalized words to polynomials.  Inserts are guarded by a
    lock; concurrent computations of the same entry produce identical values,
    so last write wins harmlessly.  With ``check_invariants`` set, every
    permutation on the right-hand side of a transition is checked to have an
    effective region strictly inside that of ``w``.
    """

    def __init__(self, check_invariants: bool = False):
        self.check_invariants = check_invariants
        self._cache: dict[tuple[int, ...], MultiPoly] = {(1,): MultiPoly.constant(1)}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._cache)

    def expansion(self, w: Permutation) -> tuple[TransitionData, list[tuple[int, Permutation]]]:
        """Signed terms of G_{w'} (Id - t_{i_1<->g}) ... (Id - t_{i_s<->g}).

        Each subset S of the i_j contributes (-1)^|S| G_u with u obtained from
        w' by applying the transpositions of S in increasing order.
        """
        data = transition_step(w)
        terms = []
        for size in range(len(data.i_list) + 1):
            for subset in itertools.combinations(data.i_list, size):
                u = data.w_prime
                for i in subset:
                    u = apply_transposition(u, i, data.g)
                terms.append(((-1) ** size, u))
        return data, terms

    def __call__(self, w: Permutation) -> MultiPoly:
        key = normalize(w).word
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        w = Permutation(key)
        data, terms = self.expansion(w)
        if self.check_invariants:
            self._check_shrinks(w, [data.w_prime] + [u for _, u in terms])
        bracket = MultiPoly()
        for sign, u in terms:
            g_u = self(u)
            bracket = bracket + g_u if sign > 0 else bracket - g_u
        result = self(data.w_prime) + (MultiPoly.var(data.g) - 1) * bracket
        with self._lock:
            self._cache[key] = result
        return result

    @staticmethod
    def _check_shrinks(w: Permutation, others: Iterable[Permutation]) -> None:
        lam = diagram.effective_region(w)
        for u in others:
            lam_u = diagram.effective_region(u)
            if not (lam_u.issubset(lam) and len(lam_u) < len(lam)):
                raise AssertionError(
                    f"effective region of {u} is not strictly inside that of {w}"
                )


_default_engine = TransitionEngine()


def grothendieck(w: Permutation, engine: TransitionEngine | None = None) -> MultiPoly:
    return (engine or _default_engine)(w)


def groth_degree(w: Permutation, engine: TransitionEngine | None = None) -> int:
    return total_degree(grothendieck(w, engine))


def dominant_monomial(w: Permutation) -> MultiPoly:
    """prod x_i over the boxes (i, j) of the effective region."""
    exps = diagram.row_lengths(diagram.effective_region(w))
    return MultiPoly({tuple(exps): 1})


# --- pipe dreams --------------------------------------------------------


@dataclass(frozen=True)
class PipeDream:
    """Cross tiles inside the staircase {(i, j) : i + j <= n}."""

    n: int
    crosses: diagram.BoxSet

    def __post_init__(self):
        for i, j in self.crosses:
            if i + j > self.n:
                raise ValueError(f"cross {(i, j)} outside the staircase of size {self.n}")

    def word(self) -> list[int]:
        return pipe_dream_word(self.crosses)

    def weight(self) -> MultiPoly:
        exps = [0] * self.n
        for i, _ in self.crosses:
            exps[i - 1] += 1
        return MultiPoly({tuple(exps): 1})


def demazure_product(word: Sequence[int]) -> Permutation:
    """Fold s_i left to right, absorbing letters that would not raise length."""
    size = max(word, default=0) + 1
    u = list(range(1, size + 1))
    for i in word:
        if i < 1:
            raise PermutationError("simple reflection indices are >= 1")
        if u[i - 1] < u[i]:
            u[i - 1], u[i] = u[i], u[i - 1]
    return normalize(Permutation(tuple(u)))


def pipe_dream_word(crosses: Iterable[tuple[int, int]]) -> list[int]:
    """Labels s_{i+j-1}, rows top to bottom, each row right to left."""
    ordered = sorted(crosses, key=lambda b: (b[0], -b[1]))
    return [i + j - 1 for i, j in ordered]


def _staircase_reading_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n) for j in range(n - i, 0, -1)]


@lru_cache(maxsize=8)
def pipe_dream_table(n: int) -> dict[tuple[int, ...], MultiPoly]:
    """G_w for every w in S_n from a single sweep over all staircase subsets.

    Keys are normalized words.  The sweep is a depth-first walk over cells in
    reading order, carrying the running Demazure product and row exponents.
    """
    if n < 1:
        raise PermutationError("n must be >= 1")
    cells = _staircase_reading_order(n)
    acc: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}

    u = list(range(1, n + 1))
    exps = [0] * n

    def walk(pos: int, size: int) -> None:
        if pos == len(cells):
            key = normalize(Permutation(tuple(u))).word
            bucket = acc.setdefault(key, {})
            e = tuple(exps)
            bucket[e] = bucket.get(e, 0) + (-1) ** size
            return
        walk(pos + 1, size)
        i, j = cells[pos]
        k = i + j - 1
        swapped = u[k - 1] < u[k]
        if swapped:
            u[k - 1], u[k] = u[k], u[k - 1]
        exps[i - 1] += 1
        walk(pos + 1, size + 1)
        exps[i - 1] -= 1
        if swapped:
            u[k - 1], u[k] = u[k], u[k - 1]

    walk(0, 0)
    table = {}
    for key, terms in acc.items():
        sign = (-1) ** coxeter_length(Permutation(key))
        table[key] = MultiPoly({e: sign * c for e, c in terms.items()})
    return table


def pipe_dream_grothendieck(w: Permutation, n: int | None = None) -> MultiPoly:
    size = normalize(w).n
    if n is None:
        n = size
    if n < size:
        raise PermutationError(f"grid size {n} smaller than permutation size {size}")
    return pipe_dream_table(n).get(normalize(w).word, MultiPoly())


def pipe_dreams(w: Permutation, n: int | None = None) -> list[PipeDream]:
    """All pipe dreams in the size-n staircase with Demazure product w."""
    target = normalize(w)
    if n is None:
        n = target.n
    cells = _staircase_reading_order(n)
    found = []
    for mask in range(1 << len(cells)):
        chosen = [c for b, c in enumerate(cells) if mask >> b & 1]
        if demazure_product(pipe_dream_word(chosen)) == target:
            found.append(PipeDream(n, diagram.BoxSet.of(chosen)))
    return found


def all_grothendiecks(n: int, engine: TransitionEngine | None = None) -> dict[tuple[int, ...], MultiPoly]:
    """Transition-route polynomials for every w in S_n, keyed by normalized word."""
    engine = engine or _default_engine
    out = {}
    for word in itertools.permutations(range(1, n + 1)):
        w = normalize(Permutation(word))
        out[w.word] = engine(w)
    return out

