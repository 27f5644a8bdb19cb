"""Permutations of S_infinity in one-line notation.

Positions and values are 1-indexed, so ``w(i)`` is ``w.word[i - 1]``.  Two
words that differ only by trailing fixed points name the same element of
S_infinity; :func:`normalize` picks the representative with those stripped
(the identity becomes ``(1,)``).

>>> w = from_one_line([2, 5, 3, 1, 4])
>>> coxeter_length(w), descents(w)
(5, (2, 3))
>>> apply_transposition(w, 2, 5)
Permutation(2,4,3,1,5)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation",
    "PermutationError",
    "from_one_line",
    "parse",
    "identity",
    "simple_reflection",
    "coxeter_length",
    "descents",
    "apply_transposition",
    "is_length_increasing_transposition",
    "normalize",
    "enumerate_permutations",
    "bigrassmannian",
]


class PermutationError(ValueError):
    """Raised for malformed one-line words or invalid parameters."""


@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation.

    Construct through :func:`from_one_line` (validated) rather than directly.
    Equality is on the literal word; compare ``normalize(u) == normalize(v)``
    to test equality in S_infinity.
    """

    word: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        # fixed point beyond the stored word
        if i > len(self.word):
            return i
        return self.word[i - 1]

    def inverse_word(self) -> tuple[int, ...]:
        inv = [0] * len(self.word)
        for pos, val in enumerate(self.word, start=1):
            inv[val - 1] = pos
        return tuple(inv)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.word, start=1))

    def to_string(self) -> str:
        return ",".join(map(str, self.word))

    def __repr__(self) -> str:
        return f"Permutation({self.to_string()})"

    def __str__(self) -> str:
        return self.to_string()


def from_one_line(word: Iterable[int]) -> Permutation:
    """Validate ``word`` and wrap it, without normalizing."""
    word = tuple(int(v) for v in word)
    if not word:
        raise PermutationError("empty word")
    n = len(word)
    seen: dict[int, int] = {}
    for idx, v in enumerate(word, start=1):
        if v < 1 or v > n:
            raise PermutationError(f"value {v} at index {idx} out of range 1..{n}")
        if v in seen:
            raise PermutationError(f"duplicate value {v} at index {idx}")
        seen[v] = idx
    return Permutation(word)


def parse(text: str) -> Permutation:
    """Parse ``"2,5,3,1,4"`` or the compact ``"25314"`` form."""
    text = text.strip()
    if not text:
        raise PermutationError("empty permutation string")
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
    elif " " in text:
        parts = text.split()
    else:
        parts = list(text)
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise PermutationError(f"cannot parse permutation {text!r}") from None
    return from_one_line(values)


def identity(n: int = 1) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def simple_reflection(k: int) -> Permutation:
    """s_k = t_{k<->k+1}, normalized."""
    if k < 1:
        raise PermutationError("simple reflection index must be >= 1")
    word = list(range(1, k + 2))
    word[k - 1], word[k] = word[k], word[k - 1]
    return Permutation(tuple(word))


def coxeter_length(w: Permutation) -> int:
    word = w.word
    return sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if word[i] > word[j]
    )


def descents(w: Permutation) -> tuple[int, ...]:
    word = w.word
    return tuple(i for i in range(1, len(word)) if word[i - 1] > word[i])


def normalize(w: Permutation) -> Permutation:
    word = w.word
    n = len(word)
    while n > 1 and word[n - 1] == n:
        n -= 1
    if n == len(word):
        return w
    return Permutation(word[:n])


def _extended(word: Sequence[int], size: int) -> list[int]:
    word = list(word)
    word.extend(range(len(word) + 1, size + 1))
    return word


def apply_transposition(w: Permutation, a: int, b: int) -> Permutation:
    """Return w * t_{a<->b} (entries at positions a and b swapped), normalized."""
    if a == b:
        raise PermutationError("transposition needs two distinct positions")
    if a > b:
        a, b = b, a
    if a < 1:
        raise PermutationError("positions are 1-indexed")
    word = _extended(w.word, b)
    word[a - 1], word[b - 1] = word[b - 1], word[a - 1]
    return normalize(Permutation(tuple(word)))


def is_length_increasing_transposition(w: Permutation, a: int, b: int) -> bool:
    """True iff l(w * t_{a<->b}) = l(w) + 1.

    Uses the local criterion: w(a) < w(b) with no a < c < b such that
    w(a) < w(c) < w(b).
    """
    if a > b:
        a, b = b, a
    wa, wb = w(a), w(b)
    if wa > wb:
        return False
    return not any(wa < w(c) < wb for c in range(a + 1, b))


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """Yield all n! elements of S_n in lexicographic order of their words.

    Words are not normalized, so every yielded value has length ``n``.
    """
    if n < 1:
        raise PermutationError("n must be >= 1")
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def bigrassmannian(r: int, p: int, q: int) -> Permutation:
    """The bigrassmannian permutation with single essential box (p, q) of rank r.

    The word is 1..r, then q+1..q+p-r, then r+1..q.  Its effective region is
    the p x q rectangle.
    """
    if p < 1 or q < 1 or r < 0:
        raise PermutationError("need r >= 0 and p, q >= 1")
    if r >= min(p, q):
        raise PermutationError(f"rank r={r} must be < min(p, q)={min(p, q)}")
    word = (
        list(range(1, r + 1))
        + list(range(q + 1, q + p - r + 1))
        + list(range(r + 1, q + 1))
    )
    return normalize(Permutation(tuple(word)))
