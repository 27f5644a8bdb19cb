"""Hilbert-theoretic invariants of matrix Schubert varieties.

Everything is read off the K-polynomial K(t) = G_w(1 - t, 1 - t, ...).  The
Hilbert series is K(t) / (1 - t)^N, where N is the number of ambient
variables: n^2 for the full n x n matrix space, |lambda(w)| for the effective
ambient.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb, factorial

from . import diagram
from .groth import TransitionEngine, grothendieck
from .perm import Permutation, PermutationError, coxeter_length, normalize
from .poly import RatUniPoly, UniPoly, specialize_to_1_minus_t, total_degree

__all__ = [
    "AmbientSpec",
    "HilbertReport",
    "PostulationMismatch",
    "k_polynomial",
    "hilbert_function",
    "hilbert_polynomial",
    "postulation",
    "empirical_postulation",
    "regularity",
    "default_k_max",
    "hilbertian_report",
]


class PostulationMismatch(AssertionError):
    """Closed-form postulation disagrees with the HF/HP scan."""


@dataclass(frozen=True)
class AmbientSpec:
    kind: str  # "full" or "effective"
    variable_count: int
    n: int | None = None

    @classmethod
    def full(cls, n: int) -> "AmbientSpec":
        if n < 1:
            raise ValueError("n must be >= 1")
        return cls("full", n * n, n)

    @classmethod
    def effective(cls, w: Permutation) -> "AmbientSpec":
        size = len(diagram.effective_region(w))
        if size < 1:
            raise ValueError(f"effective region of {w} is empty; no ambient variables")
        return cls("effective", size)

    def check(self, w: Permutation) -> None:
        """Raise if this ambient cannot host ``w``."""
        if self.kind == "full":
            size = normalize(w).n
            if self.n is None or self.n < size:
                raise PermutationError(
                    f"full ambient n={self.n} smaller than permutation size {size}"
                )
        elif self.kind == "effective":
            expected = len(diagram.effective_region(w))
            if self.variable_count != expected:
                raise ValueError(
                    f"effective ambient has {self.variable_count} variables, "
                    f"lambda({w}) has {expected}"
                )
        else:
            raise ValueError(f"unknown ambient kind {self.kind!r}")

    def to_json(self) -> dict:
        out = {"kind": self.kind, "variable_count": self.variable_count}
        if self.n is not None:
            out["n"] = self.n
        return out


def k_polynomial(w: Permutation, engine: TransitionEngine | None = None) -> UniPoly:
    return specialize_to_1_minus_t(grothendieck(w, engine))


def hilbert_function(K: UniPoly, N: int, k: int) -> int:
    """Coefficient of t^k in K(t) / (1 - t)^N; zero for k < 0."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if k < 0:
        return 0
    total = 0
    for j, c in enumerate(K.coeffs):
        if c and j <= k:
            total += c * comb(N - 1 + k - j, N - 1)
    return total


@lru_cache(maxsize=4096)
def _shifted_falling(N: int, j: int) -> UniPoly:
    """(k - j + N - 1)(k - j + N - 2)...(k - j + 1) as an integer polynomial in k."""
    poly = UniPoly([1])
    for s in range(1, N):
        poly = poly * UniPoly([s - j, 1])
    return poly


def _hp_numerator(K: UniPoly, N: int) -> UniPoly:
    """(N - 1)! * HP(k), which has integer coefficients."""
    acc = UniPoly()
    for j, c in enumerate(K.coeffs):
        if c:
            acc = acc + _shifted_falling(N, j) * UniPoly([c])
    return acc


def hilbert_polynomial(K: UniPoly, N: int) -> RatUniPoly:
    if N < 1:
        raise ValueError("N must be >= 1")
    scale = factorial(N - 1)
    return RatUniPoly(Fraction(c, scale) for c in _hp_numerator(K, N).coeffs)


def postulation(K: UniPoly, N: int) -> int:
    """deg K - N.  Valid for Cohen-Macaulay quotients only."""
    return K.degree - N


def empirical_postulation(
    K: UniPoly, N: int, k_max: int | None = None, k_min: int | None = None
) -> int | None:
    """Largest k in [k_min, k_max] with HF(k) != HP(k), HF taken as 0 below 0.

    Defaults scan from just below min(deg K - N, 0) up to deg K + 3, which
    always brackets the closed-form value.  Returns None if HF and HP agree on
    the whole window.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    numerator = _hp_numerator(K, N)
    scale = factorial(N - 1)
    if k_max is None:
        k_max = K.degree + 3
    if k_min is None:
        k_min = min(K.degree - N, 0) - 1
    for k in range(k_max, k_min - 1, -1):
        if hilbert_function(K, N, k) * scale != numerator(k):
            return k
    return None


def regularity(w: Permutation, engine: TransitionEngine | None = None) -> int:
    """deg G_w - l(w); the same for the full and effective ambients."""
    return total_degree(grothendieck(w, engine)) - coxeter_length(w)


def default_k_max(K: UniPoly, N: int) -> int:
    return max(K.degree - N + 3, 5)


@dataclass(frozen=True)
class HilbertReport:
    permutation: Permutation
    ambient: AmbientSpec
    k_polynomial: UniPoly
    hf_table: tuple[int, ...]
    hilbert_polynomial: RatUniPoly
    postulation: int
    regularity: int
    hilbertian: bool

    def to_json(self) -> dict:
        return {
            "permutation": list(self.permutation.word),
            "ambient": self.ambient.to_json(),
            "k_polynomial": self.k_polynomial.to_json(),
            "hf_table": [str(v) for v in self.hf_table],
            "hilbert_polynomial": self.hilbert_polynomial.to_json(),
            "postulation": self.postulation,
            "regularity": self.regularity,
            "hilbertian": self.hilbertian,
        }

    def format(self) -> str:
        hp = self.hilbert_polynomial
        lines = [
            f"permutation: {self.permutation}",
            f"ambient: {self.ambient.kind} (N = {self.ambient.variable_count})",
            f"K-polynomial: {self.k_polynomial}",
            f"Hilbert polynomial: {hp}",
            "k   HF(k)   HP(k)",
        ]
        for k, v in enumerate(self.hf_table):
            lines.append(f"{k:<3} {v:<7} {hp(k)}")
        lines += [
            f"postulation: {self.postulation}",
            f"regularity: {self.regularity}",
            f"hilbertian: {'yes' if self.hilbertian else 'no'}",
        ]
        return "\n".join(lines)


def hilbertian_report(
    w: Permutation,
    ambient: AmbientSpec,
    k_max: int | None = None,
    engine: TransitionEngine | None = None,
) -> HilbertReport:
    """Assemble all invariants for (w, ambient).

    The closed-form postulation is cross-checked against a direct HF/HP scan
    and a disagreement raises :class:`PostulationMismatch`.
    """
    ambient.check(w)
    w = normalize(w)
    N = ambient.variable_count
    K = k_polynomial(w, engine)
    post = postulation(K, N)
    seen = empirical_postulation(K, N)
    if seen != post:
        raise PostulationMismatch(
            f"{w} in {ambient.kind} ambient: closed form {post}, scan {seen}"
        )
    if k_max is None:
        k_max = default_k_max(K, N)
    hf = tuple(hilbert_function(K, N, k) for k in range(k_max + 1))
    return HilbertReport(
        permutation=w,
        ambient=ambient,
        k_polynomial=K,
        hf_table=hf,
        hilbert_polynomial=hilbert_polynomial(K, N),
        postulation=post,
        regularity=K.degree - coxeter_length(w),
        hilbertian=post < 0,
    )
