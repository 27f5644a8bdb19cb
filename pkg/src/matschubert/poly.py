"""Exact sparse polynomials.

``MultiPoly`` holds integer polynomials in x_1, x_2, ... as a map from
exponent tuples to Python ints.  Exponent tuples never carry trailing zeros,
so ``(1,)`` and ``(1, 0)`` cannot both appear.  ``UniPoly`` and ``RatUniPoly``
are dense univariate polynomials over Z and Q.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping

__all__ = [
    "MultiPoly",
    "UniPoly",
    "RatUniPoly",
    "arith",
    "total_degree",
    "min_total_degree",
    "specialize_to_1_minus_t",
    "evaluate_all_ones",
]

Exps = tuple[int, ...]


def _strip(exps: Iterable[int]) -> Exps:
    exps = tuple(exps)
    n = len(exps)
    while n and exps[n - 1] == 0:
        n -= 1
    return exps[:n]


def _add_exps(a: Exps, b: Exps) -> Exps:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


class MultiPoly:
    """Immutable multivariate polynomial with unbounded integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        clean: dict[Exps, int] = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    key = _strip(exps)
                    clean[key] = clean.get(key, 0) + int(c)
            clean = {k: c for k, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exps, int]) -> "MultiPoly":
        # terms already canonical: stripped keys, no zeros
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> "MultiPoly":
        return cls._raw({(): int(c)} if c else {})

    @classmethod
    def var(cls, i: int) -> "MultiPoly":
        """The variable x_i (1-indexed)."""
        if i < 1:
            raise ValueError("variables are 1-indexed")
        return cls._raw({(0,) * (i - 1) + (1,): 1})

    @property
    def terms(self) -> dict[Exps, int]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (descending lexicographic) order."""
        return sorted(self._terms.items(), key=lambda kv: _padded_key(kv[0], self.nvars), reverse=True)

    @property
    def nvars(self) -> int:
        return max((len(e) for e in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.constant(other)
        raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out: dict[Exps, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add_exps(e1, e2)
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, values: Mapping[int, int] | Callable[[int], object]):
        """Substitute x_i -> values[i] (or values(i)) and sum the terms."""
        get = values if callable(values) else values.__getitem__
        total = 0
        for e, c in self._terms.items():
            term = c
            for i, k in enumerate(e, start=1):
                if k:
                    term = term * get(i) ** k
            total = total + term
        return total

    def format(self, names: Callable[[int], str] | None = None) -> str:
        """Human-readable form, low degree first (e.g. ``x1 + x2 - x1*x2``)."""
        if names is None:
            names = lambda i: f"x{i}"  # noqa: E731
        if not self._terms:
            return "0"
        n = self.nvars
        ordered = sorted(
            self._terms.items(),
            key=lambda kv: (sum(kv[0]), tuple(-x for x in _padded_key(kv[0], n))),
        )
        pieces = []
        for idx, (e, c) in enumerate(ordered):
            factors = []
            for i, k in enumerate(e, start=1):
                if k == 1:
                    factors.append(names(i))
                elif k > 1:
                    factors.append(f"{names(i)}^{k}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if idx == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"MultiPoly({self.format()})"

    def to_json(self) -> list[dict]:
        n = self.nvars
        return [
            {"coeff": str(c), "exps": list(_padded_key(e, n))}
            for e, c in self.items()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "MultiPoly":
        return cls({tuple(t["exps"]): int(t["coeff"]) for t in data})


def _padded_key(e: Exps, n: int) -> Exps:
    return e + (0,) * (n - len(e))


def arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def total_degree(p: MultiPoly) -> int:
    if p.is_zero():
        raise ValueError("degree of the zero polynomial is undefined")
    return max(sum(e) for e in p.terms)


def min_total_degree(p: MultiPoly) -> int:
    if p.is_zero():
        raise ValueError("degree of the zero polynomial is undefined")
    return min(sum(e) for e in p.terms)


def evaluate_all_ones(p: MultiPoly) -> int:
    return sum(p.terms.values())


def specialize_to_1_minus_t(p: MultiPoly) -> "UniPoly":
    """Substitute 1 - t for every variable.

    A monomial of total degree d becomes (1 - t)^d, so terms are grouped by
    total degree before expanding.
    """
    by_degree: dict[int, int] = {}
    for e, c in p.terms.items():
        d = sum(e)
        by_degree[d] = by_degree.get(d, 0) + c
    top = max(by_degree, default=0)
    coeffs = [0] * (top + 1)
    for d, c in by_degree.items():
        for k in range(d + 1):
            coeffs[k] += c * comb(d, k) * (-1) ** k
    return UniPoly(coeffs)


class UniPoly:
    """Dense univariate integer polynomial in t; ``coeffs[k]`` multiplies t^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[k] + other[k] for k in range(n))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[k] - other[k] for k in range(n))

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def format(self, var: str = "t") -> str:
        return _format_dense(self.coeffs, var)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"UniPoly({self.format()})"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "UniPoly":
        return cls(int(c) for c in data)


class RatUniPoly:
    """Dense univariate polynomial over Q in k; ``coeffs[d]`` multiplies k^d."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, d: int) -> Fraction:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatUniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "RatUniPoly") -> "RatUniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return RatUniPoly(self[d] + other[d] for d in range(n))

    def scale(self, c) -> "RatUniPoly":
        c = Fraction(c)
        return RatUniPoly(a * c for a in self.coeffs)

    def __mul__(self, other: "RatUniPoly") -> "RatUniPoly":
        if self.is_zero() or other.is_zero():
            return RatUniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatUniPoly(out)

    def __call__(self, k) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def format(self, var: str = "k") -> str:
        return _format_dense(self.coeffs, var)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"RatUniPoly({self.format()})"

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "RatUniPoly":
        return cls(Fraction(c) for c in data)


def _format_dense(coeffs, var: str) -> str:
    pieces = []
    for d, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces) or "0"
