"""
Permutations of ``[n] = {1, ..., n}`` in one-line notation, their ascent and
inversion statistics, reflection, and the cyclic-shift operator ``sigma``.

Values and positions are 1-based at the API boundary.

>>> p = Permutation([1, 3, 2, 4])
>>> ascent_count(p), inversion_count(p), parity(p)
(2, 1, <Parity.ODD: 1>)
>>> sigma(p)
Permutation(1, 2, 4, 3)
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "Parity", "SigmaCase",
    "ascent_count", "inversion_count", "parity", "reflect",
    "sigma_case", "sigma", "sigma_inverse", "inversion_delta",
]


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1


class SigmaCase(enum.Enum):
    INTERIOR = "interior"
    N_AT_RIGHT_END = "n-at-right-end"
    N_AT_LEFT_END = "n-at-left-end"


class Permutation(tuple):
    """An immutable permutation of ``[n]``, validated on construction."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(entries)
        n = len(entries)
        if n < 1:
            raise ValueError("a permutation needs at least one entry")
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError(f"{entries!r} is not a permutation of 1..{n}")
        return tuple.__new__(cls, entries)

    @classmethod
    def _trusted(cls, entries: Iterable[int]) -> "Permutation":
        # skips validation; only for outputs of bijection-preserving maps
        return tuple.__new__(cls, entries)

    @classmethod
    def parse(cls, literal: str) -> "Permutation":
        """Parse ``"1324"`` or ``"1,3,2,4"``; the comma form is needed for n >= 10."""
        text = literal.strip()
        if not text:
            raise ValueError("empty permutation literal")
        if "," in text:
            parts = [s.strip() for s in text.split(",")]
        else:
            parts = list(text)
        if not all(s.isdigit() for s in parts):
            raise ValueError(f"malformed permutation literal {literal!r}")
        return cls(int(s) for s in parts)

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Permutation({', '.join(map(str, self))})"

    def __str__(self) -> str:
        if len(self) < 10:
            return "".join(map(str, self))
        return ",".join(map(str, self))


def ascent_count(p: Sequence[int]) -> int:
    return sum(1 for a, b in zip(p, p[1:]) if a < b)


def inversion_count(p: Sequence[int]) -> int:
    """Number of pairs i < j with ``p[i] > p[j]``, by merge sort in O(n log n)."""
    def sort_count(xs):
        if len(xs) <= 1:
            return xs, 0
        mid = len(xs) // 2
        left, inv_left = sort_count(xs[:mid])
        right, inv_right = sort_count(xs[mid:])
        merged = []
        inv = inv_left + inv_right
        i = j = 0
        while i < len(left) and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[j])
                inv += len(left) - i
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, inv

    return sort_count(list(p))[1]


def parity(p: Sequence[int]) -> Parity:
    return Parity(inversion_count(p) & 1)


def reflect(p: Sequence[int]) -> Permutation:
    return Permutation._trusted(reversed(p))


def sigma_case(p: Sequence[int]) -> SigmaCase:
    n = len(p)
    # n = 1 falls into the right-end rule by convention
    if p[-1] == n:
        return SigmaCase.N_AT_RIGHT_END
    if p[0] == n:
        return SigmaCase.N_AT_LEFT_END
    return SigmaCase.INTERIOR


def sigma(p: Sequence[int]) -> Permutation:
    """
    Add one to every entry, wrapping ``n + 1`` to 1. If ``n`` sits at an end
    it is removed instead and 1 is placed at the opposite end.

    >>> str(sigma(Permutation([2, 3, 1]))), str(sigma(Permutation([4, 1, 2, 3])))
    ('312', '2341')
    """
    n = len(p)
    if p[-1] == n:
        return Permutation._trusted((1, *(a + 1 for a in p[:-1])))
    if p[0] == n:
        return Permutation._trusted((*(a + 1 for a in p[1:]), 1))
    return Permutation._trusted(1 if a == n else a + 1 for a in p)


def sigma_inverse(p: Sequence[int]) -> Permutation:
    # the position of 1 in sigma(A) tells which rule produced it
    n = len(p)
    if n == 1:
        return Permutation._trusted(p)
    if p[0] == 1:
        return Permutation._trusted((*(a - 1 for a in p[1:]), n))
    if p[-1] == 1:
        return Permutation._trusted((n, *(a - 1 for a in p[:-1])))
    return Permutation._trusted(n if a == 1 else a - 1 for a in p)


def inversion_delta(p: Sequence[int]) -> int:
    """``inv(sigma(p)) - inv(p)``, read off from the position of ``n`` alone."""
    if sigma_case(p) is not SigmaCase.INTERIOR:
        return 0
    n = len(p)
    i = list(p).index(n) + 1
    return 2 * i - (n + 1)
