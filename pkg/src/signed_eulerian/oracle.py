"""
Brute-force ground truth: enumerate all of S_n and count permutations by
ascent number, parity and sign class.

Enumeration is in lexicographic order, split into n slices by first entry.
Within a slice a depth-first walk fixes a prefix while tracking its ascents
and inversions incrementally; the last ``r`` positions run through a
precomputed table of rank patterns carrying each pattern's own ascents,
inversion parity and end ranks. Inversions between prefix and suffix do not
depend on the suffix order, so each permutation costs O(1) in the inner loop.
Every ``AUDIT_EVERY``-th permutation is materialized and recounted from
scratch as a self-check.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from .checks import Check, violations
from .orbits import DEFAULT_CENSUS_CAP, census_all
from .perm import ascent_count, inversion_count
from .triangles import TriangleBundle, bundle, signed_class_differences

__all__ = [
    "ClassCounts", "OracleError", "enumerate_counts", "oracle_cap",
    "oracle_triangle_checks", "corollary_3_2_checks", "verify_corollary_3_2",
    "class_difference_checks", "verify_class_differences",
    "theorem_3_1_checks", "verify_theorem_3_1", "DEFAULT_CAP", "AUDIT_EVERY",
]

DEFAULT_CAP = 10
AUDIT_EVERY = 100_000
_SUFFIX = 7
CAP_ENV = "EULERIAN_ORACLE_CAP"

# count cells are indexed 2 * sign + parity, sign 0 meaning first entry < last entry


class OracleError(RuntimeError):
    """Incremental statistics disagreed with a full recount."""


@dataclass(frozen=True)
class ClassCounts:
    n: int
    k: int
    e_minus_even: int
    e_minus_odd: int
    e_plus_even: int
    e_plus_odd: int

    @property
    def B(self) -> int:
        return self.e_minus_even + self.e_plus_even

    @property
    def C(self) -> int:
        return self.e_minus_odd + self.e_plus_odd

    @property
    def D(self) -> int:
        return self.B - self.C

    @property
    def A(self) -> int:
        return self.B + self.C

    def to_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k,
            "e_minus_even": str(self.e_minus_even), "e_minus_odd": str(self.e_minus_odd),
            "e_plus_even": str(self.e_plus_even), "e_plus_odd": str(self.e_plus_odd),
            "A": str(self.A), "B": str(self.B), "C": str(self.C), "D": str(self.D),
        }


def oracle_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV} must be an integer, got {raw!r}") from None


def _patterns(r: int) -> list[tuple[int, int, int, int, tuple[int, ...]]]:
    # (first rank, last rank, ascents, inversion parity, ranks) in lex order
    out = []
    for ranks in itertools.permutations(range(r)):
        out.append((ranks[0], ranks[-1], ascent_count(ranks), inversion_count(ranks) & 1, ranks))
    return out


def _audit(perm: list[int], k: int, cell: int) -> None:
    expected = (ascent_count(perm), 2 * (perm[0] > perm[-1]) + (inversion_count(perm) & 1))
    if expected != (k, cell):
        raise OracleError(f"incremental statistics {(k, cell)} wrong at {perm}, expected {expected}")


def _slice_counts(n: int, first: int) -> list[list[int]]:
    """Counts ``[k][cell]`` over permutations of [n] starting with ``first``."""
    counts = [[0] * 4 for _ in range(n)]
    r = min(_SUFFIX, n - 1)
    table = _patterns(r)
    seen = 0

    def leaf_block(prefix: list[int], remaining: list[int], asc: int, inv: int) -> None:
        nonlocal seen
        last = prefix[-1]
        cross = sum(1 for a in prefix for b in remaining if a > b)
        base_par = (inv + cross) & 1
        for fr, lr, a, ip, ranks in table:
            k = asc + a + (last < remaining[fr])
            cell = 2 * (first > remaining[lr]) + (base_par ^ ip)
            counts[k][cell] += 1
            seen += 1
            if seen % AUDIT_EVERY == 0:
                _audit(prefix + [remaining[i] for i in ranks], k, cell)

    def walk(prefix: list[int], remaining: list[int], asc: int, inv: int) -> None:
        if len(remaining) == r:
            leaf_block(prefix, remaining, asc, inv)
            return
        last = prefix[-1]
        for idx, v in enumerate(remaining):
            added = sum(1 for a in prefix if a > v)
            walk(prefix + [v], remaining[:idx] + remaining[idx + 1:],
                 asc + (last < v), inv + added)

    walk([first], [v for v in range(1, n + 1) if v != first], 0, 0)
    return counts


def _count_table(n: int, workers: int) -> list[list[int]]:
    firsts = list(range(1, n + 1))
    if workers <= 1:
        parts = [_slice_counts(n, f) for f in firsts]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_slice_counts, [n] * n, firsts))
    total = [[0] * 4 for _ in range(n)]
    for part in parts:  # merged in slice order
        for k in range(n):
            for c in range(4):
                total[k][c] += part[k][c]
    return total


_cache: dict[int, tuple[ClassCounts, ...]] = {}


def enumerate_counts(n: int, *, workers: int = 1, cap: Optional[int] = None,
                     cache: bool = True) -> tuple[ClassCounts, ...]:
    """
    Exact census of S_n, one ``ClassCounts`` per k = 0..n-1.

    ``cap`` defaults to 10 or to ``$EULERIAN_ORACLE_CAP``; larger n is
    refused before any work starts. Results are memoized per n unless
    ``cache`` is false.
    """
    cap = oracle_cap() if cap is None else cap
    if n < 2:
        raise ValueError(f"enumeration needs n >= 2, got {n}")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap} "
                         f"({math.factorial(n):,} permutations); raise {CAP_ENV} at your own risk")
    if cache and n in _cache:
        return _cache[n]
    table = _count_table(n, workers)
    counts = tuple(ClassCounts(n, k, *table[k]) for k in range(n))
    if sum(c.A for c in counts) != math.factorial(n):
        raise OracleError(f"enumeration of S_{n} lost permutations")
    if cache:
        _cache[n] = counts
    return counts


def clear_cache() -> None:
    _cache.clear()


def oracle_triangle_checks(n: int, *, workers: int = 1,
                           tb: Optional[TriangleBundle] = None) -> Iterator[Check]:
    """Enumerated A, B, C, D against the recurrence triangles."""
    tb = tb if tb is not None else bundle(max(n, 2))
    for c in enumerate_counts(n, workers=workers):
        for kind in "ABCD":
            yield Check(f"enumerated {kind}_{{n,k}} = recurrence", n, c.k,
                        getattr(c, kind), tb[kind](n, c.k))


def corollary_3_2_checks(n: int, *, workers: int = 1) -> Iterator[Check]:
    """Signed-class cardinalities of E(n, k) for odd n from the row n-1 counts."""
    if n % 2 == 0 or n < 3:
        raise ValueError(f"needs odd n >= 3, got {n}")
    cur = enumerate_counts(n, workers=workers)
    prev = enumerate_counts(n - 1, workers=workers)
    B = lambda k: prev[k].B if 0 <= k < n - 1 else 0
    C = lambda k: prev[k].C if 0 <= k < n - 1 else 0
    for k in range(1, n):
        yield Check("|E_e^-| = (n-k)B_{n-1,k-1}", n, k, cur[k].e_minus_even, (n - k) * B(k - 1))
        yield Check("|E_o^-| = (n-k)C_{n-1,k-1}", n, k, cur[k].e_minus_odd, (n - k) * C(k - 1))
    for k in range(0, n - 1):
        yield Check("|E_e^+| = (k+1)B_{n-1,k}", n, k, cur[k].e_plus_even, (k + 1) * B(k))
        yield Check("|E_o^+| = (k+1)C_{n-1,k}", n, k, cur[k].e_plus_odd, (k + 1) * C(k))


def verify_corollary_3_2(n: int, *, workers: int = 1) -> list[Check]:
    return violations(corollary_3_2_checks(n, workers=workers))


def class_difference_checks(n: int, *, workers: int = 1,
                            tb: Optional[TriangleBundle] = None) -> Iterator[Check]:
    """Signed-class differences of E(n, k) against the D-based predictions, any n."""
    D = (tb if tb is not None else bundle(max(n, 2))).D
    for c in enumerate_counts(n, workers=workers):
        d_minus, d_plus = signed_class_differences(n, c.k, D)
        yield Check("|E_e^-| - |E_o^-| prediction", n, c.k, c.e_minus_even - c.e_minus_odd, d_minus)
        yield Check("|E_e^+| - |E_o^+| prediction", n, c.k, c.e_plus_even - c.e_plus_odd, d_plus)


def verify_class_differences(n: int, *, workers: int = 1) -> list[Check]:
    return violations(class_difference_checks(n, workers=workers))


def theorem_3_1_checks(n: int, *, workers: int = 1) -> Iterator[Check]:
    """
    Divisor sums of the orbit census against enumeration: the canonical
    counts from row n-1, the signed-class cardinalities of row n, and their
    totals B and C.
    """
    if n % 2 == 0 or not 3 <= n <= DEFAULT_CENSUS_CAP:
        raise ValueError(f"needs odd n in 3..{DEFAULT_CENSUS_CAP}, got {n}")
    cur = enumerate_counts(n, workers=workers)
    prev = enumerate_counts(n - 1, workers=workers)
    prev_B = lambda k: prev[k].B if 0 <= k < n - 1 else 0
    prev_C = lambda k: prev[k].C if 0 <= k < n - 1 else 0
    for k, c in sorted(census_all(n, workers=workers).items()):
        w = lambda name, scale: sum(d * scale * x for d, x in getattr(c, name).items())
        if k >= 1:
            yield Check("B_{n-1,k-1} = sum d alpha_d", n, k, w("alpha", 1), prev_B(k - 1))
            yield Check("C_{n-1,k-1} = sum d gamma_d", n, k, w("gamma", 1), prev_C(k - 1))
        if k <= n - 2:
            yield Check("B_{n-1,k} = sum d beta_d", n, k, w("beta", 1), prev_B(k))
            yield Check("C_{n-1,k} = sum d delta_d", n, k, w("delta", 1), prev_C(k))
        yield Check("B_{n,k} = sum d{(n-k)alpha_d + (k+1)beta_d}", n, k,
                    w("alpha", n - k) + w("beta", k + 1), cur[k].B)
        yield Check("C_{n,k} = sum d{(n-k)gamma_d + (k+1)delta_d}", n, k,
                    w("gamma", n - k) + w("delta", k + 1), cur[k].C)
        yield Check("|E_e^-| = sum d(n-k)alpha_d", n, k, w("alpha", n - k), cur[k].e_minus_even)
        yield Check("|E_e^+| = sum d(k+1)beta_d", n, k, w("beta", k + 1), cur[k].e_plus_even)
        yield Check("|E_o^-| = sum d(n-k)gamma_d", n, k, w("gamma", n - k), cur[k].e_minus_odd)
        yield Check("|E_o^+| = sum d(k+1)delta_d", n, k, w("delta", k + 1), cur[k].e_plus_odd)


def verify_theorem_3_1(n: int, *, workers: int = 1) -> list[Check]:
    return violations(theorem_3_1_checks(n, workers=workers))
