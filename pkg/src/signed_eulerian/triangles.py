"""
Exact triangles of Eulerian numbers split by parity.

    A[n][k]  permutations of [n] with k ascents
    B[n][k]  the even ones among them
    C[n][k]  the odd ones
    D[n][k]  B - C, the signed Eulerian numbers

A and D come from their recurrences; B and C from ``(A +/- D) / 2``.
Rows start at n = 1 and entries outside ``0 <= k < n`` read as zero.
Everything is a Python int, so rows of any length stay exact.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Optional

from .checks import Check, violations
from .numtheory import p_adic_valuation

__all__ = [
    "Triangle", "TriangleBundle",
    "eulerian_triangle", "signed_triangle", "split_triangles", "bundle",
    "first_column", "symmetry_checks", "check_symmetry", "boundary_checks",
    "odd_recurrence_checks", "parity_counterexample_checks", "odd_n_recurrence_check",
    "even_cross_checks", "even_n_cross_check", "signed_class_differences",
    "DivisibilityReport", "divisibility_checks", "divisibility_report",
    "InvariantBreach",
]

KINDS = ("A", "B", "C", "D")


class InvariantBreach(RuntimeError):
    """An internal consistency law failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class Triangle:
    kind: str
    rows: tuple[tuple[int, ...], ...]  # rows[n - 1] is row n

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown triangle kind {self.kind!r}")
        for i, row in enumerate(self.rows, start=1):
            if len(row) != i:
                raise ValueError(f"row {i} of triangle {self.kind} has {len(row)} entries")

    @property
    def n_max(self) -> int:
        return len(self.rows)

    def __call__(self, n: int, k: int) -> int:
        if n < 1 or n > self.n_max:
            if k < 0 or k >= n:
                return 0
            raise IndexError(f"row {n} not computed (n_max={self.n_max})")
        if k < 0 or k >= n:
            return 0
        return self.rows[n - 1][k]

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n - 1]

    def truncate(self, n_max: int) -> "Triangle":
        return Triangle(self.kind, self.rows[:n_max])

    def with_cell(self, n: int, k: int, value: int) -> "Triangle":
        """Copy with one entry replaced; used for fault injection."""
        rows = [list(r) for r in self.rows]
        rows[n - 1][k] = value
        return Triangle(self.kind, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class TriangleBundle:
    A: Triangle
    B: Triangle
    C: Triangle
    D: Triangle

    @property
    def n_max(self) -> int:
        return self.A.n_max

    def __getitem__(self, kind: str) -> Triangle:
        return getattr(self, kind)


def _check_n_max(n_max: int) -> None:
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")


def eulerian_triangle(n_max: int) -> Triangle:
    _check_n_max(n_max)
    rows = [(1,)]
    for n in range(2, n_max + 1):
        prev = rows[-1]
        get = lambda k: prev[k] if 0 <= k < n - 1 else 0
        rows.append(tuple((n - k) * get(k - 1) + (k + 1) * get(k) for k in range(n)))
    return Triangle("A", tuple(rows))


def signed_triangle(n_max: int) -> Triangle:
    """D with the parity-dependent recurrence; the odd-n rule matches A's."""
    _check_n_max(n_max)
    rows = [(1,)]
    for n in range(2, n_max + 1):
        prev = rows[-1]
        get = lambda k: prev[k] if 0 <= k < n - 1 else 0
        if n % 2:
            row = tuple((n - k) * get(k - 1) + (k + 1) * get(k) for k in range(n))
        else:
            row = tuple(get(k - 1) - get(k) for k in range(n))
        rows.append(row)
    return Triangle("D", tuple(rows))


def split_triangles(n_max: int, A: Optional[Triangle] = None,
                    D: Optional[Triangle] = None) -> tuple[Triangle, Triangle]:
    A = A if A is not None else eulerian_triangle(n_max)
    D = D if D is not None else signed_triangle(n_max)
    b_rows, c_rows = [], []
    for n in range(1, n_max + 1):
        b_row, c_row = [], []
        for a, d in zip(A.row(n), D.row(n)):
            if (a - d) % 2:
                raise InvariantBreach(f"A and D differ in parity at n={n}: A={a}, D={d}")
            b_row.append((a + d) // 2)
            c_row.append((a - d) // 2)
        b_rows.append(tuple(b_row))
        c_rows.append(tuple(c_row))
    return Triangle("B", tuple(b_rows)), Triangle("C", tuple(c_rows))


@functools.lru_cache(maxsize=8)
def bundle(n_max: int) -> TriangleBundle:
    """All four triangles up to row ``n_max``."""
    A = eulerian_triangle(n_max)
    D = signed_triangle(n_max)
    B, C = split_triangles(n_max, A, D)
    return TriangleBundle(A, B, C, D)


def first_column(n: int) -> tuple[int, int]:
    """``(B[n][0], C[n][0])``: the decreasing permutation is even iff n = 0, 1 mod 4."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return (1, 0) if n % 4 in (0, 1) else (0, 1)


def boundary_checks(tb: TriangleBundle) -> Iterator[Check]:
    for n in range(1, tb.n_max + 1):
        b0, c0 = first_column(n)
        yield Check("B_{n,0} closed form", n, 0, tb.B(n, 0), b0)
        yield Check("C_{n,0} closed form", n, 0, tb.C(n, 0), c0)


def symmetry_checks(B: Optional[Triangle] = None, C: Optional[Triangle] = None,
                    D: Optional[Triangle] = None) -> Iterator[Check]:
    """
    Reflection laws. For n = 0, 1 (mod 4) every triangle is palindromic; for
    n = 2, 3 (mod 4) B and C swap under k -> n-1-k and D is antisymmetric.
    Each unordered pair {k, n-1-k} is checked once, so one bad cell gives one
    violation. Laws whose operands were not supplied are skipped.
    """
    n_max = max(t.n_max for t in (B, C, D) if t is not None)
    for n in range(1, n_max + 1):
        same = n % 4 in (0, 1)
        for k in range((n + 1) // 2):
            m = n - 1 - k
            if same:
                for t in (B, C, D):
                    if t is not None:
                        yield Check(f"{t.kind}_{{n,k}} = {t.kind}_{{n,n-1-k}}", n, k, t(n, k), t(n, m))
            else:
                if B is not None and C is not None:
                    yield Check("B_{n,k} = C_{n,n-1-k}", n, k, B(n, k), C(n, m))
                    if k != m:
                        yield Check("C_{n,k} = B_{n,n-1-k}", n, k, C(n, k), B(n, m))
                if D is not None:
                    yield Check("D_{n,k} = -D_{n,n-1-k}", n, k, D(n, k), -D(n, m))


def check_symmetry(B: Optional[Triangle] = None, C: Optional[Triangle] = None,
                   D: Optional[Triangle] = None) -> list[Check]:
    return violations(symmetry_checks(B, C, D))


def odd_recurrence_checks(tb: TriangleBundle, n_max: Optional[int] = None) -> Iterator[Check]:
    """The Eulerian-style recurrence that B and C each satisfy for odd n."""
    n_max = tb.n_max if n_max is None else n_max
    for n in range(3, n_max + 1, 2):
        for k in range(n):
            for t in (tb.B, tb.C):
                rhs = (n - k) * t(n - 1, k - 1) + (k + 1) * t(n - 1, k)
                yield Check(f"{t.kind}_{{n,k}} = (n-k){t.kind}_{{n-1,k-1}} + (k+1){t.kind}_{{n-1,k}}",
                            n, k, t(n, k), rhs)


def parity_counterexample_checks(tb: TriangleBundle) -> Iterator[Check]:
    """
    C[10][4] is odd while B[9][k], C[9][k] (1 <= k <= 7) are all even, so no
    integer combination of the latter reaches it: the odd-n recurrence has no
    even-n analogue in B and C alone.
    """
    yield Check("C_{10,4} is odd", 10, 4, tb.C(10, 4) % 2, 1)
    for k in range(1, 8):
        yield Check("B_{9,k} is even", 9, k, tb.B(9, k) % 2, 0)
        yield Check("C_{9,k} is even", 9, k, tb.C(9, k) % 2, 0)


def odd_n_recurrence_check(n_max: int, tb: Optional[TriangleBundle] = None) -> list[Check]:
    if n_max < 3:
        raise ValueError("odd-n recurrence check needs n_max >= 3")
    tb = tb if tb is not None else bundle(max(n_max, 10))
    found = violations(odd_recurrence_checks(tb, n_max))
    if n_max >= 10:
        found += violations(parity_counterexample_checks(tb))
    return found


def even_cross_checks(tb: TriangleBundle, n_max: Optional[int] = None) -> Iterator[Check]:
    n_max = tb.n_max if n_max is None else n_max
    B, C = tb.B, tb.C
    for n in range(2, n_max + 1, 2):
        for k in range(n):
            rhs_b = ((n - k + 1) * B(n - 1, k - 1) + k * B(n - 1, k)
                     + (n - k - 1) * C(n - 1, k - 1) + (k + 2) * C(n - 1, k))
            rhs_c = ((n - k + 1) * C(n - 1, k - 1) + k * C(n - 1, k)
                     + (n - k - 1) * B(n - 1, k - 1) + (k + 2) * B(n - 1, k))
            yield Check("2B_{n,k} even-n cross relation", n, k, 2 * B(n, k), rhs_b)
            yield Check("2C_{n,k} even-n cross relation", n, k, 2 * C(n, k), rhs_c)


def even_n_cross_check(n_max: int, tb: Optional[TriangleBundle] = None) -> list[Check]:
    if n_max < 2:
        raise ValueError("even-n cross check needs n_max >= 2")
    tb = tb if tb is not None else bundle(n_max)
    return violations(even_cross_checks(tb, n_max))


def signed_class_differences(n: int, k: int, D: Optional[Triangle] = None) -> tuple[int, int]:
    """
    Predicted ``(|E_e^-| - |E_o^-|, |E_e^+| - |E_o^+|)`` for ``E(n, k)``, where
    the sign class is ``-`` when the first entry is smaller than the last.
    The two components always add up to ``D[n][k]``.
    """
    if n < 2:
        raise ValueError("sign classes need n >= 2")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} out of range for n={n}")
    D = D if D is not None else bundle(n).D
    if n % 2:
        return (n - k) * D(n - 1, k - 1), (k + 1) * D(n - 1, k)
    return D(n - 1, k - 1), -D(n - 1, k)


@dataclass(frozen=True)
class DivisibilityReport:
    n: int
    p: int
    m: int
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def violations(self) -> list[Check]:
        return violations(self.checks)


def divisibility_checks(n: int, p: int, tb: Optional[TriangleBundle] = None) -> Iterator[Check]:
    """
    Prime-power divisibility for odd ``n`` with ``p**m`` exactly dividing it:

    * ``p | k``: ``p**m`` divides B, C and D at ``(n-1, k-1)``;
    * ``p**i | k`` (``i <= m``): ``p**(m+i)`` divides ``(n-k) B[n-1][k-1]`` and
      ``(n-k) C[n-1][k-1]``;
    * ``p**i | k+1``: ``p**(m+i)`` divides ``(k+1) B[n-1][k]`` and ``(k+1) C[n-1][k]``.

    Only the largest admissible ``i`` is checked; it implies the smaller ones.
    """
    if n % 2 == 0:
        raise ValueError("divisibility properties are stated for odd n")
    m = p_adic_valuation(n, p)
    if m == 0:
        raise ValueError(f"{p} does not divide {n}")
    tb = tb if tb is not None else bundle(n)
    pm = p ** m
    for k in range(1, n):
        if k % p == 0:
            for t in (tb.B, tb.C, tb.D):
                yield Check(f"p^m | {t.kind}_{{n-1,k-1}}", n, k, pm, t(n - 1, k - 1), "divides")
    for k in range(1, n):
        if k % p == 0:
            i = min(p_adic_valuation(k, p), m)
            for t in (tb.B, tb.C):
                yield Check(f"p^(m+{i}) | (n-k){t.kind}_{{n-1,k-1}}", n, k,
                            p ** (m + i), (n - k) * t(n - 1, k - 1), "divides")
    for k in range(0, n - 1):
        if (k + 1) % p == 0:
            i = p_adic_valuation(k + 1, p)
            for t in (tb.B, tb.C):
                yield Check(f"p^(m+{i}) | (k+1){t.kind}_{{n-1,k}}", n, k,
                            p ** (m + i), (k + 1) * t(n - 1, k), "divides")


def divisibility_report(n: int, p: int, tb: Optional[TriangleBundle] = None) -> DivisibilityReport:
    checks = tuple(divisibility_checks(n, p, tb))
    return DivisibilityReport(n, p, p_adic_valuation(n, p), checks)
