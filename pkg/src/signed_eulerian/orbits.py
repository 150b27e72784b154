"""
Orbits of permutations under ``sigma`` and the divisor-indexed orbit census.

For odd n the operator preserves ascent count, parity and sign class, and a
permutation with k ascents has period ``d(n-k)`` (first entry < last entry,
sign class ``-``) or ``d(k+1)`` (first entry > last entry, sign class ``+``)
for some divisor d of n. The census counts orbits per divisor:

    alpha[d]  even, sign -, period d(n-k)
    beta[d]   even, sign +, period d(k+1)
    gamma[d]  odd,  sign -, period d(n-k)
    delta[d]  odd,  sign +, period d(k+1)
"""

from __future__ import annotations

import enum
import functools
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .checks import Check
from .numtheory import divisors, gcd
from .perm import Parity, Permutation, ascent_count, inversion_count, parity, sigma

__all__ = [
    "SignClass", "OrbitRecord", "OrbitCensus", "ProgressionPermutation",
    "OrbitError", "sign_class", "period", "orbit", "is_canonical",
    "census", "census_all", "progression_permutation", "epsilon",
    "theorem_5_1_checks", "DEFAULT_CENSUS_CAP",
]

DEFAULT_CENSUS_CAP = 9


class OrbitError(RuntimeError):
    """Orbit structure contradicts a proven property; points at a sigma bug."""


class SignClass(enum.Enum):
    E_MINUS = "-"
    E_PLUS = "+"


def sign_class(p) -> SignClass:
    if len(p) < 2:
        raise ValueError("sign class is undefined for n = 1")
    return SignClass.E_MINUS if p[0] < p[-1] else SignClass.E_PLUS


def period(p) -> int:
    n = len(p)
    cap = n * n
    q = sigma(p)
    steps = 1
    while q != p:
        if steps >= cap:
            raise OrbitError(f"no return to {p} within {cap} applications of sigma")
        q = sigma(q)
        steps += 1
    return steps


def is_canonical(p) -> bool:
    if len(p) < 2:
        raise ValueError("canonical form is undefined for n = 1")
    return p[0] == 1 or p[-1] == 1


@dataclass(frozen=True)
class OrbitRecord:
    base: Permutation
    period: int
    members: tuple[Permutation, ...]  # sigma p, sigma^2 p, ..., sigma^period p = p
    canonical_members: tuple[Permutation, ...]


def orbit(p) -> OrbitRecord:
    base = p if isinstance(p, Permutation) else Permutation(p)
    members = []
    q = base
    for _ in range(len(base) ** 2):
        q = sigma(q)
        members.append(q)
        if q == base:
            break
    else:
        raise OrbitError(f"orbit of {base} did not close")
    canon = tuple(m for m in members if is_canonical(m)) if len(base) > 1 else ()
    return OrbitRecord(base, len(members), tuple(members), canon)


@dataclass
class OrbitCensus:
    n: int
    k: int
    alpha: dict[int, int] = field(default_factory=dict)
    beta: dict[int, int] = field(default_factory=dict)
    gamma: dict[int, int] = field(default_factory=dict)
    delta: dict[int, int] = field(default_factory=dict)

    def weighted(self, name: str) -> int:
        """``sum(d * counts[d])`` for one of the four tallies."""
        return sum(d * c for d, c in getattr(self, name).items())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            **{name: {str(d): c for d, c in getattr(self, name).items()}
               for name in ("alpha", "beta", "gamma", "delta")},
        }


def _canonical_starts(n: int) -> Iterator[Permutation]:
    # 1 followed by, or preceded by, each permutation of {2..n}
    for rest in itertools.permutations(range(2, n + 1)):
        yield Permutation._trusted((1, *rest))
        yield Permutation._trusted((*rest, 1))


def _orbit_summary(start: Permutation):
    """``(least canonical member, k, sign, parity, period, canonical count)``."""
    n = len(start)
    k = ascent_count(start)
    sign = sign_class(start)
    par = parity(start)
    canon = [start]
    q = sigma(start)
    steps = 1
    while q != start:
        if steps >= n * n:
            raise OrbitError(f"no return to {start} within {n * n} applications of sigma")
        if q[0] == 1 or q[-1] == 1:
            canon.append(q)
        q = sigma(q)
        steps += 1
    return min(canon), k, sign, par, steps, len(canon)


def _census_slice(n: int, starts: list[Permutation]) -> list[tuple]:
    seen: set[Permutation] = set()
    found = []
    for s in starts:
        if s in seen:
            continue
        summary = _orbit_summary(s)
        # revisit the orbit only to mark its canonical members
        q = s
        while True:
            if q[0] == 1 or q[-1] == 1:
                seen.add(q)
            q = sigma(q)
            if q == s:
                break
        found.append(summary)
    return found


def _tally(n: int, summaries) -> dict[int, OrbitCensus]:
    divs = divisors(n)
    result = {k: OrbitCensus(n, k, *({d: 0 for d in divs} for _ in range(4)))
              for k in range(n)}
    for _, k, sign, par, per, n_canon in summaries:
        length = (n - k) if sign is SignClass.E_MINUS else (k + 1)
        d, rem = divmod(per, length)
        if rem or d not in result[k].alpha or d != gcd(n, per):
            raise OrbitError(f"period {per} of an orbit in E(n={n}, k={k}) "
                             f"is not {length} times gcd(n, period)")
        if n_canon != d:
            raise OrbitError(f"orbit of period {per} in E(n={n}, k={k}) has "
                             f"{n_canon} canonical members, expected {d}")
        if sign is SignClass.E_MINUS:
            tally = result[k].alpha if par is Parity.EVEN else result[k].gamma
        else:
            tally = result[k].beta if par is Parity.EVEN else result[k].delta
        tally[d] += 1
    return result


@functools.lru_cache(maxsize=None)
def _census_all_cached(n: int) -> dict[int, OrbitCensus]:
    return _tally(n, _census_slice(n, list(_canonical_starts(n))))


def census_all(n: int, *, workers: int = 1, cap: int = DEFAULT_CENSUS_CAP) -> dict[int, OrbitCensus]:
    """
    Orbit census for every k at once, keyed by k.

    Walks every orbit that contains a canonical permutation, which is every
    orbit. With ``workers > 1`` the canonical starting permutations are split
    into contiguous slices, each slice deduplicates locally, and the
    merge keeps one summary per orbit keyed by its least canonical member, so
    the result does not depend on the worker count.
    """
    if n % 2 == 0:
        raise ValueError("census requires odd n")
    if not 3 <= n <= cap:
        raise ValueError(f"census supports odd n in 3..{cap}, got {n}")
    if workers <= 1:
        return {k: _copy(c) for k, c in _census_all_cached(n).items()}
    starts = list(_canonical_starts(n))
    size = -(-len(starts) // workers)
    chunks = [starts[i:i + size] for i in range(0, len(starts), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_census_slice, [n] * len(chunks), chunks))
    merged = {}
    for part in parts:
        for summary in part:
            merged.setdefault(summary[0], summary)
    return _tally(n, (merged[key] for key in sorted(merged)))


def _copy(c: OrbitCensus) -> OrbitCensus:
    return OrbitCensus(c.n, c.k, dict(c.alpha), dict(c.beta), dict(c.gamma), dict(c.delta))


def census(n: int, k: int, *, workers: int = 1, cap: int = DEFAULT_CENSUS_CAP) -> OrbitCensus:
    if n % 2 == 0:
        raise ValueError("census requires odd n")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} out of range for n={n}")
    return census_all(n, workers=workers, cap=cap)[k]


@dataclass(frozen=True)
class ProgressionPermutation:
    n: int
    ell: int
    perm: Permutation


def _check_progression_args(n: int, ell: int) -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be a positive odd integer, got {n}")
    if ell < 1:
        raise ValueError(f"ell must be positive, got {ell}")
    if gcd(ell, n) != 1:
        raise ValueError(f"gcd({ell}, {n}) > 1: entries would collide")


def progression_permutation(n: int, ell: int) -> ProgressionPermutation:
    """
    ``1, 1+ell, 1+2 ell, ...`` with each entry reduced into ``1..n``.

    >>> str(progression_permutation(5, 3).perm)
    '14253'
    """
    _check_progression_args(n, ell)
    perm = Permutation((j * ell) % n + 1 for j in range(n))
    return ProgressionPermutation(n, ell, perm)


def epsilon(n: int, ell: int) -> int:
    """1 when the progression permutation is even, 0 when odd."""
    perm = progression_permutation(n, ell).perm
    return 1 - (inversion_count(perm) & 1)


def theorem_5_1_checks(n: int, *, workers: int = 1, cap: int = DEFAULT_CENSUS_CAP) -> Iterator[Check]:
    """
    Vanishing and single-orbit laws of the census for odd n: alpha[d] and
    gamma[d] vanish when gcd(k, n/d) > 1; when gcd(k, n) = 1 the lone orbit of
    period n-k is the one through the progression permutation with step n-k,
    so alpha[1] = epsilon and gamma[1] = 1 - epsilon.
    """
    all_k = census_all(n, workers=workers, cap=cap)
    for k in range(1, n):
        c = all_k[k]
        for d in divisors(n):
            if gcd(k, n // d) > 1:
                yield Check(f"alpha_{d} = 0 (gcd(k, n/d) > 1)", n, k, c.alpha[d], 0)
                yield Check(f"gamma_{d} = 0 (gcd(k, n/d) > 1)", n, k, c.gamma[d], 0)
        if gcd(k, n) == 1:
            eps = epsilon(n, n - k)
            yield Check("alpha_1 = epsilon(n, n-k)", n, k, c.alpha[1], eps)
            yield Check("gamma_1 = 1 - epsilon(n, n-k)", n, k, c.gamma[1], 1 - eps)
