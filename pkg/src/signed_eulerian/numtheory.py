"""Trial-division number theory for the small integers that index orbit counts."""

from __future__ import annotations

import math

__all__ = ["divisors", "gcd", "is_prime", "factorize", "p_adic_valuation"]


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order.

    >>> divisors(45)
    [1, 3, 5, 9, 15, 45]
    """
    if n <= 0:
        raise ValueError(f"divisors need a positive integer, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError("gcd is defined here for non-negative integers")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization ``{prime: exponent}`` of a positive integer."""
    if n <= 0:
        raise ValueError(f"cannot factorize {n}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def p_adic_valuation(x: int, p: int) -> int:
    """Largest ``m`` with ``p**m`` dividing ``x``.

    >>> p_adic_valuation(2133, 3)
    3
    """
    if x == 0:
        raise ValueError("the valuation of 0 is infinite")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    x = abs(x)
    m = 0
    while x % p == 0:
        x //= p
        m += 1
    return m
