import math

import pytest

from signed_eulerian.numtheory import divisors, factorize, gcd, is_prime, p_adic_valuation


@pytest.mark.parametrize("n, expected", [(1, [1]), (9, [1, 3, 9]), (45, [1, 3, 5, 9, 15, 45]),
                                         (49, [1, 7, 49]), (12, [1, 2, 3, 4, 6, 12])])
def test_divisors(n, expected):
    assert divisors(n) == expected


@pytest.mark.parametrize("n", [0, -3])
def test_divisors_rejects_non_positive(n):
    with pytest.raises(ValueError):
        divisors(n)


def test_divisors_brute_force_and_closed_under_complement():
    for n in range(1, 2001):
        ds = divisors(n)
        assert ds == [d for d in range(1, n + 1) if n % d == 0]
        assert sorted(n // d for d in ds) == ds


@pytest.mark.parametrize("a, b, g", [(5, 1, 1), (9, 6, 3), (10, 8, 2), (0, 7, 7)])
def test_gcd(a, b, g):
    assert gcd(a, b) == g


def test_gcd_rejects_zero_zero():
    with pytest.raises(ValueError):
        gcd(0, 0)


@pytest.mark.parametrize("x, p, m", [(9, 3, 2), (2133, 3, 3), (7, 3, 0), (-27, 3, 3), (12798, 3, 4)])
def test_p_adic_valuation(x, p, m):
    # checked by repeated division: 2133 = 27 * 79, 12798 = 81 * 158
    assert p_adic_valuation(x, p) == m
    assert x % p ** m == 0 and x % p ** (m + 1) != 0


def test_p_adic_valuation_errors():
    with pytest.raises(ValueError):
        p_adic_valuation(0, 3)
    with pytest.raises(ValueError):
        p_adic_valuation(12, 4)


def test_valuations_reconstruct_n():
    primes = [p for p in range(2, 10_001) if is_prime(p)]
    assert primes[:10] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    for n in range(1, 10_001):
        f = factorize(n)
        assert math.prod(p ** e for p, e in f.items()) == n
        for p, e in f.items():
            assert p_adic_valuation(n, p) == e
