import pytest

from signed_eulerian import oracle
from signed_eulerian.oracle import (ClassCounts, enumerate_counts, oracle_triangle_checks,
                                    verify_class_differences, verify_corollary_3_2,
                                    verify_theorem_3_1)
from signed_eulerian.triangles import bundle


@pytest.mark.parametrize("n", range(2, 8))
def test_matches_naive_enumeration(n, naive_counts):
    for c in enumerate_counts(n):
        t = naive_counts[n]
        assert (c.e_minus_even, c.e_minus_odd, c.e_plus_even, c.e_plus_odd) == (
            t[c.k, "-", 0], t[c.k, "-", 1], t[c.k, "+", 0], t[c.k, "+", 1])


def test_examples():
    two = enumerate_counts(2)
    assert two[0] == ClassCounts(2, 0, 0, 0, 0, 1)
    assert two[1] == ClassCounts(2, 1, 1, 0, 0, 0)
    assert [c.B for c in two] == [0, 1] and [c.C for c in two] == [1, 0]
    c = enumerate_counts(5)[2]
    assert (c.B, c.C) == (30, 36)
    assert c.e_minus_even == 15 == (5 - 2) * 5
    assert enumerate_counts(5)[0].e_plus_even == 1


def test_derived_fields():
    c = enumerate_counts(6)[2]
    assert c.A == c.B + c.C and c.D == c.B - c.C


@pytest.mark.parametrize("n", range(2, 11))
def test_equals_recurrence_triangles(n):
    assert all(c.ok for c in oracle_triangle_checks(n))


def test_cap_enforced_fast(monkeypatch):
    with pytest.raises(ValueError, match="cap"):
        enumerate_counts(11)
    with pytest.raises(ValueError, match="cap"):
        enumerate_counts(6, cap=5)
    monkeypatch.setenv("EULERIAN_ORACLE_CAP", "4")
    with pytest.raises(ValueError, match="EULERIAN_ORACLE_CAP"):
        enumerate_counts(5)
    monkeypatch.setenv("EULERIAN_ORACLE_CAP", "many")
    with pytest.raises(ValueError):
        enumerate_counts(3)


def test_rejects_tiny_n():
    with pytest.raises(ValueError):
        enumerate_counts(1)


def test_worker_count_does_not_change_counts():
    single = enumerate_counts(8, cache=False)
    assert enumerate_counts(8, workers=3, cache=False) == single


def test_audit_catches_corrupted_statistics(monkeypatch):
    monkeypatch.setattr(oracle, "AUDIT_EVERY", 7)
    real = oracle.ascent_count
    monkeypatch.setattr(oracle, "ascent_count", lambda p: real(p) + (len(p) == 6))
    with pytest.raises(oracle.OracleError):
        oracle._slice_counts(6, 1)


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_corollary_3_2(n):
    assert verify_corollary_3_2(n) == []


def test_corollary_3_2_rejects_even():
    with pytest.raises(ValueError):
        verify_corollary_3_2(6)


@pytest.mark.parametrize("n", range(2, 11))
def test_class_differences(n):
    assert verify_class_differences(n) == []


@pytest.mark.parametrize("n, k, expected", [(6, 2, (2, 6)), (5, 2, (-3, -3)), (2, 0, (0, -1))])
def test_class_difference_examples(n, k, expected):
    c = enumerate_counts(n)[k]
    assert (c.e_minus_even - c.e_minus_odd, c.e_plus_even - c.e_plus_odd) == expected


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_theorem_3_1(n):
    assert verify_theorem_3_1(n) == []


def test_theorem_3_1_instance():
    from signed_eulerian.orbits import census
    c = census(5, 2)
    assert sum(d * (5 - 2) * x for d, x in c.alpha.items()) == 15 == enumerate_counts(5)[2].e_minus_even


def test_naive_counts_agree_with_golden(naive_counts):
    tb = bundle(7)
    for n, t in naive_counts.items():
        for k in range(n):
            assert t[k, "-", 0] + t[k, "+", 0] == tb.B(n, k)
