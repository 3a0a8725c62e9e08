import math
from fractions import Fraction

import numpy as np
import pytest

from polytorus import bohr


def sieve_oracle(x):
    flags = bytearray([1]) * (x + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(x ** 0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(flags[i * i :: i])
    return [i for i in range(x + 1) if flags[i]]


def test_primes_match_independent_sieve():
    assert list(bohr.primes_up_to(1000)) == sieve_oracle(1000)
    assert list(bohr.primes_up_to(1)) == []
    assert list(bohr.primes_up_to(2)) == [2]


def test_nth_prime_and_index_roundtrip():
    primes = sieve_oracle(1000)
    for j, p in enumerate(primes, start=1):
        assert bohr.nth_prime(j) == p
        assert bohr.prime_index(p) == j
    with pytest.raises(ValueError):
        bohr.prime_index(6)


def test_factorize_recompose_roundtrip():
    for n in range(1, 2000):
        mi = bohr.factorize(n)
        assert bohr.recompose(mi) == n
        positions = [pos for pos, _ in mi.entries]
        assert positions == sorted(positions)
        assert all(e >= 1 for _, e in mi.entries)


def test_factorize_360():
    # 360 = 2^3 * 3^2 * 5 with global prime positions 1, 2, 3
    assert bohr.factorize(360).entries == ((1, 3), (2, 2), (3, 1))


def test_big_omega_additive():
    rng = np.random.default_rng(0)
    for _ in range(50):
        a, b = int(rng.integers(1, 500)), int(rng.integers(1, 500))
        assert bohr.big_omega(a * b) == bohr.big_omega(a) + bohr.big_omega(b)
    assert bohr.big_omega(1) == 0
    assert bohr.big_omega(64) == 6


def brute_divisors(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


def test_divisor_count_against_brute_force():
    for n in (1, 2, 6, 12, 60, 64, 97, 360, 1024):
        assert bohr.divisor_count(n) == brute_divisors(n)
    table = bohr.divisor_counts_up_to(200)
    for n in range(1, 201):
        assert table[n] == brute_divisors(n)


def factor_primes(n):
    return {bohr.nth_prime(pos) for pos, _ in bohr.factorize(n).entries}


def test_smooth_numbers_match_brute_force():
    ps = bohr.PrimeSet((2, 3))
    brute = [n for n in range(1, 501) if factor_primes(n) <= {2, 3}]
    got = bohr.smooth_numbers(ps, 500)
    assert list(got) == brute
    assert list(got) == sorted(got)

    ps5 = bohr.PrimeSet((2, 3, 5))
    brute5 = [n for n in range(1, 301) if factor_primes(n) <= {2, 3, 5}]
    assert list(bohr.smooth_numbers(ps5, 300)) == brute5


def test_smooth_numbers_all_primes_is_everything():
    ps = bohr.PrimeSet(all_primes=True)
    assert list(bohr.smooth_numbers(ps, 20)) == list(range(1, 21))


def test_prime_reciprocal_sum_exact():
    for x, expect in ((10, Fraction(247, 210)), (100, None)):
        oracle = sum(Fraction(1, p) for p in sieve_oracle(x))
        if expect is not None:
            assert oracle == expect
        assert abs(bohr.prime_reciprocal_sum(x) - float(oracle)) < 1e-12
    assert bohr.prime_reciprocal_sum(1) == 0.0


def test_prime_reciprocal_sum_frozen():
    assert abs(bohr.prime_reciprocal_sum(10) - 1.1761904761904762) < 1e-12
    assert abs(bohr.prime_reciprocal_sum(100) - 1.802817201048871) < 1e-12


def test_mertens_drift():
    # sum 1/p tracks log log x + M; the gap at 1e6 is already below 1e-4
    M = 0.2614972128476428
    gap = abs(bohr.prime_reciprocal_sum(10 ** 6) - math.log(math.log(10 ** 6)) - M)
    assert gap < 1e-3


def test_prime_set_validation_and_counting():
    with pytest.raises(ValueError):
        bohr.PrimeSet((4,))
    with pytest.raises(ValueError):
        bohr.PrimeSet((3, 2))
    ps = bohr.PrimeSet((2, 3, 7))
    assert ps.count_up_to(6) == 2
    assert ps.count_up_to(7) == 3
    assert ps.count_up_to(1) == 0
    pa = bohr.PrimeSet(all_primes=True)
    assert pa.count_up_to(100) == 25
    assert bohr.PrimeSet.all_up_to(10).primes == (2, 3, 5, 7)
