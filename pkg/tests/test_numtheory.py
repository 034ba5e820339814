import itertools
import math

import pytest
from hypothesis import given, strategies as st

from nfk import numtheory as nt
from conftest import brute_totient


@pytest.mark.parametrize("n, factors", [(1, ()), (24, ((2, 3), (3, 1))), (114, ((2, 1), (3, 1), (19, 1)))])
def test_factorize_examples(n, factors):
    assert nt.factorize(n).factors == factors


@given(st.integers(min_value=1, max_value=10**9))
def test_factorize_reassembles(n):
    f = nt.factorize(n)
    assert f.product() == n
    assert list(f.primes) == sorted(set(f.primes))
    assert all(nt.is_prime(p) for p in f.primes)


def test_factorize_rejects_large_input():
    with pytest.raises(nt.NumberTheoryError):
        nt.factorize(nt.MAX_FACTOR_INPUT + 1)


def test_is_prime_against_trial_division():
    for n in range(-3, 3000):
        expected = n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))
        assert nt.is_prime(n) == expected, n


@pytest.mark.parametrize("n, phi", [(1, 1), (12, 4), (84, 24)])
def test_totient_examples(n, phi):
    assert nt.totient(n) == phi == brute_totient(n)


def test_totient_direct_count_to_10k():
    for n in range(1, 10**4 + 1):
        # direct count of units, kept independent of the factorization route
        phi = brute_totient(n) if n <= 1500 else None
        if phi is None:
            phi = sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)
        assert nt.totient(n) == phi, n


@pytest.mark.parametrize("a, n, e", [(1, 5, 1), (7, 2, 1), (5, 3, 2)])
def test_multiplicative_order_examples(a, n, e):
    assert nt.multiplicative_order(a, n) == e


@given(st.integers(2, 500), st.integers(0, 10**6))
def test_multiplicative_order_is_least(n, a):
    if math.gcd(a, n) != 1:
        with pytest.raises(nt.NumberTheoryError):
            nt.multiplicative_order(a, n)
        return
    e = nt.multiplicative_order(a, n)
    assert pow(a, e, n) == 1
    assert all(pow(a, d, n) != 1 for d in range(1, e))
    assert nt.totient(n) % e == 0


@pytest.mark.parametrize("x, n, split", [(6, 3, (2, 3)), (4, 2, (1, 4)), (10, 2, (5, 2))])
def test_split_by_primes_examples(x, n, split):
    assert nt.split_by_primes(x, n) == split


@given(st.integers(1, 10**6), st.integers(1, 1000))
def test_split_by_primes_properties(x, n):
    q1, q2 = nt.split_by_primes(x, n)
    assert q1 * q2 == x
    assert math.gcd(q1, q2) == 1
    assert math.gcd(q1, n) == 1
    assert all(n % p == 0 for p in nt.factorize(q2).primes)


@pytest.mark.parametrize("k, r, value", [(1, 0, 1), (1, 5, 1), (2, 1, 2), (12, 1, 12)])
def test_multichoose_examples(k, r, value):
    assert nt.multichoose(k, r) == value


def test_multichoose_counts_nondecreasing_sequences():
    for k in range(1, 7):
        for r in range(0, 7):
            brute = sum(1 for s in itertools.product(range(k), repeat=r) if list(s) == sorted(s))
            assert nt.multichoose(k, r) == brute


@pytest.mark.parametrize("q, pl", [(9, (3, 2)), (7, (7, 1)), (1024, (2, 10))])
def test_is_prime_power(q, pl):
    assert nt.is_prime_power(q) == pl


@pytest.mark.parametrize("q", [1, 6, 12, 100])
def test_is_prime_power_rejects(q):
    with pytest.raises(nt.NumberTheoryError, match="not a prime power"):
        nt.is_prime_power(q)
