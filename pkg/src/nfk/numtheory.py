"""Exact elementary number theory used by every counting formula.

All functions work on Python ints, so there is no overflow; factorization is
plain trial division and refuses inputs above ``MAX_FACTOR_INPUT``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

MAX_FACTOR_INPUT = 10**14

# Deterministic Miller-Rabin witnesses, valid for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class NumberTheoryError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def product(self) -> int:
        return math.prod(p**e for p, e in self.factors)


def factorize(n: int) -> Factorization:
    if n < 1:
        raise NumberTheoryError(f"cannot factor {n}")
    if n > MAX_FACTOR_INPUT:
        raise NumberTheoryError(f"{n} exceeds factorization bound {MAX_FACTOR_INPUT}")
    factors = []
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n).factors:
        result = result // p * (p - 1)
    return result


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def multiplicative_order(a: int, n: int) -> int:
    """Least e >= 1 with a**e == 1 (mod n)."""
    if n < 1:
        raise NumberTheoryError("modulus must be positive")
    a %= n
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise NumberTheoryError(f"{a} is not a unit modulo {n}")
    order = totient(n)
    for p, e in factorize(order).factors:
        for _ in range(e):
            if pow(a, order // p, n) == 1:
                order //= p
            else:
                break
    return order


def split_by_primes(x: int, n: int) -> tuple[int, int]:
    """Split ``x = q1 * q2`` where q2 is the full part of x built from primes of n.

    Shared primes go entirely to q2, so the two parts are coprime.
    """
    if x < 1:
        raise NumberTheoryError("x must be positive")
    q2 = 1
    q1 = x
    for p, _ in factorize(n).factors:
        while q1 % p == 0:
            q1 //= p
            q2 *= p
    return q1, q2


def multichoose(k: int, r: int) -> int:
    """Number of size-r multisets drawn from k symbols."""
    if k < 0 or r < 0:
        raise NumberTheoryError("multichoose needs non-negative arguments")
    if k == 0:
        return 1 if r == 0 else 0
    return math.comb(k + r - 1, r)


def is_prime_power(q: int) -> tuple[int, int]:
    """Return (p, l) with q == p**l, or raise if q is not a prime power."""
    if q < 2:
        raise NumberTheoryError(f"{q} is not a prime power")
    f = factorize(q)
    if len(f.factors) != 1:
        raise NumberTheoryError(f"{q} is not a prime power")
    return f.factors[0]
