"""Dickson pairs and exact normal-form arithmetic in the metacyclic group

    G(q, n) = < a, b | a^m = 1, b^n = a^t, b a = a^q b >,

with m = (q^n - 1)/n and t = m/(q - 1).  Every element is stored as the
normal form a^i b^j with 0 <= i < m, 0 <= j < n.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import numtheory as nt
from .group_table import FiniteGroupTable


class DicksonPairError(ValueError):
    pass


class TableBoundError(ValueError):
    """Raised when an explicit table or enumeration would exceed its size bound."""


@dataclass(frozen=True)
class DicksonParams:
    q: int
    n: int
    p: int
    l: int
    m: int
    t: int
    q1: int
    q2: int
    g: int
    gcd_nt: int
    p_order_mod_n: int

    @property
    def order(self) -> int:
        return self.q**self.n - 1

    def __str__(self):
        return f"({self.q},{self.n})"


def validate_dickson_pair(q: int, n: int) -> DicksonParams:
    if q < 2 or n < 1:
        raise DicksonPairError(f"need q >= 2 and n >= 1, got ({q},{n})")
    try:
        p, l = nt.is_prime_power(q)
    except nt.NumberTheoryError:
        raise DicksonPairError(f"q={q} is not a prime power") from None
    for r in nt.factorize(n).primes:
        if (q - 1) % r:
            raise DicksonPairError(f"prime {r} of n does not divide q-1={q - 1}")
    if n % 4 == 0 and (q - 1) % 4:
        raise DicksonPairError("4 | n but 4 does not divide q-1")
    m = (q**n - 1) // n
    t = m // (q - 1)
    q1, q2 = nt.split_by_primes(q - 1, n)
    P = DicksonParams(
        q=q, n=n, p=p, l=l, m=m, t=t, q1=q1, q2=q2,
        g=math.gcd(n, q - 1),
        gcd_nt=math.gcd(n, t),
        p_order_mod_n=nt.multiplicative_order(p, n) if n > 1 else 1,
    )
    _check_params(P)
    return P


def _check_params(P: DicksonParams) -> None:
    assert P.m * P.n == P.q**P.n - 1
    assert P.t * (P.q - 1) == P.m
    assert P.q1 * P.q2 == P.q - 1 and math.gcd(P.q1, P.q2) == 1
    assert P.gcd_nt == math.gcd(P.q - 1, P.t) <= 2
    assert (P.gcd_nt == 1) == (P.n % 2 == 1 or P.q % 4 != 3)


def dickson_pairs(max_order: int, min_n: int = 2) -> list[DicksonParams]:
    """All Dickson pairs with n >= min_n and q^n - 1 <= max_order, sorted by (q^n, q)."""
    pairs = []
    q = 2
    while q**min_n - 1 <= max_order:
        try:
            nt.is_prime_power(q)
        except nt.NumberTheoryError:
            q += 1
            continue
        n = min_n
        while q**n - 1 <= max_order:
            try:
                pairs.append(validate_dickson_pair(q, n))
            except DicksonPairError:
                pass
            n += 1
        q += 1
    return sorted(pairs, key=lambda P: (P.q**P.n, P.q))


@dataclass(frozen=True, order=True)
class GroupElement:
    a: int
    b: int

    def __str__(self):
        return f"a^{self.a} b^{self.b}"


def identity() -> GroupElement:
    return GroupElement(0, 0)


def elem(i: int, j: int, P: DicksonParams) -> GroupElement:
    """Normal form of a^i b^j for arbitrary integers i, j >= 0."""
    fold, j = divmod(j, P.n)
    return GroupElement((i + fold * P.t) % P.m, j)


def gen_a(P: DicksonParams) -> GroupElement:
    return elem(1, 0, P)


def gen_b(P: DicksonParams) -> GroupElement:
    return elem(0, 1, P)


def elem_mul(x: GroupElement, y: GroupElement, P: DicksonParams) -> GroupElement:
    # b^j a^i = a^(i q^j) b^j, and b^n = a^t is central
    i = x.a + y.a * pow(P.q, x.b, P.m)
    j = x.b + y.b
    if j >= P.n:
        i += P.t
        j -= P.n
    return GroupElement(i % P.m, j)


def elem_power(x: GroupElement, e: int, P: DicksonParams) -> GroupElement:
    if e < 0:
        return elem_power(elem_inverse(x, P), -e, P)
    result = identity()
    base = x
    while e:
        if e & 1:
            result = elem_mul(result, base, P)
        base = elem_mul(base, base, P)
        e >>= 1
    return result


def elem_order(x: GroupElement, P: DicksonParams) -> int:
    order = P.order
    for r, e in nt.factorize(order).factors:
        for _ in range(e):
            if elem_power(x, order // r, P) == identity():
                order //= r
            else:
                break
    return order


def elem_inverse(x: GroupElement, P: DicksonParams) -> GroupElement:
    return elem_power(x, elem_order(x, P) - 1, P)


def center(P: DicksonParams) -> tuple[GroupElement, int]:
    return elem(P.t, 0, P), P.q - 1


def sylow2_cyclic(P: DicksonParams) -> bool:
    cyclic = math.gcd(P.q - 1, P.t) == 1
    assert cyclic == (P.n % 2 == 1 or P.q % 4 != 3)
    return cyclic


DEFAULT_TABLE_BOUND = 3000


def element_index(x: GroupElement, P: DicksonParams) -> int:
    return x.a * P.n + x.b


def index_element(idx: int, P: DicksonParams) -> GroupElement:
    return GroupElement(*divmod(idx, P.n))


def build_group_table(P: DicksonParams, max_order: int = DEFAULT_TABLE_BOUND) -> FiniteGroupTable:
    """Cayley table over all normal forms; element a^i b^j sits at index i*n + j."""
    N = P.order
    if N > max_order:
        raise TableBoundError(f"group order {N} exceeds table bound {max_order}")
    idx = np.arange(N)
    ai, bj = idx // P.n, idx % P.n
    qpow = np.array([pow(P.q, j, P.m) for j in range(P.n)], dtype=np.int64)
    i = ai[:, None] + ai[None, :] * qpow[bj][:, None]
    j = bj[:, None] + bj[None, :]
    over = j >= P.n
    i = (i + over * P.t) % P.m
    j = j - over * P.n
    mul = i * P.n + j
    names = [index_element(k, P) for k in range(N)]
    gens = (element_index(gen_a(P), P), element_index(gen_b(P), P))
    return FiniteGroupTable(mul, 0, gens, names, f"G{P}")


@dataclass(frozen=True)
class MetacyclicDescriptor:
    r: int
    s: int
    twist: int
    r_bar: int
    s_bar: int
    witness_a: GroupElement
    witness_b: GroupElement

    def __str__(self):
        return f"D({self.r},{self.s};{self.twist})"


def metacyclic_decomposition(P: DicksonParams) -> MetacyclicDescriptor:
    """Split presentation D(r, s; k) of G(q, n), available when gcd(n, t) = 1."""
    if P.gcd_nt != 1:
        raise DicksonPairError(f"not split case: gcd(n,t)={P.gcd_nt} for {P}")
    r_bar, s_bar = nt.split_by_primes(P.q - 1, P.n)
    r = P.t * r_bar
    s = P.n * s_bar
    D = MetacyclicDescriptor(
        r=r, s=s, twist=pow(P.q, r_bar, r), r_bar=r_bar, s_bar=s_bar,
        witness_a=elem_power(gen_a(P), s_bar, P),
        witness_b=elem_power(gen_b(P), r_bar, P),
    )
    assert r * s == P.order and math.gcd(r_bar, P.n) == 1
    assert pow(D.twist, s, r) == 1 % r
    return D
