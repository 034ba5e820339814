"""Automorphisms of the Dickson groups G(q, n).

For (q, n) != (3, 2) every automorphism sends a -> a^i and b -> a^k b with
gcd(i, m) = 1 and k*(q^n-1)/(q-1) + t = i*t (mod m).  This module enumerates
and counts those pairs, evaluates the closed-form counts, and provides a
generic brute-force automorphism search over Cayley tables as an independent
oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import dickson as dk
from . import numtheory as nt
from .dickson import DicksonParams, GroupElement, TableBoundError
from .group_table import FiniteGroupTable


class ExcludedPairError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class AutPair:
    i: int
    k: int


def _require_not_quaternion(P: DicksonParams) -> None:
    if (P.q, P.n) == (3, 2):
        raise ExcludedPairError("excluded pair (3,2): the (i,k) characterisation does not apply")


def is_automorphism_pair(i: int, k: int, P: DicksonParams) -> bool:
    _require_not_quaternion(P)
    m = P.m
    if math.gcd(i % m, m) != 1:
        return False
    return (k * ((P.q**P.n - 1) // (P.q - 1)) + P.t - i * P.t) % m == 0


def _units(m: int):
    return (i for i in range(m) if math.gcd(i, m) == 1)


def _k_solutions(i: int, P: DicksonParams) -> list[int]:
    """All k mod m solving the congruence for this i, via the linear-congruence gcd."""
    m = P.m
    coef = ((P.q**P.n - 1) // (P.q - 1)) % m
    rhs = (P.t * (i - 1)) % m
    d = math.gcd(coef, m)
    if rhs % d:
        return []
    step = m // d
    k0 = (rhs // d) * pow(coef // d, -1, step) % step if step > 1 else 0
    return list(range(k0, m, step))


def enumerate_S(P: DicksonParams, max_size: int = 10**6) -> list[AutPair]:
    _require_not_quaternion(P)
    size = count_S(P)
    if size > max_size:
        raise TableBoundError(f"|S{P}| = {size} exceeds bound {max_size}")
    return [AutPair(i, k) for i in _units(P.m) for k in _k_solutions(i, P)]


def count_S(P: DicksonParams) -> int:
    """|S(q,n)| without materialising the pairs."""
    _require_not_quaternion(P)
    return sum(len(_k_solutions(i, P)) for i in _units(P.m))


def solve_k_fiber(i: int, P: DicksonParams) -> set[int]:
    """{k mod q-1 : k n = i - 1 (mod q-1)}."""
    mod = P.q - 1
    if mod == 1:
        return {0}
    return {k for k in range(mod) if (k * P.n - (i - 1)) % mod == 0}


def enumerate_T(P: DicksonParams) -> list[tuple[int, int]]:
    _require_not_quaternion(P)
    return [(i, k) for i in _units(P.m) for k in sorted(solve_k_fiber(i, P))]


def count_T(P: DicksonParams) -> int:
    _require_not_quaternion(P)
    return sum(len(solve_k_fiber(i, P)) for i in _units(P.m))


def apply(phi: AutPair, x: GroupElement, P: DicksonParams) -> GroupElement:
    image_a = dk.elem_power(dk.gen_a(P), phi.i, P)
    image_b = dk.elem_mul(dk.elem(phi.k, 0, P), dk.gen_b(P), P)
    return dk.elem_mul(dk.elem_power(image_a, x.a, P), dk.elem_power(image_b, x.b, P), P)


def apply_table(phi: AutPair, P: DicksonParams) -> np.ndarray:
    """The permutation of table indices induced by ``phi`` (vectorised ``apply``).

    Uses (a^k b)^j = a^(k(1 + q + ... + q^(j-1))) b^j for j < n.
    """
    N = P.order
    idx = np.arange(N)
    alpha, beta = idx // P.n, idx % P.n
    geo = np.zeros(P.n, dtype=np.int64)
    for j in range(1, P.n):
        geo[j] = (geo[j - 1] + pow(P.q, j - 1, P.m)) % P.m
    a_exp = (phi.i * alpha + phi.k * geo[beta]) % P.m
    return a_exp * P.n + beta


def compose(phi: AutPair, psi: AutPair, P: DicksonParams) -> AutPair:
    """phi o psi, i.e. (i,k)*(j,l) = (ij, k + il)."""
    return AutPair(phi.i * psi.i % P.m, (phi.k + phi.i * psi.k) % P.m)


def inverse(phi: AutPair, P: DicksonParams) -> AutPair:
    inv_i = pow(phi.i, -1, P.m) if P.m > 1 else 0
    return AutPair(inv_i, (-inv_i * phi.k) % P.m)


def conjugation_pair(x: GroupElement, P: DicksonParams) -> AutPair:
    """The AutPair realising y -> x y x^-1."""
    x_inv = dk.elem_inverse(x, P)
    conj = lambda y: dk.elem_mul(dk.elem_mul(x, y, P), x_inv, P)  # noqa: E731
    ia = conj(dk.gen_a(P))
    ib = conj(dk.gen_b(P))
    assert ia.b == 0 and ib.b == 1 % P.n
    return AutPair(ia.a, ib.a)


def inner_count(P: DicksonParams) -> int:
    return P.t * P.n


def rho(P: DicksonParams) -> Fraction:
    _require_not_quaternion(P)
    return Fraction(nt.totient(P.q2) * P.g, P.q2)


def aut_count_corrho(P: DicksonParams) -> int:
    value = nt.totient(P.m) * P.t * P.g / rho(P)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integer automorphism count {value} for {P}")
    return int(value)


@dataclass(frozen=True)
class ClosedFormCount:
    value: int
    trusted: bool
    note: str = ""


def aut_count_closed(P: DicksonParams) -> ClosedFormCount:
    """t * phi(t) * phi(q1) * q2.

    Only trusted when gcd(n, t) = 1: with gcd 2, t and q2 share the prime 2
    and the product undercounts by exactly a factor of two.
    """
    _require_not_quaternion(P)
    value = P.t * nt.totient(P.t) * nt.totient(P.q1) * P.q2
    if P.gcd_nt == 1:
        return ClosedFormCount(value, True)
    return ClosedFormCount(value, False, "closed form unreliable when gcd(n,t)=2")


def aut_count_n2(P: DicksonParams) -> int:
    if P.n != 2:
        raise ValueError(f"n=2 formula needs n=2, got n={P.n}")
    _require_not_quaternion(P)
    return nt.totient((P.q**2 - 1) // 2) * (P.q + 1)


# -- brute force oracle ------------------------------------------------------

DEFAULT_BRUTE_BOUND = 3000

# alternating exponents of two generators, x^e0 y^e1 x^e2 ...; orders of
# these words are invariants that prune candidate generator images cheaply
_WORD_SHAPES = [(1, 1), (1, 2), (2, 1), (1, -1), (1, 3), (1, 1, 1), (1, -1, -1),
                (2, -1), (1, 1, 2), (1, 2, 1, 1)]


class _Searcher:
    """Enumerate automorphisms of a table by choosing images of a generating set.

    The candidate map is built along a BFS tree over an extended generating
    set (generators and their repeated squares, so depth stays logarithmic)
    and then accepted iff phi(x g) = phi(x) phi(g) for every element x and
    every original generator g, and phi is a bijection.
    """

    def __init__(self, G: FiniteGroupTable):
        self.G = G
        self.gens = list(dict.fromkeys(G.generators))
        self.orders = G.element_orders()
        ext = []  # (generator position, doubling exponent, element)
        for gi, g in enumerate(self.gens):
            x, e = g, 0
            while (gi, x) not in {(a, c) for a, _, c in ext}:
                ext.append((gi, e, x))
                x = int(G.mul[x, x])
                e += 1
        self.ext = ext
        parent = np.full(G.order, -1, dtype=np.int64)
        via = np.full(G.order, -1, dtype=np.int64)
        depth = {G.identity: 0}
        frontier = [G.identity]
        layers = []
        while frontier:
            nxt = []
            for x in frontier:
                for ei, (_, _, s) in enumerate(ext):
                    y = int(G.mul[x, s])
                    if y not in depth:
                        depth[y] = depth[x] + 1
                        parent[y], via[y] = x, ei
                        nxt.append(y)
            if nxt:
                layers.append(np.array(nxt, dtype=np.int64))
            frontier = nxt
        if len(depth) != G.order:
            raise ValueError(f"{G.name}: recorded generators do not generate the group")
        self.layers = [(L, parent[L], via[L]) for L in layers]
        self.words = self._test_words()

    def _test_words(self):
        # pairs of generator positions and small words whose orders must be preserved
        G, gens = self.G, self.gens
        words = []
        for a, b in combinations(range(len(gens)), 2):
            for shape in self._relations(gens[a], gens[b]):
                words.append((a, b, shape, 1))
            for shape in _WORD_SHAPES:
                x = self._eval_word(gens, a, b, shape)
                words.append((a, b, shape, int(self.orders[x])))
        return words

    def _relations(self, x, y):
        """Relators in x, y read off the table: y x y^-1 = x^r and y^s = x^u
        whenever those land in <x>."""
        G = self.G
        powers = {}
        z = G.identity
        for e in range(int(self.orders[x])):
            powers[z] = e
            z = G.op(z, x)
        rels = []
        conj = G.op(G.op(y, x), G.inverse(y))
        if conj in powers:
            rels.append((0, 1, 1, -1, -powers[conj]))
        z = y
        for s in range(1, int(self.orders[y]) + 1):
            if z in powers:
                rels.append((-powers[z], s))
                break
            z = G.op(z, y)
        return rels

    def _eval_word(self, elems, a, b, shape):
        G = self.G
        x = G.identity
        for pos, e in enumerate(shape):
            x = G.op(x, G.power(elems[a] if pos % 2 == 0 else elems[b], e))
        return x

    def _power_vec(self, xs, e):
        G = self.G
        if e < 0:
            xs, e = G.inverses()[xs], -e
        result = np.full(len(xs), G.identity, dtype=np.int64)
        base = xs
        while e:
            if e & 1:
                result = G.mul[result, base]
            base = G.mul[base, base]
            e >>= 1
        return result

    def _filter(self, images, pos, cands):
        """Candidates for generator ``pos`` consistent with the earlier images."""
        G = self.G
        cands = np.asarray(cands, dtype=np.int64)
        for a, b, shape, order in self.words:
            if b != pos or len(cands) == 0:
                continue
            x = np.full(len(cands), G.identity, dtype=np.int64)
            for k, e in enumerate(shape):
                if k % 2 == 0:
                    x = G.mul[x, G.power(images[a], e)]
                else:
                    x = G.mul[x, self._power_vec(cands, e)]
            cands = cands[self.orders[x] == order]
        return cands.tolist()

    def _extend(self, images):
        G = self.G
        ext_img = np.empty(len(self.ext), dtype=np.int64)
        for ei, (gi, e, _) in enumerate(self.ext):
            # entries for one generator are consecutive squares
            ext_img[ei] = images[gi] if e == 0 else G.mul[ext_img[ei - 1], ext_img[ei - 1]]
        phi = np.empty(G.order, dtype=np.int64)
        phi[G.identity] = G.identity
        for L, par, via in self.layers:
            phi[L] = G.mul[phi[par], ext_img[via]]
        for gi, g in enumerate(self.gens):
            if not np.array_equal(phi[G.mul[:, g]], G.mul[phi, images[gi]]):
                return None
        if len(np.unique(phi)) != G.order:
            return None
        return phi

    def search(self):
        """Yield (generator images, permutation array) in lexicographic image order."""
        G = self.G
        cands = [np.flatnonzero(self.orders == self.orders[g]).tolist() for g in self.gens]
        images = [0] * len(self.gens)

        def rec(pos):
            if pos == len(self.gens):
                phi = self._extend(images)
                if phi is not None:
                    yield tuple(images), phi
                return
            for c in self._filter(images, pos, cands[pos]):
                images[pos] = c
                yield from rec(pos + 1)

        yield from rec(0)


def _check_bound(G: FiniteGroupTable, max_order: int) -> None:
    if G.order > max_order:
        raise TableBoundError(f"group order {G.order} exceeds brute-force bound {max_order}")


def brute_force_automorphisms(G: FiniteGroupTable, max_order: int = DEFAULT_BRUTE_BOUND
                              ) -> list[tuple[int, ...]]:
    """Every automorphism of G as a permutation tuple, sorted."""
    _check_bound(G, max_order)
    return sorted(tuple(phi.tolist()) for _, phi in _Searcher(G).search())


def automorphism_generator_images(G: FiniteGroupTable, max_order: int = DEFAULT_BRUTE_BOUND
                                  ) -> list[tuple[int, ...]]:
    """Images of ``G.generators`` (deduplicated) under every automorphism, sorted.

    An automorphism is determined by these images, so this is a compact
    stand-in for the full permutation list on large tables.
    """
    _check_bound(G, max_order)
    return sorted(images for images, _ in _Searcher(G).search())


def count_automorphisms(G: FiniteGroupTable, max_order: int = DEFAULT_BRUTE_BOUND) -> int:
    _check_bound(G, max_order)
    return sum(1 for _ in _Searcher(G).search())
