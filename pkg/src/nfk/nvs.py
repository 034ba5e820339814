"""Counting finite-dimensional near vector spaces over a finite nearfield.

An isomorphism class of dimension d over N is a multiset of d cosets of
Aut(N,+,.) in Aut(N,.) containing the trivial coset, so with k cosets the
number of classes is multichoose(k, d - 1) = C(d + k - 2, d - 1).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import catalog
from . import numtheory as nt
from .descriptor import NearfieldDescriptor
from .dickson import TableBoundError


@dataclass(frozen=True, order=True)
class ClassRepresentative:
    coset_seq: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.coset_seq)


def coset_count(N: NearfieldDescriptor) -> int:
    return catalog.factor_index(N)


def count_nvs(N: NearfieldDescriptor, dim: int) -> int:
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    return nt.multichoose(coset_count(N), dim - 1)


def displayed_binomial(k: int, dim: int) -> int:
    """C(dim + k - 2, dim), the alternative closed form; it is 0 at k = 1."""
    return math.comb(dim + k - 2, dim)


def enumerate_classes(N: NearfieldDescriptor, dim: int, max_count: int = 10**5
                      ) -> list[ClassRepresentative]:
    k = coset_count(N)
    return classes_for(k, dim, max_count)


def classes_for(k: int, dim: int, max_count: int = 10**5) -> list[ClassRepresentative]:
    count = nt.multichoose(k, dim - 1)
    if count > max_count:
        raise TableBoundError(f"{count} classes exceed bound {max_count}")
    return [ClassRepresentative((1,) + tail)
            for tail in itertools.combinations_with_replacement(range(1, k + 1), dim - 1)]


def multiset_oracle(k: int, dim: int) -> int:
    """Count sequences over 1..k that contain 1, up to permutation, by brute force.

    All k^dim sequences are generated (in chunks), each is sorted, and the
    distinct sorted sequences containing 1 are counted.
    """
    if k > 8 or dim > 8:
        raise TableBoundError("multiset oracle limited to k, dim <= 8")
    if k < 1:
        return 0
    total = k**dim
    place = k ** np.arange(dim, dtype=np.int64)
    seen: set[int] = set()
    chunk = 1 << 20
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        seqs = (codes[:, None] // place) % k  # symbol s stands for coset s + 1
        seqs = seqs[(seqs == 0).any(axis=1)]
        seqs.sort(axis=1)
        seen.update(np.unique(seqs @ place).tolist())
    return len(seen)


def _power_maps(p: int) -> list[tuple[int, ...]]:
    """Distinct multiplicative automorphisms x -> x^e of Z_p (0 fixed), as image tuples."""
    maps = {tuple(pow(x, e, p) if x else 0 for x in range(p))
            for e in range(1, p) if math.gcd(e, p - 1) == 1}
    return sorted(maps, key=lambda m: (m != tuple(range(p)), m))


def _invertible_matrices(p: int, dim: int):
    for entries in itertools.product(range(p), repeat=dim * dim):
        M = np.array(entries, dtype=np.int64).reshape(dim, dim)
        if round(np.linalg.det(M)) % p:
            yield M


def nvs_isomorphism_oracle(p: int, dim: int) -> int:
    """Isomorphism classes of near vector spaces (Z_p)^dim over GF(p), by search.

    Scalars act coordinate-wise through power maps with at least one identity
    coordinate; two actions are identified when some invertible matrix
    intertwines them for every vector and scalar.
    """
    if p not in (2, 3, 5) or dim not in (1, 2):
        raise TableBoundError("isomorphism oracle limited to p in {2,3,5}, dim in {1,2}")
    ident = tuple(range(p))
    maps = _power_maps(p)
    actions = [a for a in itertools.product(maps, repeat=dim) if ident in a]
    vectors = np.array(list(itertools.product(range(p), repeat=dim)), dtype=np.int64)
    mats = list(_invertible_matrices(p, dim))

    def act(action, vecs, scalar):
        return vecs * np.array([action[c][scalar] for c in range(dim)]) % p

    def intertwines(M, A, B):
        for s in range(p):
            lhs = act(A, vectors, s) @ M.T % p     # theta(v alpha)
            rhs = act(B, vectors @ M.T % p, s)      # theta(v) alpha
            if not np.array_equal(lhs, rhs):
                return False
        return True

    classes: list[list] = []
    for A in actions:
        for cls in classes:
            if any(intertwines(M, A, cls[0]) for M in mats):
                cls.append(A)
                break
        else:
            classes.append([A])
    return len(classes)
