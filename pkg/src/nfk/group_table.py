"""Explicit finite groups given by a multiplication table.

This is the substrate for the brute-force oracles: nothing here knows about
presentations or nearfields, only about a Cayley table.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import numtheory as nt


class GroupTableError(ValueError):
    pass


@dataclass(eq=False)
class FiniteGroupTable:
    mul: np.ndarray
    identity: int
    generators: tuple[int, ...]
    element_names: list | None = None
    name: str = "group"
    _orders: np.ndarray | None = field(default=None, repr=False)
    _inverses: np.ndarray | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    def op(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    def power(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inverse(x), -e
        result = self.identity
        base = x
        while e:
            if e & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            e >>= 1
        return result

    def inverses(self) -> np.ndarray:
        if self._inverses is None:
            rows, cols = np.nonzero(self.mul == self.identity)
            inv = np.empty(self.order, dtype=np.int64)
            inv[rows] = cols
            self._inverses = inv
        return self._inverses

    def inverse(self, x: int) -> int:
        return int(self.inverses()[x])

    def element_orders(self) -> np.ndarray:
        """Order of every element, computed by walking powers in parallel."""
        if self._orders is None:
            n = self.order
            orders = np.zeros(n, dtype=np.int64)
            cur = np.arange(n)
            idx = np.arange(n)
            k = 1
            while (orders == 0).any():
                hit = (cur == self.identity) & (orders == 0)
                orders[hit] = k
                cur = self.mul[cur, idx]
                k += 1
                if k > n + 1:
                    raise GroupTableError("table is not a group")
            self._orders = orders
        return self._orders

    def elem_order(self, x: int) -> int:
        return int(self.element_orders()[x])

    def label(self, x: int):
        return self.element_names[x] if self.element_names is not None else x


def from_elements(elements, op, name="group", generators=None) -> FiniteGroupTable:
    """Build a table from a list of hashable elements and a binary operation."""
    elements = list(elements)
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    mul = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            try:
                mul[i, j] = index[op(x, y)]
            except KeyError:
                raise GroupTableError(f"{name}: product leaves the element set") from None
    identity = identity_of(mul)
    G = FiniteGroupTable(mul, identity, (), elements, name)
    G.generators = tuple(generators) if generators is not None else find_generators(G)
    return G


def identity_of(mul: np.ndarray) -> int:
    n = mul.shape[0]
    idx = np.arange(n)
    for e in range(n):
        if (mul[e] == idx).all() and (mul[:, e] == idx).all():
            return e
    raise GroupTableError("no identity element")


def check_group_axioms(G: FiniteGroupTable) -> dict[str, bool]:
    mul = G.mul
    n = G.order
    idx = np.arange(n)
    closed = bool(((mul >= 0) & (mul < n)).all())
    latin = closed and all(
        len(np.unique(mul[i])) == n and len(np.unique(mul[:, i])) == n for i in range(n)
    )
    ident = closed and bool((mul[G.identity] == idx).all() and (mul[:, G.identity] == idx).all())
    assoc = closed and all(np.array_equal(mul[mul[a]], mul[a][mul]) for a in range(n))
    return {"closure": closed, "identity": ident, "inverses": latin, "associativity": assoc}


def generated_subgroup(G: FiniteGroupTable, gens) -> list[int]:
    """Elements of the subgroup generated by ``gens`` (sorted)."""
    seen = {G.identity}
    queue = deque([G.identity])
    gens = list(gens)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = int(G.mul[x, g])
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def find_generators(G: FiniteGroupTable) -> tuple[int, ...]:
    """Greedy small generating set: repeatedly add the highest-order element
    outside the current subgroup (ties broken by index)."""
    orders = G.element_orders()
    by_order = sorted(range(G.order), key=lambda x: (-orders[x], x))
    gens: list[int] = []
    current = {G.identity}
    for x in by_order:
        if len(current) == G.order:
            break
        if x in current:
            continue
        gens.append(x)
        current = set(generated_subgroup(G, gens))
    return tuple(gens)


def center(G: FiniteGroupTable) -> list[int]:
    mul = G.mul
    return [z for z in range(G.order) if np.array_equal(mul[z], mul[:, z])]


def sylow_structure(G: FiniteGroupTable) -> dict[int, str]:
    """Classify each Sylow subgroup as 'cyclic', 'quaternion' or 'other'.

    A Sylow p-subgroup is cyclic iff some element has the full p-power order.
    Otherwise we locate a Sylow 2-subgroup containing an element of maximal
    2-power order and test for a unique involution, which for a non-cyclic
    2-group characterises the generalized quaternion groups.
    """
    orders = G.element_orders()
    result = {}
    for p, e in nt.factorize(G.order).factors:
        full = p**e
        if (orders == full).any():
            result[p] = "cyclic"
            continue
        if p != 2:
            result[p] = "other"
            continue
        result[p] = "other"
        two_elems = [x for x in range(G.order) if orders[x] in {2**k for k in range(e + 1)}]
        x = max(two_elems, key=lambda y: (orders[y], -y))
        for y in two_elems:
            if y in generated_subgroup(G, [x]):
                continue
            H = _bounded_subgroup(G, [x, y], full)
            if H is None or len(H) != full:
                continue
            involutions = [h for h in H if orders[h] == 2]
            if len(involutions) == 1:
                result[p] = "quaternion"
            break
    return result


def _bounded_subgroup(G, gens, bound):
    seen = {G.identity}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = int(G.mul[x, g])
            if y not in seen:
                seen.add(y)
                if len(seen) > bound:
                    return None
                queue.append(y)
    return seen


def cyclic_group(n: int) -> FiniteGroupTable:
    idx = np.arange(n)
    mul = (idx[:, None] + idx[None, :]) % n
    return FiniteGroupTable(mul, 0, (1 % n,) if n > 1 else (0,), None, f"Z{n}")


def direct_product(G: FiniteGroupTable, H: FiniteGroupTable, name=None) -> FiniteGroupTable:
    """Table of G x H with element (g, h) at index g * |H| + h."""
    ng, nh = G.order, H.order
    gi = np.repeat(np.arange(ng), nh)
    hi = np.tile(np.arange(nh), ng)
    mul = G.mul[gi[:, None], gi[None, :]] * nh + H.mul[hi[:, None], hi[None, :]]
    names = None
    if G.element_names is not None or H.element_names is not None:
        names = [(G.label(g), H.label(h)) for g, h in zip(gi.tolist(), hi.tolist())]
    P = FiniteGroupTable(mul, G.identity * nh + H.identity, (), names,
                         name or f"{G.name}x{H.name}")
    P.generators = find_generators(P)
    return P
