"""Finite fields and Dickson nearfields as explicit tables.

Elements of GF(p^l) are the integers 0 .. p^l - 1, read as little-endian
base-p digit vectors of polynomial coefficients.  A Dickson nearfield DF(q,n)
keeps the addition of GF(q^n) and twists the product by Frobenius powers:

    x o y = x^(q^j(y)) * y,

where gamma^e has class j when e = (q^j - 1)/(q - 1) (mod n).
"""
from __future__ import annotations

import io
import itertools
from dataclasses import dataclass, field

import numpy as np

from . import dickson as dk
from . import numtheory as nt
from .descriptor import NearfieldDescriptor
from .dickson import DicksonParams, TableBoundError
from .group_table import FiniteGroupTable

DEFAULT_MAX_ORDER = 729


class ConstructionError(RuntimeError):
    pass


def _digits(x: int, p: int, l: int) -> list[int]:
    out = []
    for _ in range(l):
        x, d = divmod(x, p)
        out.append(d)
    return out


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    num = num[:]
    inv_lead = pow(den[-1], -1, p)
    while len(num) >= len(den):
        coef = num[-1] * inv_lead % p
        shift = len(num) - len(den)
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - coef * c) % p
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    return num


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1 .. deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, l: int) -> list[int]:
    """Monic irreducible of degree l whose lower coefficients, read as a
    little-endian base-p number, are least."""
    for code in range(p**l):
        poly = _digits(code, p, l) + [1]
        if is_irreducible(poly, p):
            return poly
    raise ConstructionError(f"no irreducible polynomial of degree {l} over Z_{p}")


@dataclass(eq=False)
class FieldTable:
    p: int
    l: int
    modulus: list[int]
    add: np.ndarray
    mul: np.ndarray
    gamma: int
    log: np.ndarray = field(repr=False)  # log[0] = -1
    exp: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return self.p**self.l


def gf_build(p: int, l: int, max_order: int = DEFAULT_MAX_ORDER) -> FieldTable:
    Q = p**l
    if Q > max_order:
        raise TableBoundError(f"field order {Q} exceeds bound {max_order}")
    modulus = smallest_irreducible(p, l)
    digits = np.array([_digits(x, p, l) for x in range(Q)], dtype=np.int64).reshape(Q, l)
    weights = p ** np.arange(l, dtype=np.int64)
    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights

    # xmul[i] is the l x l matrix of multiplication by x^i in the power basis
    xmul = []
    M = np.eye(l, dtype=np.int64)
    shift = np.zeros((l, l), dtype=np.int64)
    for c in range(l):
        col = [0] * l
        if c + 1 < l:
            col[c + 1] = 1
        else:
            col = [(-modulus[r]) % p for r in range(l)]
        shift[:, c] = col
    for _ in range(l):
        xmul.append(M)
        M = shift @ M % p
    # products: digits of a*b = sum_i a_i * (x^i b)
    xb = np.stack([digits @ Mi.T % p for Mi in xmul])  # (l, Q, l)
    prod = np.einsum("ai,ibk->abk", digits, xb) % p
    mul = prod @ weights

    gamma = _first_primitive(mul, Q)
    exp = np.empty(Q - 1, dtype=np.int64)
    x = 1
    for e in range(Q - 1):
        exp[e] = x
        x = int(mul[x, gamma])
    log = np.full(Q, -1, dtype=np.int64)
    log[exp] = np.arange(Q - 1)
    return FieldTable(p, l, modulus, add.astype(np.int32), mul.astype(np.int32), gamma, log, exp)


def _first_primitive(mul: np.ndarray, Q: int) -> int:
    if Q == 2:
        return 1
    primes = nt.factorize(Q - 1).primes

    def power(x, e):
        r = 1
        while e:
            if e & 1:
                r = int(mul[r, x])
            x = int(mul[x, x])
            e >>= 1
        return r

    for c in range(2, Q):
        if all(power(c, (Q - 1) // r) != 1 for r in primes):
            return c
    raise ConstructionError("no primitive element")


@dataclass(eq=False)
class NearfieldTable:
    order: int
    p: int
    add: np.ndarray
    mul: np.ndarray
    params: DicksonParams
    base: FieldTable | None = None
    coupling: np.ndarray | None = None  # class j of each element, -1 at zero

    @property
    def n(self) -> int:
        return self.params.n


def coupling_residues(P: DicksonParams) -> list[int]:
    return [((P.q**j - 1) // (P.q - 1)) % P.n for j in range(P.n)]


def dickson_nearfield(P: DicksonParams, max_order: int = DEFAULT_MAX_ORDER) -> NearfieldTable:
    Q = P.q**P.n
    if Q > max_order:
        raise TableBoundError(f"nearfield order {Q} exceeds bound {max_order}")
    F = gf_build(P.p, P.l * P.n, max_order)
    residues = coupling_residues(P)
    if sorted(residues) != list(range(P.n)):
        raise ConstructionError(f"coupling residues {residues} not a complete system mod {P.n}")
    class_of_residue = {r: j for j, r in enumerate(residues)}
    logs = F.log
    coupling = np.full(Q, -1, dtype=np.int64)
    coupling[1:] = [class_of_residue[int(e) % P.n] for e in logs[1:]]
    twist = np.array([pow(P.q, j, Q - 1) for j in range(P.n)], dtype=np.int64)

    mul = np.zeros((Q, Q), dtype=np.int32)
    lx = logs[1:][:, None]
    ly = logs[1:][None, :]
    mul[1:, 1:] = F.exp[(lx * twist[coupling[1:]][None, :] + ly) % (Q - 1)]
    return NearfieldTable(Q, P.p, F.add, mul, P, F, coupling)


def field_as_nearfield(p: int, l: int, max_order: int = DEFAULT_MAX_ORDER) -> NearfieldTable:
    """GF(p^l) wrapped as the trivial Dickson nearfield (q, 1)."""
    F = gf_build(p, l, max_order)
    P = dk.validate_dickson_pair(p**l, 1)
    return NearfieldTable(F.order, p, F.add, F.mul, P, F, np.where(F.log < 0, -1, 0))


# -- axioms -------------------------------------------------------------------

def _assoc(op: np.ndarray, elems: np.ndarray) -> bool:
    sub = op[np.ix_(elems, elems)]
    for a in elems:
        # (a*b)*c == a*(b*c) for all b, c in elems
        if not np.array_equal(op[op[a, elems]][:, elems], op[a][sub]):
            return False
    return True


def _is_group(op: np.ndarray, elems: np.ndarray) -> dict[str, bool]:
    elems = np.asarray(elems)
    sub = op[np.ix_(elems, elems)]
    closed = bool(np.isin(sub, elems).all())
    ident = [e for e in elems if np.array_equal(op[e, elems], elems) and np.array_equal(op[elems, e], elems)]
    latin = closed and all(len(np.unique(row)) == len(elems) for row in sub) \
        and all(len(np.unique(col)) == len(elems) for col in sub.T)
    return {
        "closure": closed,
        "identity": bool(ident),
        "inverses": bool(ident) and latin,
        "associativity": closed and _assoc(op, elems),
    }


def verify_nearfield_axioms(T: NearfieldTable) -> dict:
    add, mul = T.add, T.mul
    N = T.order
    all_elems = np.arange(N)
    nonzero = np.arange(1, N)
    report = {}
    ag = _is_group(add, all_elems)
    report["additive_group"] = all(ag.values()) and bool(np.array_equal(add[0], all_elems))
    report["additive_commutative"] = bool(np.array_equal(add, add.T))
    multiple = all_elems.copy()
    for _ in range(T.p - 1):
        multiple = add[multiple, all_elems]
    report["elementary_abelian"] = bool((multiple == 0).all())
    mg = _is_group(mul, nonzero)
    report["multiplicative_group"] = all(mg.values())
    report["zero_annihilation"] = bool((mul[0] == 0).all() and (mul[:, 0] == 0).all())
    right = True
    for a in range(N):
        # (a+b)c == ac + bc
        if not np.array_equal(mul[add[a]], add[mul[a][None, :], mul]):
            right = False
            break
    report["right_distributive"] = right
    report["left_distributive"], report["left_distributivity_witness"] = _left_witness(T)
    report["ok"] = all(report[k] for k in ("additive_group", "additive_commutative",
                                           "elementary_abelian", "multiplicative_group",
                                           "zero_annihilation", "right_distributive"))
    return report


def _left_witness(T: NearfieldTable):
    add, mul = T.add, T.mul
    for c in range(T.order):
        # c(a+b) vs ca + cb over all a, b
        lhs = mul[c][add]
        rhs = add[mul[c][:, None], mul[c][None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            a, b = bad[0]
            return False, (int(c), int(a), int(b))
    return True, None


# -- multiplicative structure ---------------------------------------------------

def multiplicative_group(T: NearfieldTable) -> FiniteGroupTable:
    """(N \\ {0}, o) with nearfield element x stored at index x - 1."""
    sub = T.mul[1:, 1:] - 1
    return FiniteGroupTable(sub, 0, (), list(range(1, T.order)), f"mult{T.params}")


@dataclass(eq=False)
class PresentationMatch:
    A: int
    B: int
    iso: np.ndarray  # iso[index of a^i b^j in build_group_table] = nearfield element
    coords: np.ndarray = field(repr=False)  # coords[x] = (i, j) with x = A^i o B^j


def _power_vec(mul, xs, e, one):
    result = np.full(len(xs), one, dtype=np.int64)
    base = np.asarray(xs)
    while e:
        if e & 1:
            result = mul[result, base]
        base = mul[base, base]
        e >>= 1
    return result


def _presentation_images(T, A, B):
    """Nearfield elements A^i o B^j, indexed like build_group_table (i*n + j)."""
    P = T.params
    mul = T.mul
    powA = np.empty(P.m, dtype=np.int64)
    powB = np.empty(P.n, dtype=np.int64)
    x = 1
    for i in range(P.m):
        powA[i] = x
        x = int(mul[x, A])
    x = 1
    for j in range(P.n):
        powB[j] = x
        x = int(mul[x, B])
    return mul[powA[:, None], powB[None, :]].reshape(-1)


def _relation_mask(T, A, cands):
    """Which candidate B satisfy B^n = A^t and B o A = A^q o B."""
    P = T.params
    mul = T.mul
    cands = np.asarray(cands, dtype=np.int64)
    At = _power_vec(mul, [A], P.t, 1)[0]
    Aq = _power_vec(mul, [A], P.q, 1)[0]
    ok = _power_vec(mul, cands, P.n, 1) == At
    ok &= mul[cands, A] == mul[Aq, cands]
    return ok


def element_orders(T: NearfieldTable) -> np.ndarray:
    """Multiplicative order of each element (0 at zero)."""
    orders = np.zeros(T.order, dtype=np.int64)
    orders[1:] = multiplicative_group(T).element_orders()
    return orders


def match_presentation(T: NearfieldTable) -> PresentationMatch:
    P = T.params
    G = dk.build_group_table(P, max_order=T.order)
    orders = element_orders(T)
    candidates = np.flatnonzero(orders == P.m)
    nonzero = np.arange(1, T.order)
    for A in candidates.tolist():
        for B in nonzero[_relation_mask(T, A, nonzero)].tolist():
            iso = _presentation_images(T, A, B)
            if len(np.unique(iso)) != P.order:
                continue
            # homomorphism check against the normal-form table
            if not np.array_equal(iso[G.mul], T.mul[iso[:, None], iso[None, :]]):
                continue
            coords = np.full((T.order, 2), -1, dtype=np.int64)
            idx = np.arange(P.order)
            coords[iso] = np.stack([idx // P.n, idx % P.n], axis=1)
            return PresentationMatch(A, B, iso, coords)
    raise ConstructionError(f"no presentation match for DF{P}")


def nearfield_automorphisms(T: NearfieldTable, max_order: int = DEFAULT_MAX_ORDER
                            ) -> list[tuple[int, ...]]:
    """All bijections preserving + and o, as sorted permutation tuples.

    Images of the generating pair (A, B) are searched among elements with the
    same multiplicative orders satisfying the defining relations; each
    candidate is extended multiplicatively and kept iff it is additive and
    multiplicative.
    """
    if T.order > max_order:
        raise TableBoundError(f"nearfield order {T.order} exceeds bound {max_order}")
    P = T.params
    match = match_presentation(T)
    orders = element_orders(T)
    i_coord, j_coord = match.coords[1:, 0], match.coords[1:, 1]
    a_cands = np.flatnonzero(orders == orders[match.A])
    b_cands = np.flatnonzero(orders == orders[match.B])
    add, mul = T.add, T.mul
    found = []
    for A2 in a_cands.tolist():
        for B2 in b_cands[_relation_mask(T, A2, b_cands)].tolist():
            images = _presentation_images(T, A2, B2).reshape(P.m, P.n)
            phi = np.zeros(T.order, dtype=np.int64)
            phi[1:] = images[i_coord, j_coord]
            if len(np.unique(phi)) != T.order:
                continue
            if not np.array_equal(phi[add[1]], add[phi[1], phi]):
                continue
            if not np.array_equal(phi[add], add[phi[:, None], phi[None, :]]):
                continue
            if not np.array_equal(phi[mul], mul[phi[:, None], phi[None, :]]):
                continue
            found.append(tuple(phi.tolist()))
    return sorted(found)


def nearfield_aut_order(N: NearfieldDescriptor) -> int:
    if N.kind == "field":
        return N.l
    if N.kind == "dickson":
        P = N.params
        if (P.q, P.n) == (3, 2):
            return 6
        return P.l * P.n // P.p_order_mod_n
    from .catalog import exceptional_record
    return exceptional_record(N.label).nf_aut_order


def export_csv(T: NearfieldTable) -> str:
    """Rows ``i j add(i,j) mul(i,j)``; elements are little-endian base-p digit indices."""
    buf = io.StringIO()
    buf.write(f"# nearfield {T.params.q} {T.params.n}\n")
    for i in range(T.order):
        for j in range(T.order):
            buf.write(f"{i} {j} {T.add[i, j]} {T.mul[i, j]}\n")
    return buf.getvalue()
