import numpy as np
import pytest

from nfk import descriptor as desc
from nfk import dickson as dk
from nfk import nearfield as nf


def poly_mul_mod(a, b, modulus, p):
    # schoolbook product reduced by a monic modulus, little-endian coefficients
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    l = len(modulus) - 1
    for d in range(len(prod) - 1, l - 1, -1):
        c = prod[d]
        if c:
            for r in range(l + 1):
                prod[d - l + r] = (prod[d - l + r] - c * modulus[r]) % p
    return (prod + [0] * l)[:l]


def digits(x, p, l):
    return [(x // p**i) % p for i in range(l)]


@pytest.mark.parametrize("p, l, modulus", [(2, 2, [1, 1, 1]), (3, 2, [1, 0, 1]), (2, 3, [1, 1, 0, 1]),
                                           (5, 2, [2, 0, 1])])
def test_smallest_irreducible(p, l, modulus):
    assert nf.smallest_irreducible(p, l) == modulus


def test_gf9_entries():
    F = nf.gf_build(3, 2)
    assert F.mul[3, 3] == 2  # x^2 = -1
    assert F.mul[4, 4] == 6  # (1+x)^2 = 2x
    assert F.add[5, 7] == 0  # (2+x) + (1+2x)


@pytest.mark.parametrize("p, l", [(2, 3), (3, 2), (5, 2), (2, 4), (3, 3), (7, 2)])
def test_gf_tables_against_polynomial_arithmetic(p, l):
    F = nf.gf_build(p, l)
    Q = p**l
    for a in range(Q):
        for b in range(0, Q, 3):
            da, db = digits(a, p, l), digits(b, p, l)
            s = sum(((x + y) % p) * p**i for i, (x, y) in enumerate(zip(da, db)))
            m = sum(c * p**i for i, c in enumerate(poly_mul_mod(da, db, F.modulus, p)))
            assert F.add[a, b] == s and F.mul[a, b] == m
    assert sorted(F.exp.tolist()) == list(range(1, Q))
    # gamma is the least primitive element
    for c in range(2, F.gamma):
        x, seen = c, 1
        while x != 1:
            x = int(F.mul[x, c])
            seen += 1
        assert seen < Q - 1


def test_gf_bound():
    with pytest.raises(dk.TableBoundError):
        nf.gf_build(2, 10)


def test_coupling_residues():
    assert nf.coupling_residues(dk.validate_dickson_pair(7, 3)) == [0, 1, 2]
    assert nf.coupling_residues(dk.validate_dickson_pair(5, 4)) == [0, 1, 2, 3]


def test_dickson_product_rule():
    P = dk.validate_dickson_pair(3, 2)
    T = nf.dickson_nearfield(P)
    F = T.base
    for x in range(1, 9):
        for y in range(1, 9):
            j = int(T.coupling[y])
            xq = 1
            for _ in range(P.q**j):
                xq = int(F.mul[xq, x])
            assert T.mul[x, y] == F.mul[xq, y]


NEARFIELD_PAIRS = [(P.q, P.n) for P in dk.dickson_pairs(728)]


def test_nearfield_pair_list():
    assert NEARFIELD_PAIRS == [(3, 2), (5, 2), (7, 2), (4, 3), (9, 2), (11, 2), (13, 2), (17, 2),
                               (7, 3), (19, 2), (23, 2), (5, 4), (25, 2), (27, 2)]


@pytest.mark.parametrize("q, n", NEARFIELD_PAIRS)
def test_dickson_nearfield_axioms(q, n):
    P = dk.validate_dickson_pair(q, n)
    T = nf.dickson_nearfield(P)
    r = nf.verify_nearfield_axioms(T)
    assert r["ok"]
    assert not r["left_distributive"]
    c, a, b = r["left_distributivity_witness"]
    assert T.mul[c, T.add[a, b]] != T.add[T.mul[c, a], T.mul[c, b]]
    match = nf.match_presentation(T)
    assert len(np.unique(match.iso)) == P.order


def test_field_as_nearfield_is_a_field():
    T = nf.field_as_nearfield(2, 3)
    r = nf.verify_nearfield_axioms(T)
    assert r["ok"] and r["left_distributive"] and r["left_distributivity_witness"] is None
    assert len(nf.nearfield_automorphisms(T)) == 3


def test_axiom_checker_catches_a_swapped_entry():
    T = nf.dickson_nearfield(dk.validate_dickson_pair(5, 2))
    mul = T.mul.copy()
    mul[3, 4], mul[3, 5] = mul[3, 5], mul[3, 4]
    broken = nf.NearfieldTable(T.order, T.p, T.add, mul, T.params)
    r = nf.verify_nearfield_axioms(broken)
    assert not r["ok"]
    assert not r["right_distributive"]


@pytest.mark.parametrize("q, n, count", [(3, 2, 6), (5, 2, 2), (7, 2, 2), (4, 3, 3), (7, 3, 3),
                                         (13, 2, 2), (9, 2, 4), (5, 4, 4), (27, 2, 6)])
def test_nearfield_automorphism_counts(q, n, count):
    P = dk.validate_dickson_pair(q, n)
    auts = nf.nearfield_automorphisms(nf.dickson_nearfield(P))
    assert len(auts) == count == nf.nearfield_aut_order(desc.dickson(q, n))


def test_aut_order_for_fields_and_exceptional():
    assert nf.nearfield_aut_order(desc.field(81)) == 4
    assert nf.nearfield_aut_order(desc.exceptional("I")) == 4
    assert nf.nearfield_aut_order(desc.exceptional("VII")) == 1


def test_export_csv():
    T = nf.dickson_nearfield(dk.validate_dickson_pair(3, 2))
    lines = nf.export_csv(T).splitlines()
    assert lines[0] == "# nearfield 3 2"
    assert len(lines) == 82
    assert lines[1] == "0 0 0 0"
    i, j, s, m = map(int, lines[1 + 3 * 9 + 3].split())
    assert (i, j, s, m) == (3, 3, T.add[3, 3], T.mul[3, 3])
