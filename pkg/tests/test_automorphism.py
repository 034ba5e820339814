import math

import numpy as np
import pytest

from nfk import automorphism as au
from nfk import dickson as dk
from nfk import group_table as gt
from nfk.automorphism import AutPair


def params(q, n):
    return dk.validate_dickson_pair(q, n)


def brute_S(P):
    # direct double loop over (i, k) in Z_m x Z_m
    m, c = P.m, (P.q**P.n - 1) // (P.q - 1)
    return {(i, k) for i in range(m) if math.gcd(i, m) == 1
            for k in range(m) if (k * c + P.t - i * P.t) % m == 0}


@pytest.mark.parametrize("q, n, size", [(5, 2, 24), (7, 2, 64), (7, 3, 1026), (5, 4, 3744)])
def test_count_S_examples(q, n, size):
    P = params(q, n)
    assert au.count_S(P) == size == len(brute_S(P))


def test_enumerate_S_matches_double_loop():
    for P in dk.dickson_pairs(1500):
        if (P.q, P.n) == (3, 2):
            continue
        assert {(x.i, x.k) for x in au.enumerate_S(P)} == brute_S(P), P


def test_pair_membership():
    P = params(5, 2)
    assert au.is_automorphism_pair(1, 0, P)
    assert au.is_automorphism_pair(5, 0, P)
    assert not au.is_automorphism_pair(5, 1, P)
    assert not au.is_automorphism_pair(2, 0, P)


def test_quaternion_pair_excluded():
    P = params(3, 2)
    for fn in (au.enumerate_S, au.count_S, au.enumerate_T, au.rho, au.aut_count_corrho,
               au.aut_count_closed):
        with pytest.raises(au.ExcludedPairError, match="excluded pair"):
            fn(P)


@pytest.mark.parametrize("q, n, value", [(5, 2, 24), (7, 2, 64), (11, 2, 192), (23, 2, 1920)])
def test_corrho_examples(q, n, value):
    assert au.aut_count_corrho(params(q, n)) == value


@pytest.mark.parametrize("q, n, r", [(5, 2, (1, 1)), (7, 2, (1, 1)), (7, 3, (2, 1)), (13, 3, (2, 1))])
def test_rho_values(q, n, r):
    from fractions import Fraction
    assert au.rho(params(q, n)) == Fraction(*r)


def test_rho_is_inverse_proportion_of_solvable_units():
    for P in dk.dickson_pairs(10**4):
        if (P.q, P.n) == (3, 2):
            continue
        units = [i for i in range(P.m) if math.gcd(i, P.m) == 1]
        solvable = sum(1 for i in units if au.solve_k_fiber(i, P))
        from fractions import Fraction
        assert 1 / au.rho(P) == Fraction(solvable, len(units)), P


def test_closed_form_flags_gcd_two():
    c = au.aut_count_closed(params(7, 2))
    assert (c.value, c.trusted) == (32, False)
    assert "gcd(n,t)=2" in c.note
    c = au.aut_count_closed(params(11, 2))
    assert (c.value, c.trusted) == (96, False)
    c = au.aut_count_closed(params(5, 2))
    assert (c.value, c.trusted) == (24, True)


def test_closed_form_over_all_pairs():
    for P in dk.dickson_pairs(10**5):
        if (P.q, P.n) == (3, 2):
            continue
        c = au.aut_count_closed(P)
        exact = au.aut_count_corrho(P)
        assert c.value * P.gcd_nt == exact, P
        assert c.trusted == (P.gcd_nt == 1)


def test_n2_lemma():
    assert au.aut_count_n2(params(5, 2)) == 24
    with pytest.raises(ValueError):
        au.aut_count_n2(params(7, 3))


@pytest.mark.slow
def test_S_equals_t_times_T_up_to_1e5():
    for P in dk.dickson_pairs(10**5 * 12):
        if (P.q, P.n) == (3, 2) or P.m > 10**5:
            continue
        assert au.count_S(P) == P.t * au.count_T(P), P


def test_fiber_sizes():
    for P in dk.dickson_pairs(3000):
        if (P.q, P.n) == (3, 2):
            continue
        for i in range(P.m):
            if math.gcd(i, P.m) == 1:
                assert len(au.solve_k_fiber(i, P)) in (0, P.g)


def test_composition_is_the_map_composition():
    P = params(7, 2)
    S = au.enumerate_S(P)
    x = dk.GroupElement(5, 1)
    for phi in S[:10]:
        for psi in S[-10:]:
            both = au.compose(phi, psi, P)
            assert au.is_automorphism_pair(both.i, both.k, P)
            assert au.apply(both, x, P) == au.apply(phi, au.apply(psi, x, P), P)
        inv = au.inverse(phi, P)
        assert au.compose(phi, inv, P) == AutPair(1, 0)


def test_apply_table_matches_apply():
    P = params(5, 2)
    for phi in au.enumerate_S(P):
        perm = au.apply_table(phi, P)
        assert sorted(perm.tolist()) == list(range(P.order))
        for idx in range(P.order):
            x = dk.index_element(idx, P)
            assert dk.index_element(int(perm[idx]), P) == au.apply(phi, x, P)


def test_inner_automorphisms():
    for P in dk.dickson_pairs(600):
        if (P.q, P.n) == (3, 2):
            continue
        inner = {au.conjugation_pair(dk.index_element(x, P), P) for x in range(P.order)}
        assert len(inner) == au.inner_count(P) == P.t * P.n
        assert au.count_S(P) % len(inner) == 0


def test_brute_force_quaternion():
    G = dk.build_group_table(params(3, 2))
    auts = au.brute_force_automorphisms(G)
    assert len(auts) == 24
    assert au.count_automorphisms(G) == 24
    # the outer part acts as S3 on the three pairs {+-i}, {+-j}, {+-k}
    inner = {tuple(G.mul[G.mul[g]][:, G.inverse(g)].tolist()) for g in range(8)}
    assert len(inner) == 4


def test_brute_force_small_cyclic_and_products():
    assert au.count_automorphisms(gt.cyclic_group(12)) == 4
    V = gt.direct_product(gt.cyclic_group(2), gt.cyclic_group(2))
    assert au.count_automorphisms(V) == 6
    Z2Z4 = gt.direct_product(gt.cyclic_group(2), gt.cyclic_group(4))
    assert au.count_automorphisms(Z2Z4) == 8


def test_brute_force_permutations_are_automorphisms():
    P = params(5, 2)
    G = dk.build_group_table(P)
    auts = au.brute_force_automorphisms(G)
    assert len(auts) == 24
    for perm in auts:
        phi = np.array(perm)
        assert (phi[G.mul] == G.mul[np.ix_(phi, phi)]).all()
    assert sorted(tuple(au.apply_table(x, P).tolist()) for x in au.enumerate_S(P)) == auts


def test_brute_force_bound():
    with pytest.raises(dk.TableBoundError):
        au.count_automorphisms(dk.build_group_table(params(7, 3)), max_order=100)


@pytest.mark.slow
def test_triangle_all_pairs_to_3000():
    for P in dk.dickson_pairs(3000):
        if (P.q, P.n) == (3, 2):
            continue
        G = dk.build_group_table(P)
        images = au.automorphism_generator_images(G)
        expected = sorted((x.i * P.n, x.k * P.n + 1) for x in au.enumerate_S(P))
        assert images == expected, P
        assert len(images) == au.aut_count_corrho(P)
