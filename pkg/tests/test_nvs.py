import itertools

import pytest

from nfk import descriptor as desc
from nfk import numtheory as nt
from nfk import nvs


@pytest.mark.parametrize("spec, dim, count", [
    ("field:2", 1, 1), ("field:2", 5, 1), ("field:5", 2, 2), ("field:7", 3, 3),
    ("dickson:5,2", 2, 12), ("dickson:5,2", 3, 78), ("exceptional:I", 2, 6), ("exceptional:I", 3, 21),
])
def test_count_nvs(spec, dim, count):
    assert nvs.count_nvs(desc.parse(spec), dim) == count


def test_dim_must_be_positive():
    with pytest.raises(ValueError):
        nvs.count_nvs(desc.field(5), 0)


def test_multiset_oracle_grid():
    for k in range(1, 9):
        for d in range(1, 9):
            assert nvs.multiset_oracle(k, d) == nt.multichoose(k, d - 1), (k, d)


def test_multiset_oracle_bound():
    with pytest.raises(Exception):
        nvs.multiset_oracle(9, 2)


def test_class_representatives():
    reps = nvs.classes_for(3, 3)
    assert [r.coset_seq for r in reps] == [(1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 2), (1, 2, 3), (1, 3, 3)]
    assert all(r.dim == 3 for r in reps)
    # the same classes by sorting every sequence containing coset 1
    brute = {tuple(sorted(s)) for s in itertools.product(range(1, 4), repeat=3) if 1 in s}
    assert {r.coset_seq for r in reps} == brute


def test_enumerate_classes_bound():
    with pytest.raises(Exception):
        nvs.enumerate_classes(desc.exceptional("VII"), 4, max_count=1000)


def test_displayed_binomial_differs_at_k1():
    assert nvs.displayed_binomial(1, 3) == 0
    assert nvs.count_nvs(desc.field(3), 3) == 1
    # for k >= 2 the displayed form does not agree with the multichoose count either
    assert nvs.displayed_binomial(2, 2) == 1 != nvs.count_nvs(desc.field(5), 2)


@pytest.mark.parametrize("p, dim, count", [(2, 1, 1), (2, 2, 1), (3, 1, 1), (3, 2, 1), (5, 1, 1), (5, 2, 2)])
def test_isomorphism_oracle(p, dim, count):
    assert nvs.nvs_isomorphism_oracle(p, dim) == count == nvs.count_nvs(desc.field(p), dim)
