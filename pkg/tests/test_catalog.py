from pathlib import Path

import pytest

from nfk import automorphism as au
from nfk import catalog
from nfk import descriptor as desc
from nfk import dickson as dk
from nfk import group_table as gt
from nfk import numtheory as nt

GOLDEN = Path(__file__).parent / "golden"

# (label, order, multiplicative group, automorphism group)
GROUP_ROWS = [
    ("I", "5^2", "SL(2,3)", "S4"),
    ("II", "11^2", "SL(2,3)xZ5", "S4xZ4"),
    ("III", "7^2", "2O", "S4xZ2"),
    ("IV", "23^2", "2OxZ11", "S4xZ2xZ10"),
    ("V", "11^2", "SL(2,5)", "S5"),
    ("VI", "29^2", "SL(2,5)xZ7", "S5xZ6"),
    ("VII", "59^2", "SL(2,5)xZ29", "S5xZ28"),
]
# (label, |Aut(N,+,.)|, |Aut(N,.)|, index)
COUNT_ROWS = [
    ("I", 4, 24, 6), ("II", 2, 96, 48), ("III", 3, 48, 16), ("IV", 1, 480, 480),
    ("V", 5, 120, 24), ("VI", 2, 720, 360), ("VII", 1, 3360, 3360),
]


def test_group_table_rows():
    got = [(r.label, r.order_text, r.mult_group_name, r.group_aut_name) for r in catalog.exceptional_table()]
    assert got == GROUP_ROWS


def test_count_table_rows():
    got = [(r.label, r.nf_aut_order, r.group_aut_order, r.factor) for r in catalog.exceptional_table()]
    assert got == COUNT_ROWS
    for r in catalog.exceptional_table():
        assert r.group_aut_order == r.nf_aut_order * r.factor


def test_unknown_label():
    with pytest.raises(KeyError):
        catalog.exceptional_record("VIII")


@pytest.mark.parametrize("p, order", [(3, 24), (5, 120)])
def test_special_linear_group(p, order):
    G = catalog.special_linear_group(p)
    assert G.order == order
    assert all(gt.check_group_axioms(G).values())
    assert len(gt.center(G)) == 2


def test_binary_octahedral_group():
    G = catalog.binary_octahedral_group()
    assert G.order == 48
    assert all(gt.check_group_axioms(G).values())
    assert sorted(set(G.element_orders().tolist())) == [1, 2, 3, 4, 6, 8]
    assert len(gt.center(G)) == 2
    assert gt.sylow_structure(G) == {2: "quaternion", 3: "cyclic"}


@pytest.mark.parametrize("label, count", [("I", 24), ("III", 48), ("V", 120)])
def test_exceptional_automorphism_counts(label, count):
    assert au.count_automorphisms(catalog.exceptional_group(label)) == count


@pytest.mark.slow
@pytest.mark.parametrize("label, count", [("II", 96), ("IV", 480), ("VI", 720)])
def test_exceptional_product_counts(label, count):
    G = catalog.exceptional_group(label, max_order=2000)
    assert au.count_automorphisms(G, G.order) == count


def test_exceptional_group_bound():
    with pytest.raises(dk.TableBoundError):
        catalog.exceptional_group("VII", max_order=200)


@pytest.mark.parametrize("q, mult, l, factor", [(2, 1, 1, 1), (7, 2, 1, 2), (9, 4, 2, 2), (64, 36, 6, 6),
                                                (81, 32, 4, 8)])
def test_field_counts(q, mult, l, factor):
    p, ll = nt.is_prime_power(q)
    got = catalog.field_counts(p, ll)
    assert got == (mult, l, factor)
    assert catalog.factor_index(desc.field(q)) == factor


@pytest.mark.parametrize("spec, mult, nf_aut, factor, provenance", [
    ("dickson:3,2", 24, 6, 4, "brute-force"),
    ("dickson:5,2", 24, 2, 12, "enumeration"),
    ("dickson:7,2", 64, 2, 32, "enumeration"),
    ("dickson:7,3", 1026, 3, 342, "enumeration"),
    ("dickson:53,2", 23328, 2, 11664, "enumeration"),
    ("dickson:59,2", 26880, 2, 13440, "formula"),
    ("exceptional:I", 24, 4, 6, "table"),
])
def test_factor_details(spec, mult, nf_aut, factor, provenance):
    r = catalog.factor_details(desc.parse(spec))
    assert (r.mult_aut, r.nf_aut, r.factor, r.provenance) == (mult, nf_aut, factor, provenance)


def test_dumps_match_golden_files():
    assert catalog.dump_csv() == (GOLDEN / "exceptional_counts.csv").read_text()
    assert catalog.dump_csv("groups") == (GOLDEN / "exceptional_groups.csv").read_text()
    assert catalog.dump_json() == (GOLDEN / "exceptional.json").read_text()


def test_csv_first_row():
    lines = catalog.dump_csv().splitlines()
    assert lines[0] == "label,order,mult_group,nf_aut,group_aut,factor"
    assert lines[1] == "I,25,SL(2,3),4,24,6"
    assert len(lines) == 8
