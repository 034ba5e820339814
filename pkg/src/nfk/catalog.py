"""Nearfield catalogue across the three finite classes: field counts, the
seven exceptional nearfields and the factor F(N) = |Aut(N,.)| / |Aut(N,+,.)|."""
from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import automorphism as au
from . import dickson as dk
from . import group_table as gt
from . import numtheory as nt
from .descriptor import NearfieldDescriptor
from .dickson import TableBoundError
from .nearfield import nearfield_aut_order


@dataclass(frozen=True)
class ExceptionalRecord:
    label: str
    order: int
    mult_group_name: str
    group_aut_name: str
    mult_group_order: int
    nf_aut_order: int
    group_aut_order: int
    factor: int

    @property
    def order_text(self) -> str:
        p = int(round(self.order**0.5))
        return f"{p}^2"


_EXCEPTIONAL = (
    ExceptionalRecord("I", 5**2, "SL(2,3)", "S4", 24, 4, 24, 6),
    ExceptionalRecord("II", 11**2, "SL(2,3)xZ5", "S4xZ4", 120, 2, 96, 48),
    ExceptionalRecord("III", 7**2, "2O", "S4xZ2", 48, 3, 48, 16),
    ExceptionalRecord("IV", 23**2, "2OxZ11", "S4xZ2xZ10", 528, 1, 480, 480),
    ExceptionalRecord("V", 11**2, "SL(2,5)", "S5", 120, 5, 120, 24),
    ExceptionalRecord("VI", 29**2, "SL(2,5)xZ7", "S5xZ6", 840, 2, 720, 360),
    ExceptionalRecord("VII", 59**2, "SL(2,5)xZ29", "S5xZ28", 3480, 1, 3360, 3360),
)


def exceptional_table() -> list[ExceptionalRecord]:
    for r in _EXCEPTIONAL:
        assert r.factor * r.nf_aut_order == r.group_aut_order
        assert r.mult_group_order == r.order - 1
    return list(_EXCEPTIONAL)


def exceptional_record(label: str) -> ExceptionalRecord:
    for r in _EXCEPTIONAL:
        if r.label == label:
            return r
    raise KeyError(label)


# -- explicit multiplicative groups ------------------------------------------

def special_linear_group(p: int) -> gt.FiniteGroupTable:
    """SL(2, p) as 2x2 matrices (a, b, c, d) over Z_p with ad - bc = 1."""
    mats = [m for m in itertools.product(range(p), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % p == 1]

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)

    return gt.from_elements(mats, mul, name=f"SL(2,{p})")


# A coordinate (x, y) stands for (x + y*sqrt2)/2.
def _coord_mul(u, v):
    return (u[0] * v[0] + 2 * u[1] * v[1], u[0] * v[1] + u[1] * v[0])  # scaled by 4


def _quat_mul(x, y):
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y

    def comb(*terms):
        sx = sy = 0
        for sign, u, v in terms:
            px, py = _coord_mul(u, v)
            sx += sign * px
            sy += sign * py
        # back from /4 to /2
        assert sx % 2 == 0 and sy % 2 == 0, "product left the coordinate ring"
        return (sx // 2, sy // 2)

    return (
        comb((1, a1, a2), (-1, b1, b2), (-1, c1, c2), (-1, d1, d2)),
        comb((1, a1, b2), (1, b1, a2), (1, c1, d2), (-1, d1, c2)),
        comb((1, a1, c2), (-1, b1, d2), (1, c1, a2), (1, d1, b2)),
        comb((1, a1, d2), (1, b1, c2), (-1, c1, b2), (1, d1, a2)),
    )


def binary_octahedral_group() -> gt.FiniteGroupTable:
    """2O: the 48 unit quaternions of the binary octahedral group, closed up
    from (1 + i)/sqrt2 and (1 + i + j + k)/2 with exact coordinates."""
    one, zero, half, root = (2, 0), (0, 0), (1, 0), (0, 1)
    gens = [(root, root, zero, zero), (half, half, half, half)]
    elements = [(one, zero, zero, zero)]
    seen = set(elements)
    frontier = list(elements)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _quat_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        elements.extend(nxt)
        frontier = nxt
    elements.sort()
    if len(elements) != 48:
        raise RuntimeError(f"2O closure has {len(elements)} elements")
    return gt.from_elements(elements, _quat_mul, name="2O")


_BASE_GROUPS = {"SL(2,3)": lambda: special_linear_group(3),
                "SL(2,5)": lambda: special_linear_group(5),
                "2O": binary_octahedral_group}


def exceptional_group(label: str, max_order: int = 200) -> gt.FiniteGroupTable:
    rec = exceptional_record(label)
    if rec.mult_group_order > max_order:
        raise TableBoundError(f"group order {rec.mult_group_order} exceeds bound {max_order}")
    base, _, cyc = rec.mult_group_name.partition("xZ")
    G = _BASE_GROUPS[base]()
    if cyc:
        G = gt.direct_product(G, gt.cyclic_group(int(cyc)), name=rec.mult_group_name)
    if not all(gt.check_group_axioms(G).values()):
        raise RuntimeError(f"{rec.mult_group_name} table fails the group axioms")
    return G


# -- counts ------------------------------------------------------------------

def field_counts(p: int, l: int) -> tuple[int, int, Fraction]:
    mult = nt.totient(p**l - 1)
    return mult, l, Fraction(mult, l)


@dataclass(frozen=True)
class FactorResult:
    mult_aut: int
    nf_aut: int
    factor: int
    provenance: str  # formula | enumeration | brute-force | table


def dickson_mult_aut(P: dk.DicksonParams, enumerate_bound: int = 3000) -> tuple[int, str]:
    """|Aut(G(q,n))| by the best available route."""
    if (P.q, P.n) == (3, 2):
        G = dk.build_group_table(P)
        return au.count_automorphisms(G), "brute-force"
    if P.order <= enumerate_bound:
        return au.count_S(P), "enumeration"
    return au.aut_count_corrho(P), "formula"


def factor_details(N: NearfieldDescriptor, enumerate_bound: int = 3000) -> FactorResult:
    if N.kind == "field":
        mult, nf, factor = field_counts(N.p, N.l)
        provenance = "formula"
    elif N.kind == "dickson":
        mult, provenance = dickson_mult_aut(N.params, enumerate_bound)
        nf = nearfield_aut_order(N)
        factor = Fraction(mult, nf)
    else:
        rec = exceptional_record(N.label)
        mult, nf, factor = rec.group_aut_order, rec.nf_aut_order, Fraction(rec.factor)
        provenance = "table"
    if factor.denominator != 1:
        raise ArithmeticError(f"non-integer index {mult}/{nf} for {N}")
    return FactorResult(mult, nf, int(factor), provenance)


def factor_index(N: NearfieldDescriptor) -> int:
    return factor_details(N).factor


# -- dumps -------------------------------------------------------------------

COUNTS_HEADER = ("label", "order", "mult_group", "nf_aut", "group_aut", "factor")
GROUPS_HEADER = ("label", "order", "mult_group", "group_aut")


def dump_csv(table: str = "counts") -> str:
    """Comma-joined rows; group names such as SL(2,3) keep their inner comma,
    so split on commas outside parentheses when reading these back."""
    if table == "counts":
        rows = [COUNTS_HEADER] + [(r.label, r.order, r.mult_group_name, r.nf_aut_order,
                                   r.group_aut_order, r.factor) for r in exceptional_table()]
    elif table == "groups":
        rows = [GROUPS_HEADER] + [(r.label, r.order_text, r.mult_group_name, r.group_aut_name)
                                  for r in exceptional_table()]
    else:
        raise ValueError(f"unknown table {table!r}")
    return "".join(",".join(map(str, row)) + "\n" for row in rows)


def dump_json() -> str:
    rows = [asdict(r) for r in exceptional_table()]
    return json.dumps(rows, indent=2, sort_keys=True) + "\n"
