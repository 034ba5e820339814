"""Tagged descriptor for a finite nearfield: a field, a Dickson nearfield or
one of the seven exceptional ones."""
from __future__ import annotations

from dataclasses import dataclass

from . import dickson as dk
from . import numtheory as nt

EXCEPTIONAL_LABELS = ("I", "II", "III", "IV", "V", "VI", "VII")


class DescriptorError(ValueError):
    pass


@dataclass(frozen=True)
class NearfieldDescriptor:
    kind: str  # "field" | "dickson" | "exceptional"
    p: int = 0
    l: int = 0
    params: dk.DicksonParams | None = None
    label: str = ""

    @property
    def order(self) -> int | None:
        if self.kind == "field":
            return self.p**self.l
        if self.kind == "dickson":
            return self.params.q**self.params.n
        return None

    def __str__(self):
        if self.kind == "field":
            return f"field:{self.p**self.l}"
        if self.kind == "dickson":
            return f"dickson:{self.params.q},{self.params.n}"
        return f"exceptional:{self.label}"


def field(q: int) -> NearfieldDescriptor:
    try:
        p, l = nt.is_prime_power(q)
    except nt.NumberTheoryError:
        raise DescriptorError(f"q={q} is not a prime power") from None
    return NearfieldDescriptor("field", p=p, l=l)


def dickson(q: int, n: int) -> NearfieldDescriptor:
    P = dk.validate_dickson_pair(q, n)
    if n == 1:
        return field(q)
    return NearfieldDescriptor("dickson", p=P.p, l=P.l, params=P)


def exceptional(label: str) -> NearfieldDescriptor:
    label = label.upper()
    if label not in EXCEPTIONAL_LABELS:
        raise DescriptorError(f"unknown exceptional nearfield {label!r}")
    return NearfieldDescriptor("exceptional", label=label)


def parse(spec: str) -> NearfieldDescriptor:
    """Parse 'field:q', 'dickson:q,n' or 'exceptional:I'..'VII'."""
    kind, _, rest = spec.partition(":")
    kind = kind.strip().lower()
    try:
        if kind == "field":
            return field(int(rest))
        if kind == "dickson":
            q, n = (int(v) for v in rest.split(","))
            return dickson(q, n)
    except ValueError as exc:
        if isinstance(exc, (DescriptorError, dk.DicksonPairError)):
            raise
        raise DescriptorError(f"cannot parse {spec!r}") from None
    if kind == "exceptional":
        return exceptional(rest.strip())
    raise DescriptorError(f"cannot parse {spec!r}")
