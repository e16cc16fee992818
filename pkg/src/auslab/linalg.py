"""Sparse exact row echelon bases.

Rows are dicts from coordinate index to coefficient.  Two kernels share one
interface: an integer kernel (fraction-free elimination on primitive
integer rows, for computations whose inputs are integral) and a field
kernel (leading coefficients normalized to one, for rational or cyclotomic
coefficients).  Pivots are leftmost nonzero coordinates, so any row whose
pivot falls in a suffix of the coordinate order has its whole support in
that suffix; intersections with a coordinate suffix are read straight off
the pivot positions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class IntEchelon:
    """Echelon basis of primitive integer rows, built by insertion."""

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def residue(self, row: dict[int, int]) -> dict[int, int]:
        """Reduce against the basis: empty means the row lies in the span."""
        v = {k: c for k, c in row.items() if c}
        while v:
            lead = min(v)
            r = self.pivots.get(lead)
            if r is None:
                return v
            a, b = v[lead], r[lead]
            g = gcd(a, b)
            mv, mr = b // g, a // g
            nxt: dict[int, int] = {}
            for k, c in v.items():
                c = mv * c - mr * r.get(k, 0)
                if c:
                    nxt[k] = c
            for k, c in r.items():
                if k not in v:
                    c = -mr * c
                    if c:
                        nxt[k] = c
            v = nxt
        return v

    def insert(self, row: dict[int, int]) -> bool:
        """Insert if independent; returns whether the rank grew."""
        v = self.residue(row)
        if not v:
            return False
        content = 0
        for c in v.values():
            content = gcd(content, c)
        lead = min(v)
        if v[lead] < 0:
            content = -content
        self.pivots[lead] = {k: c // content for k, c in v.items()}
        return True

    def contains(self, row: dict[int, int]) -> bool:
        return not self.residue(row)

    def lead_count_at_least(self, threshold: int) -> int:
        return sum(1 for lead in self.pivots if lead >= threshold)


class FieldEchelon:
    """Echelon basis over a field; rows normalized to leading coefficient 1."""

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots: dict[int, dict[int, object]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def residue(self, row: dict[int, object]) -> dict[int, object]:
        v = {k: c for k, c in row.items() if c}
        while v:
            lead = min(v)
            r = self.pivots.get(lead)
            if r is None:
                return v
            factor = v[lead]
            nxt: dict[int, object] = {}
            for k, c in v.items():
                c = c - factor * r.get(k, 0)
                if c:
                    nxt[k] = c
            for k, c in r.items():
                if k not in v:
                    c = -factor * c
                    if c:
                        nxt[k] = c
            v = nxt
        return v

    def insert(self, row: dict[int, object]) -> bool:
        v = self.residue(row)
        if not v:
            return False
        lead = min(v)
        inv = 1 / v[lead] if isinstance(v[lead], Fraction) else v[lead].inverse()
        self.pivots[lead] = {k: inv * c for k, c in v.items()}
        return True

    def contains(self, row: dict[int, object]) -> bool:
        return not self.residue(row)

    def lead_count_at_least(self, threshold: int) -> int:
        return sum(1 for lead in self.pivots if lead >= threshold)


def make_echelon(integral: bool):
    return IntEchelon() if integral else FieldEchelon()


def rank_of(rows, integral: bool = False) -> int:
    basis = make_echelon(integral)
    for row in rows:
        basis.insert(row)
    return basis.rank
