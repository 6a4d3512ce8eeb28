"""Exact rank of sparse matrices over Q or GF(p).

A matrix is a list of rows, each a dict ``{column: value}``. Over Q the rows
are cleared to integers and eliminated fraction-free (content divided out
after every step), which keeps the +-1 boundary matrices small.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .algebra import Field, PrimeField


def _integer_row(row: dict) -> dict:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    return {c: int(v * den) for c, v in row.items() if v}


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()} if g > 1 else row


class Echelon:
    """Incrementally maintained row echelon form; ``add`` returns True if rank grew."""

    def __init__(self, field: Field):
        self.field = field
        self.modular = isinstance(field, PrimeField)
        self.pivots: dict = {}  # pivot column -> row whose smallest column it is

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        if self.modular:
            p = self.field.characteristic
            row = {c: v % p for c, v in row.items() if v % p}
        else:
            row = _integer_row(row)
        pivots = self.pivots
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                return row
            a = row[c]
            if self.modular:
                p = self.field.characteristic
                new = dict(row)
                for k, v in piv.items():  # pivot rows are monic
                    s = (new.get(k, 0) - a * v) % p
                    if s:
                        new[k] = s
                    else:
                        new.pop(k, None)
            else:
                b = piv[c]
                g = gcd(a, b)
                fa, fb = b // g, a // g
                new = {k: fa * v for k, v in row.items()}
                for k, v in piv.items():
                    s = new.get(k, 0) - fb * v
                    if s:
                        new[k] = s
                    else:
                        new.pop(k, None)
                new = _primitive(new)
            row = new
        return row

    def add(self, row: dict) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        if self.modular:
            p = self.field.characteristic
            inv = pow(row[c], -1, p)
            row = {k: v * inv % p for k, v in row.items()}
        elif row[c] < 0:
            row = {k: -v for k, v in row.items()}
        self.pivots[c] = row
        return True

    def contains(self, row: dict) -> bool:
        """Whether ``row`` lies in the span of the rows added so far."""
        return not self.reduce(row)


def rank(rows, field: Field) -> int:
    """Rank of a sparse matrix given as an iterable of ``{col: value}`` rows."""
    rows = sorted((r for r in rows if r), key=len)  # sparse rows first
    ech = Echelon(field)
    for r in rows:
        ech.add(r)
    return ech.rank
