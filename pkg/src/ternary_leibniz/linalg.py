"""Exact rational elimination.

Rows are cleared of denominators and reduced fraction-free (Bareiss) over the
integers; leading entries are normalized to 1 only at the end, which yields
the reduced row echelon form with pivots in increasing column order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

SparseRow = Mapping[int, Fraction]


@dataclass(frozen=True)
class ConstraintSystem:
    """Homogeneous system ``C v = 0``; each row maps column index to coefficient."""

    unknown_count: int
    rows: tuple[SparseRow, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def dense_rows(self) -> list[list]:
        out = []
        for row in self.rows:
            dense: list = [0] * self.unknown_count
            for c, v in row.items():
                dense[c] = v
            out.append(dense)
        return out

    def evaluate(self, vector: Sequence) -> list[Fraction]:
        """Residual of every row at ``vector``."""
        return [sum((v * vector[c] for c, v in row.items()), Fraction(0)) for row in self.rows]


def sparse_row(dense: Iterable) -> dict[int, Fraction]:
    return {c: Fraction(v) for c, v in enumerate(dense) if v}


def _primitive_int_row(row: Sequence) -> tuple[int, ...]:
    """Integer multiple of ``row`` with coprime entries and positive leading entry."""
    den = math.lcm(*(v.denominator for v in row if v)) if any(row) else 1
    ints = [v.numerator * (den // v.denominator) if v else 0 for v in row]
    g = math.gcd(*ints)
    if g == 0:
        return tuple(ints)
    lead = next(v for v in ints if v)
    if lead < 0:
        g = -g
    return tuple(v // g for v in ints)


def bareiss_echelon(rows: Sequence[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of an integer matrix.

    Returns the nonzero echelon rows and their pivot columns. Pivots are the
    first nonzero entry at or below the current row in each column.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        sel = next((i for i in range(r, nrows) if m[i][c]), None)
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        pv = m[r][c]
        prow = m[r]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            for j in range(c + 1, ncols):
                # exact division is the Bareiss invariant
                row[j] = (pv * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = pv
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rref(rows: Iterable[Sequence], ncols: int) -> tuple[list[tuple[Fraction, ...]], list[int]]:
    """Reduced row echelon form of the row space, zero rows removed."""
    ints = set()
    for row in rows:
        if len(row) != ncols:
            raise ValueError(f"row of length {len(row)} in a system with {ncols} columns")
        prim = _primitive_int_row(row)
        if any(prim):
            ints.add(prim)
    echelon, pivots = bareiss_echelon(sorted(ints, reverse=True), ncols)
    reduced = [[Fraction(v, row[p]) for v in row] for row, p in zip(echelon, pivots)]
    for a in range(len(reduced) - 1, -1, -1):
        pa = pivots[a]
        for b in range(a):
            f = reduced[b][pa]
            if f:
                rb, ra = reduced[b], reduced[a]
                for j in range(pa, ncols):
                    rb[j] -= f * ra[j]
    return [tuple(r) for r in reduced], pivots


def nullspace(system: ConstraintSystem) -> list[tuple[Fraction, ...]]:
    """Canonical RREF basis of ``{v : C v = 0}``."""
    n = system.unknown_count
    reduced, pivots = rref(system.dense_rows(), n)
    pivot_set = set(pivots)
    kernel = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        kernel.append(v)
    basis, _ = rref(kernel, n)
    return basis


def reduce_against(basis: Sequence[Sequence[Fraction]], vector: Sequence) -> list[Fraction]:
    """Remainder of ``vector`` after eliminating the pivots of an RREF basis."""
    v = [Fraction(x) for x in vector]
    for b in basis:
        p = next(i for i, x in enumerate(b) if x)
        f = v[p]
        if f:
            for j in range(p, len(v)):
                v[j] -= f * b[j]
    return v
