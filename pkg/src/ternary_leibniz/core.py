"""Ternary algebras given by structure constants.

A bracket table stores ``chi[(i, j, k, p)]``, the coefficient of ``e_p`` in
``[e_i, e_j, e_k]``. Indices are 1-based throughout; absent entries are zero.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

Scalar = Fraction
Index4 = tuple[int, int, int, int]
CoordVector = tuple[Fraction, ...]


class DimMismatch(ValueError):
    pass


class BracketTable:
    """Sparse structure-constant tensor of an ``n``-dimensional ternary algebra."""

    __slots__ = ("dim", "_coeffs", "_products")

    def __init__(self, dim: int, coeffs: Mapping[Index4, object] | Iterable[tuple[Index4, object]] = ()):
        if not isinstance(dim, int) or dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {dim!r}")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        store: dict[Index4, Fraction] = {}
        for idx, value in items:
            idx = tuple(idx)
            if len(idx) != 4 or not all(isinstance(t, int) and 1 <= t <= dim for t in idx):
                raise IndexError(f"index {idx} outside 1..{dim}")
            value = Fraction(value)
            if value:
                store[idx] = value
        self.dim = dim
        self._coeffs = dict(sorted(store.items()))
        products: dict[tuple[int, int, int], dict[int, Fraction]] = defaultdict(dict)
        for (i, j, k, p), c in self._coeffs.items():
            products[(i, j, k)][p] = c
        self._products = dict(products)

    def __getitem__(self, idx: Index4) -> Fraction:
        return self._coeffs.get(idx, Fraction(0))

    def __len__(self) -> int:
        return len(self._coeffs)

    def items(self):
        """Nonzero entries in lexicographic index order."""
        return self._coeffs.items()

    def product(self, i: int, j: int, k: int) -> Mapping[int, Fraction]:
        """Sparse coordinates of ``[e_i, e_j, e_k]``."""
        return self._products.get((i, j, k), {})

    def nonzero_triples(self):
        return self._products.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, BracketTable):
            return NotImplemented
        return self.dim == other.dim and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.dim, tuple(self._coeffs.items())))

    def __repr__(self) -> str:
        return f"BracketTable(dim={self.dim}, nonzero={len(self._coeffs)})"


@dataclass(frozen=True)
class TernaryAlgebra:
    name: str
    table: BracketTable
    params: tuple[tuple[str, Fraction], ...] = field(default=())

    @property
    def dim(self) -> int:
        return self.table.dim

    @property
    def param_dict(self) -> dict[str, Fraction]:
        return dict(self.params)


def abelian(dim: int, name: str | None = None) -> TernaryAlgebra:
    return TernaryAlgebra(name or f"abelian{dim}", BracketTable(dim))


def basis_vector(dim: int, i: int) -> CoordVector:
    return tuple(Fraction(int(t == i)) for t in range(1, dim + 1))


def bracket(A: TernaryAlgebra, x: Sequence, y: Sequence, z: Sequence) -> CoordVector:
    """Trilinear extension of the structure constants to arbitrary vectors."""
    n = A.dim
    if not (len(x) == len(y) == len(z) == n):
        raise DimMismatch(f"expected vectors of length {n}, got {len(x)}, {len(y)}, {len(z)}")
    out = [Fraction(0)] * n
    for (i, j, k), prod in A.table.nonzero_triples():
        w = x[i - 1] * y[j - 1] * z[k - 1]
        if not w:
            continue
        for p, c in prod.items():
            out[p - 1] += w * c
    return tuple(Fraction(v) for v in out)


class Defect(NamedTuple):
    i: int
    j: int
    k: int
    p: int
    q: int
    s: int
    residual: Fraction


def leibniz_defects(A: TernaryAlgebra) -> list[Defect]:
    """All ``(i, j, k, p, q, s)`` at which the coordinate Leibniz identity fails.

    The residual is
    ``sum_r chi_ijk^r chi_rpq^s - chi_kpq^r chi_ijr^s - chi_jpq^r chi_irk^s - chi_ipq^r chi_rjk^s``.
    Only products of two stored coefficients can contribute, so the sum is
    accumulated by joining nonzero entries on the contracted index ``r``.
    """
    t = A.table
    by_first: dict[int, list[tuple[int, int, int, Fraction]]] = defaultdict(list)
    by_second: dict[int, list[tuple[int, int, int, Fraction]]] = defaultdict(list)
    by_third: dict[int, list[tuple[int, int, int, Fraction]]] = defaultdict(list)
    for (a, b, c, d), v in t.items():
        by_first[a].append((b, c, d, v))
        by_second[b].append((a, c, d, v))
        by_third[c].append((a, b, d, v))

    acc: dict[tuple[int, int, int, int, int, int], Fraction] = defaultdict(Fraction)
    for (a, b, c, r), c1 in t.items():
        # outer product [[e_a,e_b,e_c],e_p,e_q]
        for p, q, s, c2 in by_first[r]:
            acc[(a, b, c, p, q, s)] += c1 * c2
        # (a,b,c) = (z,t,u): [x,y,[z,t,u]]
        for i, j, s, c2 in by_third[r]:
            acc[(i, j, a, b, c, s)] -= c1 * c2
        # (a,b,c) = (y,t,u): [x,[y,t,u],z]
        for i, k, s, c2 in by_second[r]:
            acc[(i, a, k, b, c, s)] -= c1 * c2
        # (a,b,c) = (x,t,u): [[x,t,u],y,z]
        for j, k, s, c2 in by_first[r]:
            acc[(a, j, k, b, c, s)] -= c1 * c2
    return [Defect(*idx, v) for idx, v in sorted(acc.items()) if v]


def is_leibniz(A: TernaryAlgebra) -> bool:
    return not leibniz_defects(A)


def is_commutative(A: TernaryAlgebra) -> bool:
    """True iff the bracket is invariant under every permutation of its slots."""
    t = A.table
    for (i, j, k, p), c in t.items():
        for a, b, d in itertools.permutations((i, j, k)):
            if t[(a, b, d, p)] != c:
                return False
    return True


def is_abelian(A: TernaryAlgebra) -> bool:
    return len(A.table) == 0
