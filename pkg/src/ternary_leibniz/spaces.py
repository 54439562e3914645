"""Centroid, quasi-centroid, derivations and central derivations.

A linear map ``Phi`` is stored as its matrix ``a`` with ``Phi(e_i) = sum_j a[j][i] e_j``,
so column ``i`` holds the image of ``e_i``. The ``n*n`` unknowns ``a_pq`` of a
constraint system are ordered row-major: ``a_pq`` sits at column ``(p-1)*n + (q-1)``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .core import TernaryAlgebra, is_leibniz
from .linalg import ConstraintSystem, nullspace as _kernel, reduce_against, rref, sparse_row


class AmbientMismatch(ValueError):
    pass


class NotLeibniz(ValueError):
    pass


class InternalInconsistency(RuntimeError):
    """Two independent routes to the same subspace disagreed."""


@dataclass(frozen=True)
class LinearMap:
    dim: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        if len(rows) != self.dim or any(len(r) != self.dim for r in rows):
            raise ValueError(f"expected a {self.dim}x{self.dim} matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> LinearMap:
        return cls(len(rows), tuple(tuple(r) for r in rows))

    @classmethod
    def from_flat(cls, dim: int, flat: Sequence) -> LinearMap:
        return cls(dim, tuple(tuple(flat[p * dim:(p + 1) * dim]) for p in range(dim)))

    @classmethod
    def zero(cls, dim: int) -> LinearMap:
        return cls.from_flat(dim, [0] * dim * dim)

    @classmethod
    def identity(cls, dim: int, scale=1) -> LinearMap:
        return cls(dim, tuple(tuple(scale if p == q else 0 for q in range(dim)) for p in range(dim)))

    @classmethod
    def elementary(cls, dim: int, p: int, q: int) -> LinearMap:
        """``E_pq`` (1-based): maps ``e_q`` to ``e_p``."""
        flat = [0] * dim * dim
        flat[(p - 1) * dim + (q - 1)] = 1
        return cls.from_flat(dim, flat)

    def flat(self) -> tuple[Fraction, ...]:
        return tuple(v for row in self.entries for v in row)

    def __getitem__(self, pq: tuple[int, int]) -> Fraction:
        p, q = pq
        return self.entries[p - 1][q - 1]

    def apply(self, x: Sequence) -> tuple[Fraction, ...]:
        return tuple(sum((a * v for a, v in zip(row, x)), Fraction(0)) for row in self.entries)

    def image(self, i: int) -> tuple[Fraction, ...]:
        """Coordinates of ``Phi(e_i)``."""
        return tuple(row[i - 1] for row in self.entries)

    def __add__(self, other: LinearMap) -> LinearMap:
        _check_same(self.dim, other.dim)
        return LinearMap.from_flat(self.dim, [a + b for a, b in zip(self.flat(), other.flat())])

    def __sub__(self, other: LinearMap) -> LinearMap:
        _check_same(self.dim, other.dim)
        return LinearMap.from_flat(self.dim, [a - b for a, b in zip(self.flat(), other.flat())])

    def scale(self, c) -> LinearMap:
        c = Fraction(c)
        return LinearMap.from_flat(self.dim, [c * a for a in self.flat()])

    def is_zero(self) -> bool:
        return not any(self.flat())


def _check_same(a: int, b: int) -> None:
    if a != b:
        raise AmbientMismatch(f"dimension {a} vs {b}")


def compose(m1: LinearMap, m2: LinearMap) -> LinearMap:
    """Matrix of ``m1 o m2``."""
    _check_same(m1.dim, m2.dim)
    n = m1.dim
    cols = list(zip(*m2.entries))
    return LinearMap(n, tuple(
        tuple(sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in cols)
        for row in m1.entries
    ))


def commutator(m1: LinearMap, m2: LinearMap) -> LinearMap:
    return compose(m1, m2) - compose(m2, m1)


@dataclass(frozen=True)
class MatrixSubspace:
    """Subspace of ``n x n`` matrices held by its canonical RREF basis.

    The basis is recomputed on construction, so two spans of the same space
    always carry identical basis tuples.
    """

    n: int
    basis: tuple[LinearMap, ...] = field(default=())

    def __post_init__(self):
        for m in self.basis:
            _check_same(self.n, m.dim)
        reduced, _ = rref([m.flat() for m in self.basis], self.n * self.n)
        object.__setattr__(self, "basis", tuple(LinearMap.from_flat(self.n, r) for r in reduced))

    @property
    def dim_ambient(self) -> int:
        return self.n * self.n

    def dimension(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    @classmethod
    def full(cls, n: int) -> MatrixSubspace:
        return cls(n, tuple(LinearMap.elementary(n, p, q) for p in range(1, n + 1) for q in range(1, n + 1)))

    @classmethod
    def zero(cls, n: int) -> MatrixSubspace:
        return cls(n, ())

    def pivots(self) -> list[tuple[int, int]]:
        """1-based matrix positions of the leading entries, in basis order."""
        out = []
        for m in self.basis:
            c = next(i for i, v in enumerate(m.flat()) if v)
            out.append((c // self.n + 1, c % self.n + 1))
        return out


# constraint rows --------------------------------------------------------------

def _slot_rows(A: TernaryAlgebra, i: int, j: int, k: int, q: int):
    """Coefficient rows of the four scalar quantities attached to ``(i,j,k,q)``.

    ``img``: q-th coordinate of ``Phi([e_i,e_j,e_k])``; ``s1``, ``s2``, ``s3``:
    q-th coordinate of the bracket with ``Phi`` inserted in slot 1, 2 or 3.
    """
    n = A.dim
    t = A.table
    img: dict[int, Fraction] = {}
    s1: dict[int, Fraction] = {}
    s2: dict[int, Fraction] = {}
    s3: dict[int, Fraction] = {}
    for r, c in t.product(i, j, k).items():
        img[(q - 1) * n + (r - 1)] = c
    for p in range(1, n + 1):
        c = t[(p, j, k, q)]
        if c:
            s1[(p - 1) * n + (i - 1)] = s1.get((p - 1) * n + (i - 1), 0) + c
        c = t[(i, p, k, q)]
        if c:
            s2[(p - 1) * n + (j - 1)] = s2.get((p - 1) * n + (j - 1), 0) + c
        c = t[(i, j, p, q)]
        if c:
            s3[(p - 1) * n + (k - 1)] = s3.get((p - 1) * n + (k - 1), 0) + c
    return img, s1, s2, s3


def _combine(*terms: tuple[int, dict[int, Fraction]]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for sign, row in terms:
        for c, v in row.items():
            out[c] = out.get(c, 0) + sign * v
    return {c: Fraction(v) for c, v in sorted(out.items()) if v}


def _build(A: TernaryAlgebra, emit: Callable) -> ConstraintSystem:
    n = A.dim
    rows = []
    for i, j, k, q in itertools.product(range(1, n + 1), repeat=4):
        for row in emit(*_slot_rows(A, i, j, k, q)):
            if row:
                rows.append(row)
    return ConstraintSystem(n * n, tuple(rows))


def centroid_constraints(A: TernaryAlgebra) -> ConstraintSystem:
    return _build(A, lambda img, s1, s2, s3: (
        _combine((1, img), (-1, s1)),
        _combine((1, s1), (-1, s2)),
        _combine((1, s2), (-1, s3)),
    ))


def qcentroid_constraints(A: TernaryAlgebra) -> ConstraintSystem:
    return _build(A, lambda img, s1, s2, s3: (
        _combine((1, s1), (-1, s2)),
        _combine((1, s2), (-1, s3)),
    ))


def derivation_constraints(A: TernaryAlgebra) -> ConstraintSystem:
    return _build(A, lambda img, s1, s2, s3: (
        _combine((1, img), (-1, s1), (-1, s2), (-1, s3)),
    ))


def central_derivation_constraints(A: TernaryAlgebra) -> ConstraintSystem:
    """Rows for ``psi([x,y,z]) = [psi x,y,z] = [x,psi y,z] = [x,y,psi z] = 0``."""
    return _build(A, lambda img, s1, s2, s3: (
        _combine((1, img)), _combine((1, s1)), _combine((1, s2)), _combine((1, s3)),
    ))


# solving ----------------------------------------------------------------------

def nullspace(system: ConstraintSystem) -> MatrixSubspace:
    n = round(system.unknown_count ** 0.5)
    if n * n != system.unknown_count:
        raise ValueError(f"{system.unknown_count} unknowns do not form a square matrix")
    return MatrixSubspace(n, tuple(LinearMap.from_flat(n, v) for v in _kernel(system)))


@functools.lru_cache(maxsize=256)
def centroid(A: TernaryAlgebra) -> MatrixSubspace:
    return nullspace(centroid_constraints(A))


@functools.lru_cache(maxsize=256)
def quasi_centroid(A: TernaryAlgebra) -> MatrixSubspace:
    return nullspace(qcentroid_constraints(A))


@functools.lru_cache(maxsize=256)
def derivations(A: TernaryAlgebra) -> MatrixSubspace:
    return nullspace(derivation_constraints(A))


@functools.lru_cache(maxsize=256)
def central_derivations(A: TernaryAlgebra) -> MatrixSubspace:
    direct = nullspace(central_derivation_constraints(A))
    via_intersection = intersect(centroid(A), derivations(A))
    if not subspace_equal(direct, via_intersection):
        raise InternalInconsistency(
            f"{A.name}: central derivations have dim {direct.dimension()} directly "
            f"but Cent ∩ Der has dim {via_intersection.dimension()}"
        )
    return direct


# subspace algebra -------------------------------------------------------------

def annihilator(S: MatrixSubspace) -> ConstraintSystem:
    """Linear equations whose solution set is exactly ``S``."""
    N = S.dim_ambient
    rows = [sparse_row(r) for r in _kernel(ConstraintSystem(N, tuple(sparse_row(m.flat()) for m in S.basis)))]
    return ConstraintSystem(N, tuple(rows))


def intersect(S1: MatrixSubspace, S2: MatrixSubspace) -> MatrixSubspace:
    _check_same(S1.n, S2.n)
    a1, a2 = annihilator(S1), annihilator(S2)
    return nullspace(ConstraintSystem(S1.dim_ambient, a1.rows + a2.rows))


def residual(S: MatrixSubspace, M: LinearMap) -> LinearMap:
    """Part of ``M`` left over after subtracting its projection along the pivots of ``S``."""
    _check_same(S.n, M.dim)
    return LinearMap.from_flat(S.n, reduce_against([b.flat() for b in S.basis], M.flat()))


def contains(S: MatrixSubspace, M: LinearMap) -> bool:
    return residual(S, M).is_zero()


def subspace_equal(S1: MatrixSubspace, S2: MatrixSubspace) -> bool:
    _check_same(S1.n, S2.n)
    return S1.basis == S2.basis


def span(n: int, maps: Iterable[LinearMap]) -> MatrixSubspace:
    return MatrixSubspace(n, tuple(maps))


# closure properties -----------------------------------------------------------

CLOSURE_FLAGS = (
    "centroid_closed_under_composition",
    "centroid_in_quasi_centroid",
    "centroid_times_derivation_is_derivation",
    "centroid_derivation_commutator_in_centroid",
    "dim_centroid_le_dim_quasi_centroid",
)


@dataclass
class Witness:
    flag: str
    left: int | None
    right: int | None
    residual: LinearMap | None
    detail: str = ""


@dataclass
class ClosureReport:
    flags: dict[str, bool]
    witnesses: list[Witness]

    @property
    def ok(self) -> bool:
        return all(self.flags.values())


def closure_report(A: TernaryAlgebra) -> ClosureReport:
    if not is_leibniz(A):
        raise NotLeibniz(f"{A.name} does not satisfy the ternary Leibniz identity")
    cent, qcent, der = centroid(A), quasi_centroid(A), derivations(A)
    witnesses: list[Witness] = []

    def check(flag: str, pairs, target: MatrixSubspace, op) -> bool:
        ok = True
        for (a, x), (b, y) in pairs:
            res = residual(target, op(x, y))
            if not res.is_zero():
                ok = False
                witnesses.append(Witness(flag, a, b, res))
        return ok

    cb = list(enumerate(cent.basis))
    db = list(enumerate(der.basis))
    flags = {
        CLOSURE_FLAGS[0]: check(CLOSURE_FLAGS[0], itertools.product(cb, cb), cent, compose),
        CLOSURE_FLAGS[1]: check(CLOSURE_FLAGS[1], ((c, (None, None)) for c in cb), qcent, lambda x, _: x),
        CLOSURE_FLAGS[2]: check(CLOSURE_FLAGS[2], itertools.product(cb, db), der, compose),
        CLOSURE_FLAGS[3]: check(CLOSURE_FLAGS[3], itertools.product(cb, db), cent, commutator),
        CLOSURE_FLAGS[4]: cent.dimension() <= qcent.dimension(),
    }
    if not flags[CLOSURE_FLAGS[4]]:
        witnesses.append(Witness(CLOSURE_FLAGS[4], None, None, None,
                                 f"dim Cent = {cent.dimension()} > dim QCent = {qcent.dimension()}"))
    return ClosureReport(flags, witnesses)
