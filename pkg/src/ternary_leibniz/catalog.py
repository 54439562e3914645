"""Built-in four-dimensional ternary Leibniz algebras and the algebra text format.

Text format::

    # comment
    dim 4
    1 1 1 2 1        # i j k p coefficient:  [e_i, e_j, e_k] has coefficient on e_p
    4 2 2 3 1/2

Blank lines and ``#`` comments are ignored. Products not listed are zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .core import BracketTable, TernaryAlgebra

F = Fraction


class CatalogError(KeyError):
    pass


class UnknownKey(CatalogError):
    pass


class MissingParam(CatalogError):
    pass


class UnexpectedParam(CatalogError):
    pass


class FormatError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class AlgebraSyntaxError(FormatError):
    pass


class IndexOutOfRange(FormatError):
    pass


class DuplicateEntry(FormatError):
    pass


class BadRational(FormatError):
    pass


Products = list[tuple[tuple[int, int, int], dict[int, Fraction]]]


def _same(target: dict, *triples) -> Products:
    return [(t, dict(target)) for t in triples]


def _L1(**_) -> Products:
    return _same({2: 1, 4: 1}, (1, 1, 1), (1, 1, 3), (1, 3, 1), (3, 1, 1), (3, 1, 3), (3, 3, 3))


def _L2(**_) -> Products:
    return [
        ((1, 1, 2), {3: 1, 4: 1}),
        ((1, 2, 1), {3: 2, 4: 1}),
        ((2, 1, 1), {3: 1, 4: 1}),
        ((2, 1, 2), {3: 1, 4: 1}),
        ((2, 2, 2), {3: 1, 4: 1}),
    ]


def _L3(**_) -> Products:
    return _same({3: 1}, (1, 1, 4), (1, 2, 2), (1, 2, 4), (1, 4, 4), (2, 1, 1), (2, 2, 1),
                 (2, 2, 4), (2, 4, 4), (4, 1, 1), (4, 2, 2), (4, 4, 1), (4, 4, 4))


def _L4(**_) -> Products:
    return _same({1: 1, 3: 1}, (1, 2, 2), (1, 4, 4)) + _same(
        {3: 1}, (2, 2, 2), (2, 2, 4), (2, 4, 2), (2, 4, 4), (4, 2, 2), (4, 2, 4), (4, 4, 2), (4, 4, 4))


def _L5(**_) -> Products:
    return _same({4: 1}, (1, 2, 3), (1, 3, 1), (1, 3, 2), (1, 3, 3), (2, 1, 3),
                 (2, 3, 1), (3, 1, 3), (3, 2, 1), (3, 3, 1))


def _L6(**_) -> Products:
    return _same({1: 1, 3: 1}, (1, 2, 4), (1, 4, 2)) + [
        ((2, 2, 2), {3: 1}),
        ((2, 2, 4), {3: 1}),
        ((2, 4, 2), {3: 1}),
        ((4, 2, 2), {3: F(1, 2)}),
        ((4, 4, 2), {3: 1}),
        ((4, 4, 4), {3: 1}),
    ]


def _L7(alpha: Fraction) -> Products:
    return [((1, 3, 2), {1: 2 * alpha, 4: 1})] + _same(
        {4: 1}, (2, 2, 2), (2, 3, 2), (2, 3, 3), (3, 2, 2), (3, 2, 3), (3, 3, 2)) + [
        ((3, 3, 3), {4: F(1, 3)})]


def _L8(**_) -> Products:
    return _same({2: 1}, (1, 1, 1), (1, 3, 3), (3, 3, 1), (3, 3, 3), (4, 1, 1), (4, 4, 4))


def _L9(**_) -> Products:
    return _same({2: 1}, (1, 1, 1), (1, 4, 1), (1, 4, 4), (3, 3, 1), (4, 1, 1), (4, 3, 3), (4, 4, 4))


def _L10(**_) -> Products:
    return _same({2: 1}, (2, 1, 1), (2, 3, 2), (2, 3, 4), (2, 4, 3), (2, 4, 4))


def _L11(**_) -> Products:
    return _same({4: 1}, (2, 1, 1), (2, 1, 2), (2, 2, 1), (2, 2, 2), (3, 3, 3))


def _L12(**_) -> Products:
    return _same({3: 1}, (2, 1, 2), (2, 2, 1), (2, 2, 2), (2, 2, 4), (2, 4, 2),
                 (4, 1, 1), (4, 1, 4), (4, 2, 2), (4, 4, 4))


def _L13(**_) -> Products:
    return _same({2: 1}, (2, 1, 3), (2, 3, 1), (2, 3, 4), (2, 4, 3), (2, 4, 4))


def _L14(**_) -> Products:
    return _same({4: 1}, (2, 1, 3), (2, 2, 2), (2, 3, 1), (3, 1, 1), (3, 1, 2), (3, 2, 1), (3, 3, 3))


def _L15(**_) -> Products:
    return _same({2: 1}, (2, 3, 1), (2, 3, 3), (2, 4, 3), (2, 4, 4))


def _L16(**_) -> Products:
    return _same({4: 1}, (2, 2, 1), (2, 2, 2), (3, 2, 2), (3, 3, 3))


def _L17(**_) -> Products:
    return _same({4: 1}, (2, 2, 3), (3, 2, 1), (3, 2, 2), (3, 3, 3))


def _L18(alpha: Fraction) -> Products:
    return [
        ((2, 1, 4), {3: 1}),
        ((2, 2, 2), {3: 1}),
        ((2, 4, 1), {3: 1}),
        ((4, 1, 2), {3: -1}),
        ((4, 2, 1), {3: 1}),
        ((4, 2, 2), {3: alpha}),
        ((4, 4, 4), {3: 1}),
    ]


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    requires_params: tuple[str, ...]
    expected_cent_dim: int
    expected_qcent_dim: int
    build: Callable[..., Products]


# expected dims: the published dimension table, one value per family
_TABLE = [
    ("L1", _L1, 1, 9), ("L2", _L2, 3, 9), ("L3", _L3, 1, 9), ("L4", _L4, 1, 5),
    ("L5", _L5, 1, 5), ("L6", _L6, 1, 5), ("L7", _L7, 1, 1), ("L8", _L8, 1, 5),
    ("L9", _L9, 1, 5), ("L10", _L10, 1, 1), ("L11", _L11, 1, 6), ("L12", _L12, 1, 2),
    ("L13", _L13, 1, 1), ("L14", _L14, 1, 5), ("L15", _L15, 1, 1), ("L16", _L16, 5, 5),
    ("L17", _L17, 5, 5), ("L18", _L18, 1, 5),
]

CATALOG: dict[str, CatalogEntry] = {
    key: CatalogEntry(key, ("alpha",) if key in ("L7", "L18") else (), cent, qcent, fn)
    for key, fn, cent, qcent in _TABLE
}

DEFAULT_ALPHAS: tuple[Fraction, ...] = (F(0), F(1), F(-1), F(1, 2), F(2))


def keys() -> list[str]:
    return list(CATALOG)


def builtin(key: str, params: Mapping[str, object] | None = None) -> TernaryAlgebra:
    try:
        entry = CATALOG[key]
    except KeyError:
        raise UnknownKey(f"unknown catalog key {key!r}; expected one of L1..L18") from None
    params = dict(params or {})
    missing = [p for p in entry.requires_params if p not in params]
    if missing:
        raise MissingParam(f"{key} requires parameter(s) {', '.join(missing)}")
    extra = sorted(set(params) - set(entry.requires_params))
    if extra:
        raise UnexpectedParam(f"{key} takes no parameter(s) {', '.join(extra)}")
    bound = {name: Fraction(params[name]) for name in entry.requires_params}
    coeffs = {}
    for (i, j, k), out in entry.build(**bound):
        for p, c in out.items():
            coeffs[(i, j, k, p)] = c
    name = key if not bound else key + "[" + ",".join(f"{n}={v}" for n, v in bound.items()) + "]"
    return TernaryAlgebra(name, BracketTable(4, coeffs), tuple(bound.items()))


def instances(alphas=DEFAULT_ALPHAS):
    """Every catalog algebra, parameterized families once per ``alpha``."""
    for key, entry in CATALOG.items():
        if entry.requires_params:
            for a in alphas:
                yield entry, builtin(key, {"alpha": a})
        else:
            yield entry, builtin(key)


# text format ------------------------------------------------------------------

_RATIONAL = re.compile(r"-?\d+(?:/\d+)?")
_INT = re.compile(r"\d+")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(token: str, line: int = 0) -> Fraction:
    if not _RATIONAL.fullmatch(token):
        raise BadRational(line, f"not an integer or a/b rational: {token!r}")
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise BadRational(line, f"zero denominator in {token!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse(text: str, name: str = "") -> TernaryAlgebra:
    dim = None
    coeffs: dict[tuple[int, int, int, int], Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if dim is None:
            if len(fields) != 2 or fields[0] != "dim" or not _INT.fullmatch(fields[1]):
                raise AlgebraSyntaxError(lineno, f"expected 'dim <n>', got {raw.strip()!r}")
            dim = int(fields[1])
            if dim < 1:
                raise AlgebraSyntaxError(lineno, "dimension must be at least 1")
            continue
        if len(fields) != 5:
            raise AlgebraSyntaxError(lineno, f"expected 'i j k p coefficient', got {raw.strip()!r}")
        if not all(_INT.fullmatch(f) for f in fields[:4]):
            raise AlgebraSyntaxError(lineno, f"indices must be positive integers: {raw.strip()!r}")
        idx = tuple(int(f) for f in fields[:4])
        if not all(1 <= t <= dim for t in idx):
            raise IndexOutOfRange(lineno, f"index outside 1..{dim}: {idx}")
        value = parse_rational(fields[4], lineno)
        if value == 0:
            raise BadRational(lineno, "coefficients must be nonzero")
        if idx in coeffs:
            raise DuplicateEntry(lineno, f"entry {idx} given twice")
        coeffs[idx] = value
    if dim is None:
        raise AlgebraSyntaxError(max(1, len(text.splitlines())), "missing 'dim <n>' header")
    return TernaryAlgebra(name, BracketTable(dim, coeffs))


def serialize(A: TernaryAlgebra) -> str:
    lines = [f"dim {A.dim}"]
    for (i, j, k, p), c in A.table.items():
        lines.append(f"{i} {j} {k} {p} {format_rational(c)}")
    return "\n".join(lines) + "\n"


# published matrix patterns ----------------------------------------------------
# Rows separated by ';'. Transcribed as printed, including internal
# inconsistencies; "c11"/"c12" are read as misprints of a11/a12.

PATTERN_ALIASES = {"c11": "a11", "c12": "a12"}

_SCALAR = "a11 0 0 0; 0 a11 0 0; 0 0 a11 0; 0 0 0 a11"
_ROW3_FREE = "a11 0 0 0; 0 a11 0 0; a31 a32 a33 a34; 0 0 0 a11"
_ROW4_FREE = "a11 0 0 0; 0 a11 0 0; 0 0 a11 0; a41 a42 a43 a44"
_ROW2_FREE = "a11 0 0 0; a21 a22 a23 a24; 0 0 a11 0; 0 0 0 a11"
_L16_CENT = "a11 c12 a13 0; 0 a22 0 0; 0 0 a22 0; a22-a11 -a12 -a13 a22"

TABLE_CENT_PATTERNS: dict[str, str] = {
    "L2": "a11 0 0 0; 0 a11 0 0; a31 a32 c11 0; -a31 -a32 0 a11",
    "L7": "a44 0 0 0; 0 a44 0 0; 0 0 a44 0; 0 0 0 a44",
    "L16": _L16_CENT,
    "L17": _L16_CENT,
}
for _k in CATALOG:
    TABLE_CENT_PATTERNS.setdefault(_k, _SCALAR)

TABLE_QCENT_PATTERNS: dict[str, str] = {
    "L1": "a11 0 0 0; 0 a11 0 0; a31 a32 a11 a34; a41 a42 a43 a11",
    "L2": "a11 0 0 0; a21 a22 a23 a24; 0 0 a11 0; a41 a42 a43 a44",
    "L3": _SCALAR,
    "L4": _ROW3_FREE,
    "L5": _ROW4_FREE,
    "L6": _ROW3_FREE,
    "L7": "a22 0 0 0; 0 a22 0 0; 0 0 a22 0; 0 0 0 a22",
    "L8": _ROW2_FREE,
    "L9": _ROW2_FREE,
    "L10": _SCALAR,
    "L11": "a11 0 0 0; 0 a11 0 0; 0 0 a33 0; a41 a42 a43 a44",
    "L12": "a11 0 0 0; 0 a11 0 0; 0 0 a33 0; 0 0 0 a11",
    "L13": _SCALAR,
    "L14": _ROW4_FREE,
    "L15": _SCALAR,
    "L16": _ROW4_FREE,
    "L17": _ROW4_FREE,
    "L18": _ROW3_FREE,
}

# the stand-alone statement for L1, which differs from its table row
THEOREM_QCENT_PATTERNS: dict[str, str] = {
    "L1": "a11 0 0 0; a21 a22 a23 0; 0 0 a11 a24; a41 a42 a43 a44",
}
