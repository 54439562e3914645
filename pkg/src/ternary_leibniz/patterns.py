"""Symbolic matrix patterns.

A pattern is a matrix whose entries are ``0`` or linear forms in named free
parameters, e.g. ``"a11 0; a21-a11 a22"`` (rows split on ``;``). The set of
matrices it describes is a subspace, so patterns printed by hand can be
compared against computed subspaces with ``subspace_equal``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .catalog import format_rational
from .spaces import LinearMap, MatrixSubspace

_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*([A-Za-z]\w*)?")


def _linear_form(text: str) -> dict[str, Fraction]:
    text = text.replace(" ", "")
    if text in ("0", "-0", "+0"):
        return {}
    out: dict[str, Fraction] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or not m.group(3):
            raise ValueError(f"cannot read pattern entry {text!r}; expected a linear form like 'a22-a11'")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        name = m.group(3)
        out[name] = out.get(name, Fraction(0)) + sign * coef
        pos = m.end()
    return {k: v for k, v in out.items() if v}


def parse_pattern(text: str, aliases: dict[str, str] | None = None) -> tuple[int, list[list[dict[str, Fraction]]]]:
    aliases = aliases or {}
    rows = [r.split() for r in text.strip().split(";")]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError(f"pattern is not square: {text!r}")
    cells = []
    for r in rows:
        row = []
        for cell in r:
            form = {}
            for name, c in _linear_form(cell).items():
                name = aliases.get(name, name)
                form[name] = form.get(name, Fraction(0)) + c
            row.append(form)
        cells.append(row)
    return n, cells


def pattern_parameters(text: str, aliases: dict[str, str] | None = None) -> list[str]:
    _, cells = parse_pattern(text, aliases)
    return sorted({name for row in cells for cell in row for name in cell})


def pattern_space(text: str, aliases: dict[str, str] | None = None) -> MatrixSubspace:
    """All matrices obtained by assigning values to the pattern's parameters."""
    n, cells = parse_pattern(text, aliases)
    maps = []
    for name in sorted({nm for row in cells for cell in row for nm in cell}):
        maps.append(LinearMap(n, tuple(tuple(cell.get(name, 0) for cell in row) for row in cells)))
    return MatrixSubspace(n, tuple(maps))


def transpose(S: MatrixSubspace) -> MatrixSubspace:
    return MatrixSubspace(S.n, tuple(LinearMap(S.n, tuple(zip(*m.entries))) for m in S.basis))


def _render_form(form: list[tuple[str, Fraction]]) -> str:
    if not form:
        return "0"
    out = ""
    for name, c in form:
        mag = abs(c)
        term = name if mag == 1 else f"{format_rational(mag)}*{name}"
        if c < 0:
            out += "-" + term
        else:
            out += ("+" if out else "") + term
    return out


def render_pattern(S: MatrixSubspace) -> list[list[str]]:
    """Generic element of ``S`` with one parameter per basis element.

    The parameter of a basis element is named after its pivot position, so in
    the generic matrix that position reads exactly ``a<p><q>``.
    """
    names = [f"a{p}{q}" for p, q in S.pivots()]
    grid = []
    for p in range(S.n):
        row = []
        for q in range(S.n):
            form = [(nm, m.entries[p][q]) for nm, m in zip(names, S.basis) if m.entries[p][q]]
            row.append(_render_form(form))
        grid.append(row)
    return grid


def format_grid(grid: list[list[str]]) -> str:
    width = max(len(c) for row in grid for c in row)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in grid)
