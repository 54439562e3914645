"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure (defects, failed property,
table mismatch), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .catalog import CatalogError, FormatError, format_rational, parse_rational
from .core import TernaryAlgebra, is_leibniz, leibniz_defects
from .patterns import format_grid, render_pattern
from .report import format_report, verify_catalog
from .spaces import (
    InternalInconsistency,
    MatrixSubspace,
    central_derivations,
    centroid,
    closure_report,
    derivations,
    intersect,
    quasi_centroid,
    subspace_equal,
)

OK, FAILURE, INPUT_ERROR = 0, 1, 2

SPACES = {
    "centroid": ("centroid", centroid),
    "qcentroid": ("quasi-centroid", quasi_centroid),
    "der": ("derivations", derivations),
    "cder": ("central derivations", central_derivations),
}


class InputError(Exception):
    pass


def _load(path: str) -> TernaryAlgebra:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    try:
        return catalog.parse(text, name=Path(path).stem)
    except FormatError as exc:
        raise InputError(f"{path}: {type(exc).__name__}: {exc}") from None


def _matrix_strings(m) -> list[list[str]]:
    return [[format_rational(v) for v in row] for row in m.entries]


def cmd_check(args) -> int:
    A = _load(args.file)
    defects = leibniz_defects(A)
    if not defects:
        print(f"{args.file}: ternary Leibniz identity holds (dim {A.dim}, {len(A.table)} nonzero constants)")
        return OK
    print(f"{args.file}: {len(defects)} defect(s) in the ternary Leibniz identity")
    for d in defects:
        print(f"  (i,j,k,p,q,s) = ({d.i},{d.j},{d.k},{d.p},{d.q},{d.s})  residual {format_rational(d.residual)}")
    return FAILURE


def cmd_space(args) -> int:
    A = _load(args.file)
    label, fn = SPACES[args.command]
    if not is_leibniz(A):
        print(f"warning: {args.file} is not a ternary Leibniz algebra; computing the {label} anyway",
              file=sys.stderr)
    S: MatrixSubspace = fn(A)
    if args.json:
        payload = {
            "algebra": args.file,
            "space": args.command,
            "dim": S.dimension(),
            "basis": [_matrix_strings(m) for m in S.basis],
            "pattern": render_pattern(S),
        }
        print(json.dumps(payload, sort_keys=True))
        return OK
    print(f"{label} of {args.file}")
    for idx, m in enumerate(S.basis, start=1):
        print(f"basis[{idx}]:")
        print(format_grid(_matrix_strings(m)))
    print("generic element:")
    print(format_grid(render_pattern(S)))
    print(f"dim = {S.dimension()}")
    return OK


def cmd_props(args) -> int:
    A = _load(args.file)
    if not is_leibniz(A):
        print(f"NotLeibniz: {args.file} does not satisfy the ternary Leibniz identity", file=sys.stderr)
        return INPUT_ERROR
    report = closure_report(A)
    failed = False
    for flag, ok in report.flags.items():
        print(f"{'PASS' if ok else 'FAIL'}  {flag}")
        failed |= not ok
    for w in report.witnesses:
        print(f"  witness for {w.flag}: basis pair ({w.left}, {w.right}) {w.detail}".rstrip())
        if w.residual is not None:
            print("  membership residual:")
            print("    " + format_grid(_matrix_strings(w.residual)).replace("\n", "\n    "))
    try:
        cder = central_derivations(A)
        same = subspace_equal(cder, intersect(centroid(A), derivations(A)))
    except InternalInconsistency as exc:
        print(f"FAIL  central_derivations_equal_cent_cap_der  ({exc})")
        return FAILURE
    print(f"{'PASS' if same else 'FAIL'}  central_derivations_equal_cent_cap_der  (dim {cder.dimension()})")
    failed |= not same
    return FAILURE if failed else OK


def _alpha_value(text: str):
    try:
        return parse_rational(text.strip())
    except FormatError:
        raise InputError(f"bad rational for --alpha: {text!r}") from None


def cmd_catalog(args) -> int:
    if args.action == "list":
        for key, entry in catalog.CATALOG.items():
            params = ",".join(entry.requires_params) or "-"
            print(f"{key:4} params={params:6} table Cent={entry.expected_cent_dim} "
                  f"QCent={entry.expected_qcent_dim}")
        return OK
    if args.key is None:
        raise InputError("catalog dump needs a key (L1..L18)")
    params = {} if args.alpha is None else {"alpha": _alpha_value(args.alpha)}
    try:
        A = catalog.builtin(args.key, params)
    except CatalogError as exc:
        raise InputError(f"{type(exc).__name__}: {exc.args[0]}") from None
    sys.stdout.write(catalog.serialize(A))
    return OK


def cmd_verify_catalog(args) -> int:
    alphas = catalog.DEFAULT_ALPHAS
    if args.alpha:
        alphas = tuple(_alpha_value(a) for a in args.alpha.split(","))
    report = verify_catalog(alphas)
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(format_report(report, patterns=not args.no_patterns))
    return OK if report.ok else FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ternary-leibniz",
        description="Exact centroid, quasi-centroid and derivation computations for ternary Leibniz algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify the ternary Leibniz identity")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    for name, (label, _) in SPACES.items():
        p = sub.add_parser(name, help=f"basis and dimension of the {label}")
        p.add_argument("file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=cmd_space)

    p = sub.add_parser("props", help="check the closure properties of the operator spaces")
    p.add_argument("file")
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("catalog", help="list or dump the built-in algebras")
    p.add_argument("action", choices=("list", "dump"))
    p.add_argument("key", nargs="?")
    p.add_argument("--alpha", help="parameter value for L7 and L18, e.g. 1/2")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify-catalog", help="recompute the dimension table for all built-in algebras")
    p.add_argument("--alpha", help="comma-separated alpha samples (default 0,1,-1,1/2,2)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--no-patterns", action="store_true", help="omit the computed matrix patterns")
    p.set_defaults(func=cmd_verify_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
