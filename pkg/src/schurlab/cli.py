"""Command-line front end.

    schurlab info        --name L5_7 | --file presentation.alg
    schurlab multiplier  --name "H(1)+A(2)" [--format json]
    schurlab capable     --name A1
    schurlab bounds      --name L5_8
    schurlab sweep       --max-dim 6 [--parallel]
    schurlab check       --theorem all

Exit codes: 0 success, 2 input error, 3 resource cap exceeded,
4 a theorem-consistency check failed.

JSON output (schema_version "1") is stable-ordered and byte-identical
across repeated invocations.  Every document carries the algebra
identity: the catalog name, or the file path with a sha256 digest of
its bytes.  Dimensions are integers; scalars and basis vectors are
exact rational strings.  Table output is human-oriented and not a
stability surface.  Set SCHURLAB_LOG=INFO (or DEBUG) for progress
logging on stderr.
"""

import argparse
import hashlib
import json
import logging
import os
import sys
from fractions import Fraction

from .bounds import (
    check_theorem_2_1,
    check_theorem_2_2,
    check_theorem_2_5,
    check_theorem_2_6,
    check_theorem_3_7,
    classification_sweep,
    scan_theorem_2_9,
)
from .catalog import catalog_get, enumerate_catalog
from .dsl import parse_presentation
from .errors import InvariantMismatch, ResourceCapExceeded, SchurlabError
from .linalg import Subspace
from .multiplier import multiplier_report

SCHEMA_VERSION = "1"

log = logging.getLogger("schurlab")


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else str(value.numerator)
    if isinstance(value, Subspace):
        return {
            "dim": value.dim,
            "basis": [[_jsonable(x) for x in row] for row in value.rows],
        }
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit(doc, fmt):
    if fmt == "json":
        sys.stdout.write(json.dumps(_jsonable(doc), separators=(",", ":")))
        sys.stdout.write("\n")
        return
    _emit_table(doc, indent="")


def _emit_table(doc, indent):
    for key, value in doc.items():
        value = _jsonable(value)
        if isinstance(value, dict):
            sys.stdout.write(f"{indent}{key}:\n")
            _emit_table(value, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            sys.stdout.write(f"{indent}{key}:\n")
            for item in value:
                _emit_table(item, indent + "  ")
                sys.stdout.write("\n")
        else:
            sys.stdout.write(f"{indent}{key}: {value}\n")


def _parse_param(text):
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(
            f"expected NAME=VALUE, got {text!r}"
        )
    try:
        return name.strip(), Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"invalid rational value in {text!r}"
        ) from None


def _load_algebra(args):
    """Resolve --name or --file into (algebra, identity dict)."""
    if args.name is not None:
        params = dict(args.param or [])
        algebra = catalog_get(args.name, params=params)
        log.info("loaded catalog algebra %s", algebra.name)
        return algebra, {"name": algebra.name}
    with open(args.file, "rb") as handle:
        data = handle.read()
    algebra = parse_presentation(data.decode("utf-8"))
    digest = hashlib.sha256(data).hexdigest()
    log.info("parsed %s (sha256 %s)", args.file, digest[:12])
    return algebra, {"file": args.file, "sha256": digest}


def _series_doc(algebra, identity):
    rep = algebra.series()
    return {
        "schema_version": SCHEMA_VERSION,
        **identity,
        "n": algebra.dim,
        "m": rep.derived_dim,
        "c": rep.nilpotency_class,
        "d": rep.min_generators,
        "gamma_dims": list(rep.gamma_dims),
        "center_dim": rep.center_dim,
    }


def cmd_info(args):
    algebra, identity = _load_algebra(args)
    _emit(_series_doc(algebra, identity), args.format)
    return 0


def cmd_multiplier(args):
    algebra, identity = _load_algebra(args)
    report = multiplier_report(algebra)
    doc = {
        "schema_version": SCHEMA_VERSION,
        **identity,
        "n": report.n,
        "m": report.m,
        "c": report.c,
        "d": report.d,
        "dim_M": report.dim_M,
        "dim_exterior_square": report.dim_exterior_square,
        "exterior_center": report.exterior_center,
        "capable": report.capable,
        "bound_e1": report.bound_e1,
        "bound_e2": report.bound_e2,
        "attains_e2": report.attains_e2,
    }
    _emit(doc, args.format)
    return 0


def cmd_capable(args):
    algebra, identity = _load_algebra(args)
    report = multiplier_report(algebra)
    doc = {
        "schema_version": SCHEMA_VERSION,
        **identity,
        "capable": report.capable,
        "dim_exterior_center": report.exterior_center.dim,
    }
    _emit(doc, args.format)
    return 0


def cmd_bounds(args):
    algebra, identity = _load_algebra(args)
    report = multiplier_report(algebra)
    doc = {
        "schema_version": SCHEMA_VERSION,
        **identity,
        "n": report.n,
        "m": report.m,
        "c": report.c,
        "dim_M": report.dim_M,
        "bound_e1": report.bound_e1,
        "bound_e2": report.bound_e2,
        "attains_e2": report.attains_e2,
    }
    _emit(doc, args.format)
    return 0


def cmd_sweep(args):
    rows = classification_sweep(args.max_dim, parallel=args.parallel)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "max_dim": args.max_dim,
        "entries": [
            {
                "name": row.name,
                "n": row.n,
                "m": row.m,
                "c": row.c,
                "dim_M": row.dim_M,
                "bound_e2": row.bound_e2,
                "attains_e2": row.attains_e2,
            }
            for row in rows
        ],
        "attainers": [row.name for row in rows if row.attains_e2],
    }
    _emit(doc, args.format)
    return 0


def _theorem_doc(report):
    return {
        "theorem": report.theorem,
        "instance": report.instance,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "holds": report.holds,
        "witnesses": report.witnesses,
    }


def _run_checks(theorem, max_dim):
    entries = enumerate_catalog(max_dim)
    reports = []
    if theorem in ("2.1", "all"):
        for name, algebra in entries:
            center = algebra.center()
            if center.dim:
                reports.append(check_theorem_2_1(algebra, center))
    if theorem in ("2.2", "all"):
        for name, algebra in entries:
            rep = algebra.series()
            if rep.derived_dim == algebra.dim - 2 and algebra.dim >= 4:
                reports.append(check_theorem_2_2(algebra))
    if theorem in ("2.5", "all"):
        for name, algebra in entries:
            if algebra.series().derived_dim:
                reports.append(check_theorem_2_5(algebra))
    if theorem in ("2.6", "all"):
        for name, algebra in entries:
            if algebra.series().nilpotency_class == 3:
                reports.append(check_theorem_2_6(algebra))
    if theorem in ("2.9", "all"):
        reports.append(scan_theorem_2_9(max_dim))
    if theorem in ("3.7", "all"):
        reports.append(check_theorem_3_7(max_dim))
    return reports


def cmd_check(args):
    reports = _run_checks(args.theorem, args.max_dim)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "theorem": args.theorem,
        "max_dim": args.max_dim,
        "reports": [_theorem_doc(r) for r in reports],
        "all_hold": all(r.holds for r in reports),
    }
    _emit(doc, args.format)
    return 0 if doc["all_hold"] else 4


def _add_source_args(parser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--name", help="catalog name, e.g. L5_7 or H(1)+A(2)")
    source.add_argument("--file", help="path to a presentation file")
    parser.add_argument(
        "--param",
        action="append",
        type=_parse_param,
        metavar="NAME=VALUE",
        help="catalog parameter value, e.g. eps=1/2",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="schurlab",
        description="Exact multiplier and capability computations "
        "for nilpotent Lie algebras over the rationals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, handler, blurb in (
        ("info", cmd_info, "dimension, series and generator data"),
        ("multiplier", cmd_multiplier, "multiplier, exterior square, capability and bounds"),
        ("capable", cmd_capable, "capability test via the exterior center"),
        ("bounds", cmd_bounds, "the two dimension bounds and attainment"),
    ):
        p = sub.add_parser(name, help=blurb)
        _add_source_args(p)
        p.add_argument("--format", choices=("json", "table"), default="table")
        p.set_defaults(handler=handler)

    p = sub.add_parser("sweep", help="multiplier data for the whole catalog")
    p.add_argument("--max-dim", type=int, default=6)
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("check", help="verify theorem inequalities on the catalog")
    p.add_argument(
        "--theorem",
        choices=("2.1", "2.2", "2.5", "2.6", "2.9", "3.7", "all"),
        default="all",
    )
    p.add_argument("--max-dim", type=int, default=6)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(handler=cmd_check)
    return parser


def main(argv=None):
    level = os.environ.get("SCHURLAB_LOG", "WARNING").upper()
    logging.basicConfig(stream=sys.stderr, level=level, format="%(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ResourceCapExceeded as exc:
        print(f"schurlab: {exc}", file=sys.stderr)
        return 3
    except InvariantMismatch as exc:
        print(f"schurlab: {exc}", file=sys.stderr)
        return 4
    except SchurlabError as exc:
        print(f"schurlab: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"schurlab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
