"""Command-line entry point.

Exit codes: 0 when every check passes, 1 when at least one law is violated
(the report is still printed), 2 for usage, parse and I/O errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .catalog import from_name
from .dot import export_dot
from .errors import (
    InvalidCqia,
    InvalidQca,
    NotOrtholattice,
    OqkitError,
    ParseError,
    PreconditionFailed,
    TooLarge,
    ValidationError,
)
from .formats import AlgebraDocument, atomic_write, document_for, dumps, parse
from .frames import (
    check_cylindric_orthoframe,
    enumerate_proper_filters,
    goldblatt_frame,
    maclaren_frame,
)
from .lattice import FiniteOrtholattice, check_orthomodular, check_ortholattice, check_qca
from .qia import check_cylindric_qia, check_derived_identities, check_qia
from .report import CheckReport
from .transforms import cqia_to_qca, oml_to_qia, qca_to_cqia, qia_to_lattice

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def run_checks(doc: AlgebraDocument) -> list[tuple[str, CheckReport]]:
    p, kind = doc.payload, doc.kind
    if kind in ("ol", "oml"):
        base = check_ortholattice(p)
        results = [("ortholattice", base)]
        if kind == "oml" and base.passed:
            results.append(("orthomodular", check_orthomodular(p)))
        return results
    if kind == "qca":
        return [("qca", check_qca(p))]
    if kind == "qia":
        base = check_qia(p)
        results = [("qia", base)]
        if base.passed:
            results.append(("derived-identities", check_derived_identities(p)))
        return results
    if kind == "cqia":
        return [("cqia", check_cylindric_qia(p))]
    return [("cylindric-orthoframe", check_cylindric_orthoframe(p))]


def _format_violation(doc: AlgebraDocument, v) -> str:
    parts = [f"  {v.axiom}"]
    if v.dims:
        parts.append("dims=(" + ", ".join(map(str, v.dims)) + ")")
    parts.append("witness=(" + ", ".join(doc.label(x) for x in v.witness) + ")")
    return "  ".join(parts)


def print_results(doc: AlgebraDocument, results, stream) -> None:
    for name, report in results:
        print(f"{name}: {'passed' if report.passed else 'FAILED'}", file=stream)
        for v in report.violations:
            print(_format_violation(doc, v), file=stream)


def report_document(doc: AlgebraDocument, results, raw: bytes) -> dict:
    return {
        "tool": "oqkit",
        "version": __version__,
        "input_sha256": hashlib.sha256(raw).hexdigest(),
        "kind": doc.kind,
        "passed": all(r.passed for _, r in results),
        "checks": [
            {
                "name": name,
                "passed": r.passed,
                "violations": [
                    {"axiom": v.axiom, "dims": list(v.dims), "witness": [doc.label(x) for x in v.witness]}
                    for v in r.violations
                ],
            }
            for name, r in results
        ],
    }


def _emit(text: str, out: str | None) -> None:
    if out:
        atomic_write(out, text)
    else:
        sys.stdout.write(text)


def _to_cqia(doc: AlgebraDocument):
    if doc.kind == "cqia":
        return doc.payload
    if doc.kind == "qca":
        return qca_to_cqia(doc.payload)
    raise UsageError(f"expected a qca or cqia document, got {doc.kind!r}")


def convert(doc: AlgebraDocument, target: str) -> AlgebraDocument:
    p = doc.payload
    if target == "qia":
        if doc.kind == "qca":
            return AlgebraDocument("cqia", qca_to_cqia(p))
        if doc.kind in ("ol", "oml"):
            report = check_orthomodular(p)
            if not report.passed:
                raise InvalidQca("lattice is not orthomodular", report)
            return AlgebraDocument("qia", oml_to_qia(p))
    elif target == "qca":
        if doc.kind == "cqia":
            return AlgebraDocument("qca", cqia_to_qca(p))
        if doc.kind == "qia":
            report = check_qia(p)
            if not report.passed or p.zero is None:
                raise InvalidCqia("not a bounded quasi-implication algebra", report)
            return AlgebraDocument("oml", qia_to_lattice(p))
    raise UsageError(f"cannot convert a {doc.kind!r} document to {target!r}")


def _cmd_check(args) -> int:
    doc = parse(args.path)
    results = run_checks(doc)
    print_results(doc, results, sys.stdout)
    if args.json:
        raw = Path(args.path).read_bytes()
        atomic_write(args.json, json.dumps(report_document(doc, results, raw), indent=2) + "\n")
    return EXIT_OK if all(r.passed for _, r in results) else EXIT_VIOLATION


def _cmd_report(args) -> int:
    args.path = args.input
    return _cmd_check(args)


def _cmd_convert(args) -> int:
    doc = parse(args.path)
    _emit(dumps(convert(doc, args.to)), args.output)
    return EXIT_OK


def _cmd_roundtrip(args) -> int:
    doc = parse(args.path)
    if doc.kind == "qca":
        back = convert(convert(doc, "qia"), "qca")
    elif doc.kind == "cqia":
        back = convert(convert(doc, "qca"), "qia")
    else:
        raise UsageError("roundtrip needs a qca or cqia document")
    same = back.payload == doc.payload
    raw = Path(args.path).read_text(encoding="utf-8")
    bytes_same = dumps(back) == raw
    print(f"structure identical: {'yes' if same else 'NO'}")
    print(f"bytes identical: {'yes' if bytes_same else 'no'}")
    return EXIT_OK if same else EXIT_VIOLATION


def _parse_delta(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    try:
        i, k = (int(s) for s in text.split(","))
    except ValueError:
        raise UsageError(f"--delta expects i,k, got {text!r}") from None
    return i, k


def _cmd_frame(args) -> int:
    C = _to_cqia(parse(args.path))
    build = maclaren_frame if args.kind == "maclaren" else goldblatt_frame
    F = build(C, max_source=args.max_source)
    delta = _parse_delta(args.delta)
    if delta is not None and not all(0 <= v < F.d for v in delta):
        raise UsageError(f"--delta {args.delta}: dimensions are 0..{F.d - 1}")
    frame_doc = document_for(F)
    _emit(dumps(frame_doc), args.output)
    if args.dot:
        export_dot(F, args.dot, delta=delta, loops=args.loops)
    report = check_cylindric_orthoframe(F)
    print_results(frame_doc, [("cylindric-orthoframe", report)], sys.stderr)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _cmd_filters(args) -> int:
    C = _to_cqia(parse(args.path))
    report = check_cylindric_qia(C)
    if not report.passed:
        raise InvalidCqia("not a cylindric quasi-implication algebra", report)
    for f in enumerate_proper_filters(C, max_source=args.max_source):
        print("{" + ", ".join(C.qia.label(x) for x in sorted(f)) + "}")
    return EXIT_OK


def _cmd_catalog(args) -> int:
    obj = from_name(args.name)
    kind = None
    if isinstance(obj, FiniteOrtholattice):
        try:
            kind = "oml" if check_orthomodular(obj).passed else "ol"
        except NotOrtholattice:
            kind = "ol"
    _emit(dumps(document_for(obj, kind)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oqkit",
        description="Finite quantum cylindric algebras, cylindric quasi-implication algebras and their frames.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check every axiom for the document's kind")
    p.add_argument("path")
    p.add_argument("--json", metavar="OUT", help="also write a machine-readable report")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("report", help="write a machine-readable check report")
    p.add_argument("input")
    p.add_argument("--json", metavar="OUT", required=True)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("convert", help="qca -> cqia (--to qia) or cqia -> qca (--to qca)")
    p.add_argument("--to", choices=("qia", "qca"), required=True)
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("roundtrip", help="convert both ways and compare with the input")
    p.add_argument("path")
    p.set_defaults(func=_cmd_roundtrip)

    p = sub.add_parser("frame", help="build the MacLaren or Goldblatt frame")
    p.add_argument("--kind", choices=("maclaren", "goldblatt"), required=True)
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--delta", metavar="I,K", help="fill the members of this diagonal in the DOT output")
    p.add_argument("--loops", action="store_true", help="draw reflexive R_i loops")
    p.add_argument("--max-source", type=int)
    p.set_defaults(func=_cmd_frame)

    p = sub.add_parser("filters", help="list the proper filters")
    p.add_argument("path")
    p.add_argument("--max-source", type=int)
    p.set_defaults(func=_cmd_filters)

    p = sub.add_parser("catalog", help="emit a catalog instance (boolean:K, mo:M, o6, cylset:U:D, simple:BASE:D)")
    p.add_argument("name")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_catalog)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (ParseError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, TooLarge, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidQca, InvalidCqia, PreconditionFailed) as e:
        print(f"error: {e}", file=sys.stderr)
        if e.report is not None:
            print_results(_PlainLabels(), [("precondition", e.report)], sys.stderr)
        return EXIT_VIOLATION
    except OqkitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


class _PlainLabels:
    """Stands in for a document when only indices are known."""

    def label(self, x: int) -> str:
        return str(x)


run_cli = main

if __name__ == "__main__":
    sys.exit(main())
