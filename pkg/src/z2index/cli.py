"""Command-line front end.

Subcommands: analyze (classify a presentation file), lens (classify a
lens space and compare with the family rule), catalog (look up the static
table), selftest (run the verification suites).

Exit codes: 0 success, 2 input validation, 3 cap exceeded without
--allow-truncate, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import __version__
from .borsuk import ClassificationResult, IndexReport, InvariantViolation, classify_all
from .catalog import lens_rule_index, lookup
from .exactlinalg import GF2Matrix, IntMatrix, gf2_kernel_basis
from .homology import first_homology
from .surgery import (
    PresentationError,
    SurgeryPresentation,
    lens_presentation,
    linking_matrix,
    parse_presentation,
)
from .selftest import run_all

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_INVARIANT = 4


class CapExceededError(RuntimeError):
    """Class enumeration hit the cap and truncation was not allowed."""


def _class_doc(report: IndexReport) -> dict:
    return {
        "class": list(report.cover_class.bits()),
        "lift": list(report.lift),
        "bockstein_rep": list(report.bockstein_rep),
        "beta_vanishes": report.beta_vanishes,
        "triple_cup": report.triple_cup,
        "self_linking": (
            None if report.self_linking is None else str(report.self_linking)
        ),
        "index": report.index,
        "bu_holds_for": list(report.bu_holds_for),
    }


def build_report(pres: SurgeryPresentation, result: ClassificationResult,
                 b: IntMatrix, warnings: list[str]) -> dict:
    homology = first_homology(b)
    k = _kernel_dimension(b)
    doc = {
        "schema": 1,
        "version": __version__,
        "label": pres.label,
        "matrix": b.to_lists(),
        "homology": {
            "invariant_factors": list(homology.invariant_factors),
            "free_rank": homology.free_rank,
        },
        "k": k,
        "class_count": (2 ** k - 1) if k else 0,
        "truncated": result.truncated,
        "classes": [_class_doc(r) for r in result.reports],
        "note": result.note,
        "warnings": list(warnings),
    }
    return doc


def _kernel_dimension(b: IntMatrix) -> int:
    return len(gf2_kernel_basis(GF2Matrix.from_int_matrix(b)))


def render_text(doc: dict, out) -> None:
    label = doc["label"] or "(unlabeled)"
    print(f"presentation: {label}", file=out)
    print(f"linking matrix: {doc['matrix']}", file=out)
    factors = doc["homology"]["invariant_factors"]
    free = doc["homology"]["free_rank"]
    parts = [f"Z/{f}" for f in factors] + ["Z"] * free
    print(f"H_1 = {' + '.join(parts) if parts else '0'}", file=out)
    print(f"dim H^1(N; Z_2) = {doc['k']}  "
          f"({doc['class_count']} connected double cover(s))", file=out)
    if doc["truncated"]:
        print("  [truncated: only a kernel basis is classified]", file=out)
    for cdoc in doc["classes"]:
        print(f"class {cdoc['class']}:", file=out)
        print(f"  lift X = {cdoc['lift']}", file=out)
        print(f"  Y = (1/2) B X = {cdoc['bockstein_rep']}", file=out)
        print(f"  beta(x) vanishes: {cdoc['beta_vanishes']}", file=out)
        print(f"  (1/2) X^T B X mod 2 = {cdoc['triple_cup']}", file=out)
        if cdoc["self_linking"] is not None:
            print(f"  self-linking = {cdoc['self_linking']}", file=out)
        print(f"  Z2-index = {cdoc['index']}", file=out)
        print(f"  Borsuk-Ulam property holds for (M, tau, R^n) for "
              f"n <= {cdoc['index']}", file=out)
    if doc["note"]:
        print(f"note: {doc['note']}", file=out)
    for w in doc["warnings"]:
        print(f"warning: {w}", file=out)


def _emit(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2, ensure_ascii=False), file=out)
    else:
        render_text(doc, out)


def _classify_presentation(pres: SurgeryPresentation, args,
                           warnings: list[str]) -> dict:
    b = linking_matrix(pres)
    result = classify_all(b, cap=args.cap, crosscheck=not args.no_crosscheck)
    if result.truncated and not args.allow_truncate:
        raise CapExceededError(
            f"{2 ** _kernel_dimension(b) - 1} cover classes exceed the cap "
            f"of {args.cap}; pass --allow-truncate to classify a basis only"
        )
    return build_report(pres, result, b, warnings)


def cmd_analyze(args, out) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    pres = parse_presentation(text)
    doc = _classify_presentation(pres, args, warnings=[])
    _emit(doc, args.format, out)
    return EXIT_OK


def cmd_lens(args, out) -> int:
    pres = lens_presentation(args.p, args.q)
    warnings = [
        "chain presentation convention: the label L(p,q) may realize "
        "L(p,q') for q' = +-q^(+-1) mod p; the index depends only on "
        "p mod 4"
    ]
    doc = _classify_presentation(pres, args, warnings=warnings)
    rule = lens_rule_index(args.p)
    computed = [c["index"] for c in doc["classes"]]
    doc["lens"] = {
        "p": args.p,
        "q": args.q,
        "rule_index": rule,
        "agrees": (computed == ([] if rule is None else [rule])),
    }
    _emit(doc, args.format, out)
    if args.format == "text":
        if rule is None:
            print(f"family rule: p={args.p} odd, no connected double cover; "
                  f"agrees: {doc['lens']['agrees']}", file=out)
        else:
            print(f"family rule: index {rule}; agrees: "
                  f"{doc['lens']['agrees']}", file=out)
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    entries = lookup(args.name)
    doc = {
        "schema": 1,
        "version": __version__,
        "query": args.name,
        "entries": [],
        "note": None if entries else "unknown manifold name",
    }
    for e in entries:
        edoc = dataclasses.asdict(e)
        pres = e.surgery_presentation
        edoc["surgery_presentation"] = (
            None if pres is None else linking_matrix(pres).to_lists()
        )
        edoc["cover_class_bits"] = (
            None if e.cover_class_bits is None else list(e.cover_class_bits)
        )
        doc["entries"].append(edoc)
    if args.format == "json":
        print(json.dumps(doc, indent=2, ensure_ascii=False), file=out)
    else:
        if not entries:
            print(f"no catalog entries for {args.name!r}", file=out)
        for e in entries:
            print(f"cover {e.cover_manifold} -> quotient "
                  f"{e.quotient_manifold}: Z2-index {e.index}", file=out)
            print(f"  {e.involution_note}", file=out)
            print(f"  source: {e.source}", file=out)
            if e.computable_by_surgery:
                print(f"  surgery matrix: "
                      f"{linking_matrix(e.surgery_presentation).to_lists()}",
                      file=out)
    return EXIT_OK


def cmd_selftest(args, out) -> int:
    results = run_all(quick=args.quick)
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.name}: {r.detail}", file=out)
        if not r.passed:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} suites passed", file=out)
    return EXIT_OK if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="z2index",
        description="Classify the Borsuk-Ulam Z2-index of free involutions "
                    "on 3-manifolds given by surgery presentations.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--cap", type=int, default=1024,
                       help="max number of cover classes to enumerate")
        p.add_argument("--allow-truncate", action="store_true",
                       help="past the cap, classify a kernel basis only")
        p.add_argument("--no-crosscheck", action="store_true",
                       help="skip the linking-form verification")

    p = sub.add_parser("analyze", help="classify a presentation file")
    p.add_argument("input", help="JSON presentation document")
    add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("lens", help="classify a lens space L(p, q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    add_common(p)
    p.set_defaults(func=cmd_lens)

    p = sub.add_parser("catalog", help="look up the static classification "
                                       "table")
    p.add_argument("name")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("selftest", help="run the verification suites")
    p.add_argument("--quick", action="store_true", help="fixtures only")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (PresentationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
