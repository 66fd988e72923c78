"""Command-line front end.

Verbs: catalog, expand, homology, d3, classify, ledger, openbook,
selftest.  All numeric output is exact (rationals printed as p/q) and
byte-identical across runs.  Exit codes: 0 success, 1 computational
error, 2 input error, 3 ledger contradiction.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import acceptance, diagramio
from .catalog import Catalog, lint_knot
from .errors import (
    CannotCapLastBoundary,
    ContactSurgeryError,
    Contradiction,
    DiagramFormatError,
    IncompleteData,
    InvalidCableParameters,
    InvalidCoefficient,
    InvalidStabilization,
    NotInCatalog,
    NotRationalHomologySphere,
    NotRealizable,
    OutOfRange,
    PatternMismatch,
    UnknownCurve,
    UnsupportedCoefficient,
)
from .expansion import expand
from .homology import d3_invariant, homology_data, linking_matrix
from .ledger import (
    LedgerSubject,
    apply_rules,
    assert_fact,
    inverse_limit_status,
    tight_surgery_ranges,
)
from .legendrian import LegendrianKnot, TransverseKnot
from .openbook import InvariantStatus, cap_off, homology_action

_INPUT_ERRORS = (
    DiagramFormatError,
    InvalidCableParameters,
    InvalidCoefficient,
    NotInCatalog,
    OutOfRange,
    UnsupportedCoefficient,
    FileNotFoundError,
)
_COMPUTE_ERRORS = (
    CannotCapLastBoundary,
    IncompleteData,
    InvalidStabilization,
    NotRationalHomologySphere,
    NotRealizable,
    PatternMismatch,
    UnknownCurve,
)


def _load_catalog(args) -> Catalog:
    if getattr(args, "catalog", None):
        return Catalog.from_json(args.catalog)
    return Catalog.builtin()


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidCoefficient(f"cannot parse coefficient {text!r}") from exc


def _knot_record(knot) -> dict:
    return {
        "name": knot.name,
        "genus": knot.genus,
        "slice_genus": knot.slice_genus,
        "max_tb": knot.max_tb,
        "max_sl": knot.max_sl,
        "flags": sorted(knot.flags),
        "provenance": knot.provenance,
    }


def _cmd_catalog(args) -> int:
    catalog = _load_catalog(args)
    if args.list:
        for name in catalog.names():
            print(name)
        return 0
    knot = catalog.lookup(args.knot)
    if args.json:
        print(json.dumps(_knot_record(knot), indent=2, sort_keys=True))
    else:
        print(f"name: {knot.name}")
        print(f"genus: {knot.genus}")
        print(f"slice genus: {knot.slice_genus}")
        print(f"max tb: {'unknown' if knot.max_tb is None else knot.max_tb}")
        print(f"max sl: {'unknown' if knot.max_sl is None else knot.max_sl}")
        print(f"flags: {', '.join(sorted(knot.flags)) or 'none'}")
        for note in lint_knot(knot):
            print(f"lint: {note}")
    return 0


def _cmd_expand(args) -> int:
    knot_type = None
    if args.knot:
        knot_type = _load_catalog(args).lookup(args.knot)
    knot = LegendrianKnot(args.tb, args.rot, knot_type)
    presentations = expand(knot, _parse_fraction(args.coeff))
    if args.json:
        print(
            json.dumps(
                {"presentations": [diagramio.presentation_to_dict(p) for p in presentations]},
                indent=2,
                sort_keys=True,
            )
        )
        return 0
    print(f"{len(presentations)} presentation(s)")
    for i, presentation in enumerate(presentations):
        print(f"presentation {i}:")
        for comp in presentation.components:
            signs = "".join(comp.stab_signs) or "none"
            print(
                f"  {comp.role}: tb {comp.legendrian.tb}, rot {comp.legendrian.rot}, "
                f"coeff {'+1' if comp.coefficient == 1 else '-1'}, stabs {signs}"
            )
    return 0


def _cmd_homology(args) -> int:
    presentation = diagramio.parse_diagram_file(args.file)
    data = homology_data(linking_matrix(presentation))
    if args.json:
        print(
            json.dumps(
                {
                    "determinant": data.determinant,
                    "order_h1": data.order_h1,
                    "signature": data.signature,
                    "euler_characteristic": data.euler_characteristic,
                },
                indent=2,
                sort_keys=True,
            )
        )
        return 0
    order = "infinite" if data.order_h1 is None else str(data.order_h1)
    print(f"|H1| = {order}")
    print(f"signature = {data.signature}")
    print(f"euler characteristic = {data.euler_characteristic}")
    print(f"determinant = {data.determinant}")
    return 0


def _cmd_d3(args) -> int:
    presentation = diagramio.parse_diagram_file(args.file)
    print(d3_invariant(presentation))
    return 0


def _cmd_classify(args) -> int:
    knot = _load_catalog(args).lookup(args.knot)
    report = tight_surgery_ranges(knot)
    if args.json:
        print(
            json.dumps(
                {
                    "knot": knot.name,
                    "ranges": [
                        {"anchor": rng.anchor, "rule": rng.rule} for rng in report.ranges
                    ],
                    "sl_tb_gap": report.sl_tb_gap,
                },
                indent=2,
                sort_keys=True,
            )
        )
        return 0
    if not report.ranges:
        print(f"{knot.name}: no tight range certified by the built-in rules")
    for rng in sorted(report.ranges, key=lambda r: (r.anchor, r.rule)):
        print(f"{knot.name}: tight for r >= {rng.anchor} [{rng.rule}]")
    if report.sl_tb_gap is not None:
        print(f"max_sl - max_tb = {report.sl_tb_gap}")
    return 0


def _cmd_ledger(args) -> int:
    knot_type = None
    if args.knot:
        knot_type = _load_catalog(args).lookup(args.knot)
    legendrian = None
    if args.tb is not None:
        legendrian = LegendrianKnot(args.tb, args.rot or 0, knot_type)
    transverse = None
    if args.sl is not None:
        transverse = TransverseKnot(args.sl, knot_type)
    subject = LedgerSubject(
        legendrian=legendrian,
        transverse=transverse,
        binding=args.binding,
        positively_stabilized=args.positively_stabilized,
    )
    state = apply_rules(subject)
    if args.facts:
        for record in diagramio.facts_from_file(args.facts):
            state = assert_fact(
                state,
                record["offset"],
                InvariantStatus(record["status"]),
                record["rule"],
            )
    lo, hi = args.window
    rows = state.window(lo, hi)
    if args.json:
        print(
            json.dumps(
                {
                    "window": [
                        {"framing": f"f_S{k:+d}", "status": status.value, "rule": rule}
                        for k, status, rule in rows
                    ],
                    "inverse_limit": inverse_limit_status(state).value,
                },
                indent=2,
                sort_keys=True,
            )
        )
        return 0
    for k, status, rule in rows:
        provenance = f"  [{rule}]" if rule else ""
        print(f"f_S{k:+d}  {status.value}{provenance}")
    print(f"inverse limit: {inverse_limit_status(state).value}")
    return 0


def _cmd_openbook(args) -> int:
    surface, letters = diagramio.parse_open_book_file(args.file)
    if args.cap is not None:
        surface, letters = cap_off(surface, letters, args.cap)
    if args.json:
        payload = diagramio.open_book_to_dict(surface, letters)
        if args.action:
            payload["action"] = [list(row) for row in homology_action(letters, surface)]
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    print(f"genus {surface.genus}, boundary components {surface.boundary_count}, "
          f"H1 rank {surface.h1_rank}")
    print("word: " + (" ".join(f"{name}{sign}" for name, sign in letters) or "identity"))
    if args.action:
        for row in homology_action(letters, surface):
            print(" ".join(f"{x:4d}" for x in row))
    return 0


def _cmd_selftest(args) -> int:
    return 0 if acceptance.run_all(print) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contact-surgery",
        description="Exact contact surgery calculus: expansions, homological "
        "invariants, open book words, tightness classification.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    cat = sub.add_parser("catalog", help="look up knot-type records")
    cat.add_argument("--knot", help="knot name, e.g. T(2,3)")
    cat.add_argument("--list", action="store_true", help="list all names")
    cat.add_argument("--catalog", help="path to a catalog JSON file")
    cat.add_argument("--json", action="store_true")
    cat.set_defaults(run=_cmd_catalog)

    exp = sub.add_parser("expand", help="expand a rational contact surgery")
    exp.add_argument("--tb", type=int, required=True)
    exp.add_argument("--rot", type=int, required=True)
    exp.add_argument("--coeff", required=True,
                     help="rational coefficient, e.g. 3 or -2; write negative "
                          "fractions in the = form: --coeff=-7/2")
    exp.add_argument("--knot", help="optional catalog name for lint context")
    exp.add_argument("--catalog", help="path to a catalog JSON file")
    exp.add_argument("--json", action="store_true")
    exp.set_defaults(run=_cmd_expand)

    hom = sub.add_parser("homology", help="homological data of a diagram file")
    hom.add_argument("--file", required=True)
    hom.add_argument("--json", action="store_true")
    hom.set_defaults(run=_cmd_homology)

    d3p = sub.add_parser("d3", help="d3 invariant of a diagram file")
    d3p.add_argument("--file", required=True)
    d3p.set_defaults(run=_cmd_d3)

    cls = sub.add_parser("classify", help="certified-tight surgery ranges")
    cls.add_argument("--knot", required=True)
    cls.add_argument("--catalog", help="path to a catalog JSON file")
    cls.add_argument("--json", action="store_true")
    cls.set_defaults(run=_cmd_classify)

    led = sub.add_parser("ledger", help="framed invariant statuses")
    led.add_argument("--knot", help="catalog name supplying genus data")
    led.add_argument("--catalog", help="path to a catalog JSON file")
    led.add_argument("--tb", type=int, help="Legendrian tb (enables rule R1)")
    led.add_argument("--rot", type=int, default=0)
    led.add_argument("--sl", type=int, help="transverse self-linking number")
    led.add_argument("--binding", action="store_true",
                     help="assert the subject is an open book binding")
    led.add_argument("--positively-stabilized", action="store_true")
    led.add_argument("--facts", help="JSON file of extra (offset, status, rule) facts")
    led.add_argument("--window", type=int, nargs=2, default=(-3, 12),
                     metavar=("LO", "HI"))
    led.add_argument("--json", action="store_true")
    led.set_defaults(run=_cmd_ledger)

    book = sub.add_parser("openbook", help="inspect an open book file")
    book.add_argument("--file", required=True)
    book.add_argument("--action", action="store_true",
                      help="print the induced matrix on H1")
    book.add_argument("--cap", type=int, help="cap off the given boundary index")
    book.add_argument("--json", action="store_true")
    book.set_defaults(run=_cmd_openbook)

    self_test = sub.add_parser("selftest", help="run the acceptance checks")
    self_test.set_defaults(run=_cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except Contradiction as exc:
        print(f"contradiction: {exc}", file=sys.stderr)
        return 3
    except _INPUT_ERRORS as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except _COMPUTE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ContactSurgeryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
