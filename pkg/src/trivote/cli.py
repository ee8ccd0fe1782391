"""Command-line front end: validate, decide, scan, census.

Systems and assignments are read from JSON documents:

system document::

    {"n": 3, "kind": "minimal_coalitions", "coalitions": [[0, 1], [0, 2], [1, 2]]}
    {"n": 4, "kind": "majority_chair", "chair": 0}
    {"n": 3, "kind": "dictatorship", "dictator": 1}
    {"n": 5, "kind": "weighted", "weights": [3, 1, 1, 1, 1], "quota": 4}

assignment document::

    {"profiles": [1, 3, 5]}
    {"profiles": [1, 3, 5], "names": ["ana", "bo", "cy"]}

Member indices are 0-based; profile labels are 1-based.  Exit codes:
0 success, 1 domain failure (invalid system, theorem violation), 2 usage
or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional

from . import aggregate, restrictions, systems
from .aggregate import (
    Assignment,
    Linear,
    collective,
    condition_c,
    supporters,
)
from .core import Coalition, profile_order
from .systems import (
    AntichainViolation,
    ExactlyOneViolation,
    InvalidSystemError,
    ValidationReport,
    VotingSystem,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

SYSTEM_KINDS = ("minimal_coalitions", "majority_chair", "dictatorship", "weighted")


class DocumentError(ValueError):
    """A file could not be parsed into a well-formed document."""


def _order_str(order: tuple[str, str, str]) -> str:
    return ">".join(order)


def _members_str(coalition: Coalition) -> str:
    return str(list(coalition))


def _load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def _require(doc: Any, field: str, path: str) -> Any:
    if not isinstance(doc, dict) or field not in doc:
        raise DocumentError(f"{path}: missing field {field!r}")
    return doc[field]


def _int_field(doc: Any, field: str, path: str) -> int:
    value = _require(doc, field, path)
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentError(f"{path}: field {field!r} must be an integer")
    return value


def decode_system(doc: Any, path: str = "<document>") -> VotingSystem:
    """Build the voting system a document describes; no validation yet."""
    n = _int_field(doc, "n", path)
    kind = _require(doc, "kind", path)
    if kind not in SYSTEM_KINDS:
        raise DocumentError(
            f"{path}: unknown kind {kind!r}, expected one of {list(SYSTEM_KINDS)}"
        )
    try:
        if kind == "minimal_coalitions":
            coalitions = _require(doc, "coalitions", path)
            if not isinstance(coalitions, list) or not all(
                isinstance(c, list) and all(isinstance(m, int) for m in c)
                for c in coalitions
            ):
                raise DocumentError(
                    f"{path}: field 'coalitions' must be a list of member-index lists"
                )
            return VotingSystem.from_member_lists(n, coalitions)
        if kind == "majority_chair":
            return systems.majority_with_chair(n, _int_field(doc, "chair", path))
        if kind == "dictatorship":
            return systems.dictatorship(n, _int_field(doc, "dictator", path))
        weights = _require(doc, "weights", path)
        quota = _int_field(doc, "quota", path)
        if (
            not isinstance(weights, list)
            or len(weights) != n
            or not all(isinstance(w, int) and not isinstance(w, bool) for w in weights)
        ):
            raise DocumentError(
                f"{path}: field 'weights' must be a list of n integers"
            )
        return systems.weighted(weights, quota)
    except InvalidSystemError:
        raise
    except ValueError as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(f"{path}: {exc}") from exc


def encode_system(system: VotingSystem) -> dict:
    """Serialize a system to the explicit-antichain document form."""
    return {
        "n": system.n,
        "kind": "minimal_coalitions",
        "coalitions": [list(m) for m in system.minimal],
    }


def decode_assignment(doc: Any, path: str = "<document>") -> tuple[Assignment, Optional[list]]:
    profiles = _require(doc, "profiles", path)
    if not isinstance(profiles, list) or not all(
        isinstance(p, int) and not isinstance(p, bool) for p in profiles
    ):
        raise DocumentError(f"{path}: field 'profiles' must be a list of integers")
    names = doc.get("names")
    if names is not None:
        if not isinstance(names, list) or len(names) != len(profiles):
            raise DocumentError(
                f"{path}: field 'names' must be a list matching 'profiles' in length"
            )
    try:
        return Assignment(tuple(profiles)), names
    except ValueError as exc:
        raise DocumentError(f"{path}: {exc}") from exc


def _violation_json(violation) -> dict:
    if isinstance(violation, ExactlyOneViolation):
        return {
            "type": "exactly_one",
            "coalition": list(violation.coalition),
            "complement": list(violation.coalition.complement()),
            "both": violation.both,
        }
    return {
        "type": "antichain",
        "contained": list(violation.m1),
        "container": list(violation.m2),
    }


def _print_validation(report: ValidationReport, system: VotingSystem, as_json: bool) -> None:
    if as_json:
        payload = {
            "valid": report.valid,
            "n": system.n,
            "minimal_coalitions": [list(m) for m in system.minimal],
        }
        if report.violation is not None:
            payload["violation"] = _violation_json(report.violation)
        print(json.dumps(payload, indent=2))
        return
    print(f"valid: {'true' if report.valid else 'false'}")
    print(
        f"n: {system.n}, minimal efficient coalitions: "
        + (", ".join(_members_str(m) for m in system.minimal) or "(none)")
    )
    if isinstance(report.violation, ExactlyOneViolation):
        k = report.violation.coalition
        print(
            f"exactly-one violation: coalition {_members_str(k)} and its "
            f"complement {_members_str(k.complement())} are both {report.violation.both}"
        )
    elif isinstance(report.violation, AntichainViolation):
        print(
            f"antichain violation: {_members_str(report.violation.m1)} is contained "
            f"in {_members_str(report.violation.m2)}"
        )


def cmd_validate(args: argparse.Namespace) -> int:
    system = decode_system(_load_json(args.system), args.system)
    report = systems.validate(system)
    _print_validation(report, system, args.json)
    return EXIT_OK if report.valid else EXIT_DOMAIN


def cmd_decide(args: argparse.Namespace) -> int:
    system = decode_system(_load_json(args.system), args.system)
    report = systems.validate(system)
    if not report.valid:
        _print_validation(report, system, args.json)
        return EXIT_DOMAIN
    assignment, names = decode_assignment(_load_json(args.assignment), args.assignment)
    if assignment.n != system.n:
        raise DocumentError(
            f"{args.assignment}: assignment has {assignment.n} members, "
            f"system expects {system.n}"
        )

    duels = []
    for x, y in aggregate.PAIRS:
        sup = supporters(assignment, x, y)
        efficient = system.is_efficient(sup)
        duels.append((x, y, sup, efficient, x if efficient else y))
    outcome = collective(system, assignment)
    cc = condition_c(system, assignment)
    consistent = cc.holds == isinstance(outcome, Linear)

    if args.json:
        payload = {
            "n": system.n,
            "profiles": list(assignment.profiles),
            "pairwise": [
                {
                    "pair": f"{x} vs {y}",
                    "supporters_of_first": list(sup),
                    "first_side_efficient": eff,
                    "winner": winner,
                }
                for x, y, sup, eff, winner in duels
            ],
            "outcome": (
                {"kind": "linear", "ranking": outcome.ranking, "order": str(outcome)}
                if isinstance(outcome, Linear)
                else {"kind": "cyclic", "orientation": outcome.orientation}
            ),
            "condition_c": {"holds": cc.holds, "witnesses": sorted(cc.witnesses)},
            "consistent": consistent,
        }
        if names is not None:
            payload["names"] = names
        print(json.dumps(payload, indent=2))
    else:
        profile_bits = ", ".join(
            f"member {m} -> profile {p} ({_order_str(profile_order(p))})"
            for m, p in enumerate(assignment.profiles)
        )
        print(f"assignment: {profile_bits}")
        for x, y, sup, eff, winner in duels:
            verdict = "efficient" if eff else "not efficient"
            print(
                f"{x} vs {y}: {winner} wins "
                f"(supporters of {x}: {_members_str(sup)}, {verdict})"
            )
        if isinstance(outcome, Linear):
            print(f"outcome: linear: {outcome} (ranking {outcome.ranking})")
        else:
            print(f"outcome: {outcome}")
        if cc.holds:
            print(
                "condition C: holds (witnesses: "
                + ", ".join(str(p) for p in sorted(cc.witnesses))
                + ")"
            )
        else:
            print("condition C: fails (no witness profile)")
        status = "consistent" if consistent else "VIOLATION"
        kind = "linear" if isinstance(outcome, Linear) else "cyclic"
        held = "holds" if cc.holds else "fails"
        print(f"equivalence check: condition C {held}, outcome {kind}: {status}")
    return EXIT_OK if consistent else EXIT_DOMAIN


def cmd_scan(args: argparse.Namespace) -> int:
    report = aggregate.exhaustive_scan(args.n, jobs=args.jobs, max_n=args.max_n)
    if args.json:
        payload = {
            "n": report.n,
            "systems": report.systems,
            "assignments_per_system": report.assignments_per_system,
            "checks": report.checks,
            "linear": report.linear,
            "cyclic": report.cyclic,
            "condition_failures": report.condition_failures,
            "violations": {
                "equivalence": report.equivalence_violations,
                "witness_ranking": report.witness_violations,
                "converse_witness": report.converse_violations,
            },
            "per_system_cyclic": list(report.per_system_cyclic),
        }
        if report.first_counterexample is not None:
            ce = report.first_counterexample
            payload["first_counterexample"] = {
                "system_index": ce.system_index,
                "minimal_coalitions": [list(c) for c in ce.minimal_coalitions],
                "assignment_index": ce.assignment_index,
                "profiles": list(ce.profiles),
                "check": ce.check,
            }
        print(json.dumps(payload, indent=2))
    else:
        print(
            f"n={report.n}: {report.systems} systems, {report.checks} checks, "
            f"{report.violations} violations, {report.cyclic} cyclic outcomes"
        )
        if report.first_counterexample is not None:
            ce = report.first_counterexample
            print(
                f"first counterexample: system {ce.system_index} "
                f"{[list(c) for c in ce.minimal_coalitions]}, assignment "
                f"{ce.assignment_index} profiles {list(ce.profiles)} ({ce.check})"
            )
    return EXIT_OK if report.violations == 0 else EXIT_DOMAIN


def _census_system(args: argparse.Namespace) -> VotingSystem:
    if args.system == "majority":
        if args.n is None:
            raise DocumentError("census: built-in systems need -n")
        return systems.majority_with_chair(args.n, args.chair)
    if args.system == "dictatorship":
        if args.n is None:
            raise DocumentError("census: built-in systems need -n")
        return systems.dictatorship(args.n, args.dictator)
    system = decode_system(_load_json(args.system), args.system)
    if args.n is not None and args.n != system.n:
        raise DocumentError(
            f"census: -n {args.n} does not match system size n={system.n}"
        )
    return system


def cmd_census(args: argparse.Namespace) -> int:
    system = _census_system(args)
    report = systems.validate(system)
    if not report.valid:
        _print_validation(report, system, args.json)
        return EXIT_DOMAIN
    census = restrictions.gap_census(system.n, system)
    if args.json:
        payload = {
            "n": census.n,
            "system": encode_system(system),
            "assignments": census.assignments,
            "value_restricted": census.value_restricted,
            "condition_c": census.condition_c,
            "linear": census.linear,
            "value_restricted_without_condition_c": census.vr_not_c,
            "condition_c_without_value_restriction": census.c_not_vr,
            "vr_sufficiency": {
                "applicable": census.vr_sufficiency_applicable,
                "holds": census.vr_sufficiency_holds,
            },
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"n={census.n}: {census.assignments} assignments")
        print(f"value restricted:                 {census.value_restricted}")
        print(f"condition C holds:                {census.condition_c}")
        print(f"linear outcome:                   {census.linear}")
        print(f"value restricted, C fails:        {census.vr_not_c}")
        print(f"C holds, not value restricted:    {census.c_not_vr}")
        if census.vr_sufficiency_applicable:
            verdict = "holds" if census.vr_sufficiency_holds else "FAILS"
            print(f"value restriction rules out cycles (odd pure majority): {verdict}")
        else:
            print("value restriction sufficiency check: not applicable (not odd pure majority)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trivote",
        description="Three-candidate coalition voting: validate systems, decide "
        "instances, scan all systems of a size, and census domain restrictions.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="reserved; all operations are deterministic",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a system document's axioms")
    p.add_argument("system", help="path to a system JSON document")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("decide", help="aggregate one assignment under one system")
    p.add_argument("system", help="path to a system JSON document")
    p.add_argument("assignment", help="path to an assignment JSON document")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("scan", help="verify the linearity criterion over all systems of size n")
    p.add_argument("n", type=int)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument(
        "--max-n",
        type=int,
        default=aggregate.SCAN_DEFAULT_MAX,
        help="raise the size cap (opt-in for n=7)",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("census", help="count restriction vs window-condition verdicts")
    p.add_argument(
        "system",
        help="path to a system JSON document, or built-in 'majority' or 'dictatorship'",
    )
    p.add_argument("-n", type=int, default=None, help="assembly size for built-ins")
    p.add_argument("--chair", type=int, default=0, help="chair for built-in majority")
    p.add_argument("--dictator", type=int, default=0, help="dictator for the built-in")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_census)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
