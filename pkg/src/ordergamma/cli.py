"""Command-line front end.

    ordergamma validate  POSET.json
    ordergamma hstar     POSET.json [--oracle] [--max-dilate M]
    ordergamma gamma     POSET.json | --demo-d4 [--assert]
    ordergamma saturations POSET.json | --demo-d4
    ordergamma verify    POSET.json | --demo-d4
    ordergamma crosspoly [POLYTOPE.json] [--assert]
    ordergamma demo-d4

Exit status: 0 success, 1 a verdict requested with ``--assert`` (or an
``--oracle``/``verify`` check) failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable
from typing import Any

from . import demos, laws
from .ehrhart import (
    equivariant_hstar,
    equivariant_hstar_bruteforce,
    generic_equivariant_hstar,
    hstar,
    hstar_linear_extensions,
)
from .errors import DegreeMismatch, NotPalindromic, OrderGammaError, ParseError
from .formats import (
    parse_subgroup,
    perm_to_cycles,
    polytope_from_json,
    poset_from_json,
    poset_to_json,
    read_json,
)
from .gamma import effectiveness_report, gamma_extract
from .polynomials import CharPolynomial, format_terms
from .poset import (
    LabeledPoset,
    automorphism_group,
    enumerate_saturations,
    saturation_orbits,
    to_parity_form,
)
from .reptheory.characters import CharacterTable, character_table
from .reptheory.perm import PermGroup, cycle_notation

COMMANDS = ("validate", "hstar", "gamma", "saturations", "verify", "crosspoly", "demo-d4")


class AssertionFailed(Exception):
    """A requested verdict did not hold; maps to exit status 1."""


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ordergamma", description="Equivariant h* and gamma of order polytopes.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("inputs", nargs="*", help="poset (or polytope) JSON files")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--max-dilate", type=int, default=None, help="dilates used by brute-force counting")
    p.add_argument("--oracle", action="store_true", help="re-run brute-force cross-checks")
    p.add_argument("--subgroup", default=None, help="generators in cycle notation, e.g. '(p1 p2)(p5 p6); (p3 p4)'")
    p.add_argument("--assert", dest="assert_", action="store_true", help="exit 1 when the verdict is negative")
    p.add_argument("--demo-d4", action="store_true", help="use the built-in dihedral example")
    return p


def _validate_args(args: argparse.Namespace) -> None:
    if args.max_dilate is not None and args.max_dilate < 1:
        raise ParseError("--max-dilate must be positive")
    if args.command == "crosspoly":
        if len(args.inputs) > 1:
            raise ParseError("crosspoly takes at most one polytope file")
        if args.demo_d4 or args.subgroup:
            raise ParseError("--demo-d4 and --subgroup do not apply to crosspoly")
        return
    if args.command == "demo-d4":
        if args.inputs:
            raise ParseError("demo-d4 takes no input files")
        return
    if args.demo_d4 and args.inputs:
        raise ParseError("give either --demo-d4 or an input file, not both")
    if not args.demo_d4 and len(args.inputs) != 1:
        raise ParseError(f"{args.command} needs exactly one poset file (or --demo-d4)")


def _load(args: argparse.Namespace) -> tuple[LabeledPoset, PermGroup, CharacterTable]:
    if args.demo_d4:
        lp, group = demos.d4_poset(), demos.d4_group()
    else:
        lp, group = poset_from_json(read_json(args.inputs[0]))
    if args.subgroup is not None:
        group = parse_subgroup(lp, args.subgroup)
    elif group is None:
        group = automorphism_group(lp)
    if args.demo_d4 and args.subgroup is None:
        table = demos.d4_table()
    else:
        table = character_table(group)
    return lp, group, table


def _poly_text(p: CharPolynomial, table: CharacterTable) -> str:
    return format_terms([(i, str(v)) for i, v in enumerate(p.decompose(table)) if not v.is_zero()])


def _poly_json(p: CharPolynomial, table: CharacterTable) -> dict:
    return {
        "irreducibles": list(table.names),
        "coefficients": [list(v.multiplicities) for v in p.decompose(table)],
        "text": _poly_text(p, table),
        "evaluations": {cycle_notation(g): list(e.coeffs) for g, e in zip(p.group.classes, p.evaluations())},
    }


def _group_summary(lp: LabeledPoset, group: PermGroup) -> dict:
    return {"order": group.order, "generators": [perm_to_cycles(lp, g) for g in group.generators]}


def cmd_validate(args, out: Callable[[str], None]) -> dict:
    lp, group, _ = _load(args)
    report = {
        "elements": len(lp),
        "consistency": lp.consistency.name.lower(),
        "graded": lp.is_graded,
        "rank": dict(zip(lp.elements, lp.rank)) if lp.is_graded else None,
        "grade_value": lp.grade_value if lp.is_graded else None,
        "one_graded": lp.is_graded and lp.all_positive,
        "group": _group_summary(lp, group),
        "poset": poset_to_json(lp, group),
    }
    if not args.json:
        out(f"{len(lp)} elements, {lp.consistency.name.lower().replace('_', ' ')}")
        if lp.is_graded:
            ranks = ", ".join(f"{e}={r}" for e, r in zip(lp.elements, lp.rank))
            out(f"ranks {ranks}; grade value {lp.grade_value}")
        out(f"group of order {group.order} generated by {', '.join(report['group']['generators']) or 'e'}")
    return report


def cmd_hstar(args, out) -> dict:
    lp, group, table = _load(args)
    lp.require_consistent()
    h = equivariant_hstar(lp, group)
    report: dict[str, Any] = {
        "group": _group_summary(lp, group),
        "hstar": _poly_json(h, table),
        "hstar_at_identity": list(h.at_identity().coeffs),
        "effective": h.is_effective(),
    }
    if not args.json:
        out(f"h*(t) at e: {h.at_identity()}")
        out(f"equivariant h*: {_poly_text(h, table)}")
        out("irreducibles: " + ", ".join(table.names))
    if args.oracle:
        checks = {
            "fixed-point series": equivariant_hstar_bruteforce(lp, group, args.max_dilate) == h,
            "linear-extension descents": hstar_linear_extensions(lp) == hstar(lp),
        }
        report["oracle"] = checks
        for name, ok in checks.items():
            if not args.json:
                out(f"oracle {name}: {'agree' if ok else 'MISMATCH'}")
        if not all(checks.values()):
            raise AssertionFailed("oracle mismatch", report)
    if args.assert_ and not report["effective"]:
        raise AssertionFailed("equivariant h* is not effective", report)
    return report


def cmd_gamma(args, out) -> dict:
    lp, group, table = _load(args)
    report = effectiveness_report(lp, group, table)
    if not args.json:
        out(f"gamma: {report['gamma_text']}")
        out("irreducibles: " + ", ".join(report["irreducibles"]))
        for i, row in enumerate(report["gamma"]):
            out(f"  gamma_{i}: {row}")
        out(f"saturation sum agrees with gamma of h*: {report['verified_against_hstar']}")
        out(f"effective: {report['effective']}")
    if args.oracle and not report["verified_against_hstar"]:
        raise AssertionFailed("gamma via saturations differs from gamma of h*", report)
    if args.assert_ and not report["effective"]:
        raise AssertionFailed("gamma is not effective", report)
    return report


def cmd_saturations(args, out) -> dict:
    lp, group, _ = _load(args)
    lp.require_consistent()
    par = to_parity_form(lp)
    orbits = saturation_orbits(par, group)
    total = sum(len(o) for o in orbits)
    sizes = [len(o) for o in orbits]
    report = {
        "count": total,
        "orbit_sizes": sizes,
        "stabilizer_orders": [o.stabilizer.order for o in orbits],
        "orbits": [
            {
                "representative": o.representative.named_blocks(),
                "grade_value": o.representative.grade_value_one,
                "members": [m.named_blocks() for m in o.members],
                "stabilizer": _group_summary(lp, o.stabilizer),
            }
            for o in orbits
        ],
    }
    if not args.json:
        out(f"{total} saturations in {len(orbits)} orbits ({','.join(map(str, sizes))})")
        for k, o in enumerate(orbits, 1):
            blocks = " | ".join(" ".join(b) for b in o.representative.named_blocks())
            out(f"  orbit {k}: size {len(o)}, stabilizer order {o.stabilizer.order}, representative [{blocks}]")
    if args.oracle and total != len(enumerate_saturations(par)):
        raise AssertionFailed("orbit sizes do not add up to the saturation count", report)
    return report


def cmd_verify(args, out) -> dict:
    lp, group, _ = _load(args)
    verdicts = laws.run_all(lp, group)
    report = {"laws": [{"law": v.law, "holds": v.holds, "detail": v.detail} for v in verdicts]}
    if not args.json:
        for v in verdicts:
            out(v.line())
    if any(v.holds is False for v in verdicts):
        raise AssertionFailed("a law failed", report)
    return report


def cmd_crosspoly(args, out) -> dict:
    if args.inputs:
        poly, group = polytope_from_json(read_json(args.inputs[0]))
        group = group or PermGroup.trivial(poly.dimension)
    else:
        poly, group = demos.octahedron(), demos.octahedron_group()
    table = character_table(group)
    h = generic_equivariant_hstar(poly, group, args.max_dilate)
    report: dict[str, Any] = {"dimension": poly.dimension, "hstar": _poly_json(h, table)}
    if not args.json:
        out(f"h*(t) at e: {h.at_identity()}")
        out(f"equivariant h*: {_poly_text(h, table)}")
    try:
        g = gamma_extract(h, h.degree)
    except (DegreeMismatch, NotPalindromic) as exc:
        report["gamma"] = None
        report["gamma_effective"] = None
        if not args.json:
            out(f"gamma: not defined ({exc})")
        return report
    coeffs = g.virtual(table)
    flags = [v.is_effective() for v in coeffs]
    report["gamma"] = [list(v.multiplicities) for v in coeffs]
    report["gamma_text"] = g.format(table)
    report["coefficient_effective"] = flags
    report["gamma_effective"] = all(flags)
    if not args.json:
        out(f"gamma: {g.format(table)}")
        for i, (v, ok) in enumerate(zip(coeffs, flags)):
            if not ok:
                out(f"  NON-EFFECTIVE gamma_{i} = {v}")
        out(f"effective: {all(flags)}")
    if args.assert_ and not all(flags):
        raise AssertionFailed("gamma is not effective", report)
    return report


def cmd_demo_d4(args, out) -> dict:
    args.demo_d4 = True
    if not args.json:
        out("poset: 8 elements, covers " + ", ".join(f"{a}<{b}" for a, b in demos.D4_COVERS))
    sat = cmd_saturations(args, out)
    gam = cmd_gamma(args, out)
    return {"saturations": sat, "gamma": gam}


HANDLERS = {
    "validate": cmd_validate,
    "hstar": cmd_hstar,
    "gamma": cmd_gamma,
    "saturations": cmd_saturations,
    "verify": cmd_verify,
    "crosspoly": cmd_crosspoly,
    "demo-d4": cmd_demo_d4,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    lines: list[str] = []
    status = 0
    report: dict = {}
    try:
        _validate_args(args)
        report = HANDLERS[args.command](args, lines.append)
    except OrderGammaError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except AssertionFailed as exc:
        message, report = exc.args
        print(f"assertion failed: {message}", file=sys.stderr)
        status = 1
    if args.json:
        if report:
            print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            print(line)
    return status


if __name__ == "__main__":
    sys.exit(main())
