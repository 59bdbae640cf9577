"""Command line entry point ``boundring``.

Exit codes: 0 success, 1 usage or parse error, 2 the set failed validation,
3 two independent computations disagreed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .algebra import PolynomialSyntaxError, format_monomial, parse_polynomial
from .boundedring import bounded_monoid, is_bounded, proper_witness
from .completion2d import CompletionReport, CrossCheckError, compatible_completion
from .dsl import SetSyntaxError, parse_set, set_to_json
from .oracle import OracleParams, certify_unbounded, consistency_check
from .setmodel import SetSpec, validate

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_CONTRADICTION = 0, 1, 2, 3

COMMANDS = ("ring", "member", "trdeg", "completion", "witness", "check", "diagnose")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="boundring",
        description="Rings of polynomials bounded on sets defined by monomial inequalities.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("polynomial", nargs="?", help="polynomial (member only)")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("-f", "--file", help="path to a .set file ('-' for stdin)")
    src.add_argument("-e", "--expr", help="set description given inline")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--degree-bound", type=int, default=6, metavar="N")
    p.add_argument("--oracle-scales", type=int, default=OracleParams.scales, metavar="K")
    p.add_argument("--no-completion", action="store_true", help="direct route only")
    p.add_argument("--n", type=int, default=None, metavar="VARS", help="number of variables")
    return p


def _load(args) -> SetSpec:
    if args.expr is not None:
        text = args.expr
    elif args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from exc
    return parse_set(text, n=args.n)


def _vec(v):
    return list(v) if v is not None else None


def completion_json(r: CompletionReport) -> dict:
    return {
        "rays": [list(w) for w in r.fan.rays],
        "labels": list(r.fan.labels),
        "blowups": [
            {"label": b.label, "ray": list(b.inserted_ray), "parent": [list(b.parent_cone[0]), list(b.parent_cone[1])]}
            for b in r.blowups
        ],
        "touched": [list(w) for w in r.touched],
        "untouched": [list(w) for w in r.untouched],
        "divisors": [
            {
                "label": d.label,
                "ray": list(d.ray),
                "at_infinity": d.at_infinity,
                "touched": d.touched,
                "self_intersection": d.self_intersection,
            }
            for d in r.divisors
        ],
        "m_d": [list(row) for row in r.m_d],
        "verdict": r.trdeg_verdict,
        "hilbert_basis": [list(e) for e in r.ring.basis.elements],
    }


def _human_completion(r: CompletionReport, out: list[str]):
    if r.blowups:
        steps = ", ".join(f"{b.label}={tuple(b.inserted_ray)}" for b in r.blowups)
        out.append(f"blow-ups: {steps}")
    else:
        out.append("blow-ups: none (the projective plane is already compatible)")
    out.append(f"fan rays: {', '.join(str(w) for w in r.fan.rays)}")
    out.append(f"touched: {', '.join(str(w) for w in r.touched) or 'none'}")
    out.append(f"untouched: {', '.join(str(w) for w in r.untouched) or 'none'}")
    out.append(f"M_D = {[list(row) for row in r.m_d]}")
    out.append(f"trdeg verdict from M_D: {r.trdeg_verdict}")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_intermixed_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    out: list[str] = []
    report: dict = {"command": args.command}
    try:
        code = _dispatch(args, out, report)
    except (UsageError, SetSyntaxError, PolynomialSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(report, indent=2))
    elif out:
        print("\n".join(out))
    return code


def _dispatch(args, out: list[str], report: dict) -> int:
    if args.command == "member" and not args.polynomial:
        raise UsageError("member needs a polynomial argument")
    if args.command != "member" and args.polynomial:
        raise UsageError(f"{args.command} takes no polynomial argument")
    s = _load(args)
    report["spec"] = set_to_json(s)
    diag = validate(s)
    report["diagnostics"] = diag.as_dict()
    if args.command == "diagnose":
        out.extend(_diag_lines(diag))
        return EXIT_OK if diag.ok else EXIT_INVALID
    if not diag.ok:
        out.append("validation failed:")
        out.extend(_diag_lines(diag))
        for line in out:
            print(line, file=sys.stderr)
        out.clear()
        return EXIT_INVALID

    params = OracleParams(scales=args.oracle_scales)
    want_completion = s.n == 2 and not args.no_completion
    if args.command == "completion" and s.n != 2:
        raise UsageError("completion needs a planar set (n = 2)")

    monoid = bounded_monoid(s)
    gens = monoid.generator_strings(s.variables)
    report["generators"] = gens
    report["hilbert_basis"] = [list(e) for e in monoid.basis.elements]
    report["trdeg"] = monoid.trdeg
    report["completion"] = None
    code = EXIT_OK

    completion = None
    if want_completion and args.command in ("ring", "completion", "check", "trdeg"):
        try:
            completion = compatible_completion(s)
        except CrossCheckError as exc:
            out.append(f"cross-check failure: {exc}")
            report["error"] = str(exc)
            return EXIT_CONTRADICTION
        report["completion"] = completion_json(completion)
        if completion.ring.basis.elements != monoid.basis.elements:
            out.append("cross-check failure: completion ring differs from the direct route")
            code = EXIT_CONTRADICTION

    if args.command == "ring":
        out.append(f"generators: {', '.join(gens) if gens else '(constants only)'}")
        out.append(f"B({s.name}) = R[{', '.join(gens)}]" if gens else f"B({s.name}) = R")
        out.append(f"trdeg: {monoid.trdeg}")
    elif args.command == "trdeg":
        out.append(str(monoid.trdeg))
        if completion is not None:
            out.append(f"intersection-matrix verdict: {completion.trdeg_verdict}")
    elif args.command == "completion":
        _human_completion(completion, out)
        out.append(f"ring: R[{', '.join(gens)}]" if gens else "ring: R")
        out.append(f"trdeg: {monoid.trdeg}")
    elif args.command == "witness":
        w = proper_witness(s)
        report["witness"] = {"exponent": _vec(w.witness), "reason": w.reason}
        if w.witness is None:
            out.append(f"no witness: {w.reason}")
        else:
            out.append(f"witness: h = {format_monomial(w.witness, s.variables)}  exponent {w.witness}")
    elif args.command == "member":
        f = parse_polynomial(args.polynomial, s.variables)
        v = is_bounded(f, s)
        member = {
            "polynomial": args.polynomial,
            "bounded": v.bounded,
            "violating_exponent": _vec(v.violating_exponent),
            "violating_direction": _vec(v.violating_direction),
            "per_divisor_values": {str(list(k)): val for k, val in v.per_divisor_values.items()},
        }
        if v.bounded:
            out.append("bounded")
        else:
            g = certify_unbounded(f, s, v.violating_direction, params)
            member["oracle_certified"] = g.unbounded_certified
            out.append("unbounded")
            out.append(f"violating monomial: {format_monomial(v.violating_exponent, s.variables)}")
            out.append(f"violating direction: {v.violating_direction}")
            status = "confirms" if g.unbounded_certified else "could not confirm"
            out.append(f"oracle {status} growth along {v.violating_direction}")
        report["member"] = member
    elif args.command == "check":
        cons = consistency_check(s, args.degree_bound, params)
        route_ok = completion is None or completion.ring.basis.elements == monoid.basis.elements
        report["check"] = {
            "route_equivalence": route_ok if completion is not None else None,
            "monomials_checked": cons.checked,
            "disagreements": [{"exponent": list(e), "reason": r} for e, r in cons.disagreements],
        }
        out.append(
            "route equivalence: "
            + ("skipped" if completion is None else ("ok" if route_ok else "MISMATCH"))
        )
        out.append(f"oracle consistency: {cons.checked} monomials, {len(cons.disagreements)} disagreements")
        for e, r in cons.disagreements:
            out.append(f"  {format_monomial(e, s.variables)}: {r}")
        if not route_ok or not cons.ok:
            code = EXIT_CONTRADICTION
    return code


def _diag_lines(diag) -> list[str]:
    lines = [
        f"unbounded: {diag.unbounded}",
        f"zariski dense at infinity: {diag.zariski_dense_at_infinity}",
        f"conductor zero: {diag.conductor_zero}",
        f"noetherian obstruction: {diag.noetherian_obstruction}",
    ]
    lines.extend(diag.messages)
    return lines


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
