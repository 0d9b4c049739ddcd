"""Command-line front end: JSON ideal documents in, exact tables and reports out.

Exit codes: 0 success, 1 verified strict inequality under --expect-equality,
2 parse error, 3 hypothesis failure, 4 internal inconsistency or golden
mismatch.  All numerics in the output are exact integers or "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import examples
from .ambient import AmbientAlgebra
from .errors import (
    GoldenMismatch,
    HypothesisFailed,
    InputError,
    InternalInconsistency,
    SallyLabError,
)
from .exact import frac_str
from .filtration import thm11a_check
from .hilbert import coefficients_for_ideal, hs_table
from .ideals import MonomialIdeal, colength, normalize, power
from .closure import is_integrally_closed, newton_closure
from .sally import (
    FinalExampleFixture,
    depth_bounds,
    reduction_number,
    sally_lengths,
    verify_lemma35,
    verify_lemma36,
    verify_northcott,
    verify_prop31,
    verify_prop310,
    verify_prop32,
    verify_prop39,
    verify_thm310,
    verify_thm33,
)

EXIT_OK = 0
EXIT_STRICT = 1
EXIT_PARSE = 2
EXIT_HYPOTHESIS = 3
EXIT_INCONSISTENT = 4

THEOREM_IDS = (
    "northcott",
    "prop31",
    "prop32",
    "thm33",
    "prop39",
    "prop310",
    "thm310",
    "lemma35",
    "lemma36",
    "thm11a",
)


@dataclass
class ParsedInput:
    ambient: AmbientAlgebra
    ideal: MonomialIdeal
    reduction: MonomialIdeal | None
    assume_integrally_closed: bool
    assume_rr_closed: bool
    n_option: int | None
    cap_option: int | None


def _vector_list(raw, path):
    if not isinstance(raw, list) or not raw:
        raise InputError(path, "expected a non-empty list of exponent vectors")
    out = []
    for i, v in enumerate(raw):
        if not isinstance(v, list) or not all(isinstance(x, int) and x >= 0 for x in v):
            raise InputError(f"{path}[{i}]", "expected a list of non-negative integers")
        out.append(tuple(v))
    return out


def parse_input(doc: dict) -> ParsedInput:
    if not isinstance(doc, dict):
        raise InputError("$", "input document must be a JSON object")
    amb_doc = doc.get("ambient")
    if not isinstance(amb_doc, dict):
        raise InputError("ambient", "required object")
    kind = amb_doc.get("kind")
    if kind == "polynomial":
        d = amb_doc.get("d")
        if not isinstance(d, int) or d < 2:
            raise InputError("ambient.d", "expected an integer >= 2")
        ambient = AmbientAlgebra.polynomial(d)
    elif kind == "semigroup":
        gens = _vector_list(amb_doc.get("generators"), "ambient.generators")
        cm = amb_doc.get("cm_flag")
        if not isinstance(cm, bool):
            raise InputError("ambient.cm_flag", "required boolean for semigroup ambient")
        try:
            ambient = AmbientAlgebra.semigroup(gens, cm_flag=cm)
        except (ValueError, SallyLabError) as exc:
            raise InputError("ambient.generators", str(exc)) from exc
    else:
        raise InputError("ambient.kind", "expected 'polynomial' or 'semigroup'")

    options = doc.get("options") or {}
    if not isinstance(options, dict):
        raise InputError("options", "expected an object")
    cap = options.get("cap")
    if cap is not None and (not isinstance(cap, int) or cap < 1):
        raise InputError("options.cap", "expected a positive integer")
    n_opt = options.get("N")
    if n_opt is not None and (not isinstance(n_opt, int) or n_opt < 1):
        raise InputError("options.N", "expected a positive integer")

    try:
        ideal = normalize(ambient, _vector_list(doc.get("ideal"), "ideal"))
    except SallyLabError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError("ideal", str(exc)) from exc

    reduction = None
    if doc.get("reduction") is not None:
        try:
            reduction = normalize(ambient, _vector_list(doc.get("reduction"), "reduction"))
        except SallyLabError as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError("reduction", str(exc)) from exc

    flags = doc.get("flags") or {}
    if not isinstance(flags, dict):
        raise InputError("flags", "expected an object")
    for key in flags:
        if key not in ("assume_integrally_closed", "assume_rr_closed"):
            raise InputError(f"flags.{key}", "unknown flag")

    return ParsedInput(
        ambient=ambient,
        ideal=ideal,
        reduction=reduction,
        assume_integrally_closed=bool(flags.get("assume_integrally_closed", False)),
        assume_rr_closed=bool(flags.get("assume_rr_closed", False)),
        n_option=n_opt,
        cap_option=cap,
    )


def load_document(path: str | None) -> dict:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(path, f"cannot read input file: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno}", f"invalid JSON: {exc.msg}") from exc


def emit(payload: dict, as_json: bool, text_lines) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _closed_flag(parsed: ParsedInput) -> bool | None:
    if parsed.ambient.kind == "polynomial":
        return is_integrally_closed(parsed.ideal)
    return True if parsed.assume_integrally_closed else None


def _reduction_pipeline(parsed: ParsedInput, args, need_sally: bool = True):
    if parsed.reduction is None:
        raise InputError("reduction", "required for this command")
    cap = args.cap if args.cap is not None else (parsed.cap_option or 20)
    rd = reduction_number(parsed.ideal, parsed.reduction, cap=cap)
    table, coeffs = coefficients_for_ideal(parsed.ideal, r=rd.r)
    sl = None
    if need_sally:
        N = args.N if args.N is not None else (parsed.n_option or max(rd.r + 5, 6))
        sl = sally_lengths(rd, max(N, rd.r + 5, 6))
    return rd, table, coeffs, sl


def _parsed(args) -> ParsedInput:
    return parse_input(load_document(args.infile))


def cmd_length(args) -> int:
    parsed = _parsed(args)
    value = colength(parsed.ideal)
    emit(
        {"command": "length", "colength": value},
        args.json,
        [f"colength(A/I) = {value}"],
    )
    return EXIT_OK


def cmd_power(args) -> int:
    parsed = _parsed(args)
    n = args.N if args.N is not None else 2
    J = power(parsed.ideal, n)
    gens = [list(g) for g in J.generators]
    emit(
        {"command": "power", "n": n, "generators": gens, "colength": colength(J)},
        args.json,
        [f"I^{n} minimal generators: {gens}", f"colength(A/I^{n}) = {colength(J)}"],
    )
    return EXIT_OK


def cmd_closure(args) -> int:
    parsed = _parsed(args)
    closed = newton_closure(parsed.ideal)
    gens = [list(g) for g in closed.generators]
    flag = is_integrally_closed(parsed.ideal)
    emit(
        {"command": "closure", "generators": gens, "integrally_closed": flag},
        args.json,
        [f"closure minimal generators: {gens}", f"integrally closed: {flag}"],
    )
    return EXIT_OK


def cmd_hilbert(args) -> int:
    parsed = _parsed(args)
    d = parsed.ambient.dim
    N = args.N if args.N is not None else (parsed.n_option or max(2 * (d + 1) + 2, 8))
    table = hs_table(parsed.ideal, N)
    lines = ["  n  len(A/I^(n+1))  diff"]
    for n, (v, df) in enumerate(zip(table.values, table.first_diffs)):
        lines.append(f"{n:>3}  {v:>14}  {df:>4}")
    emit(
        {
            "command": "hilbert",
            "values": list(table.values),
            "first_diffs": list(table.first_diffs),
        },
        args.json,
        lines,
    )
    return EXIT_OK


def cmd_coeffs(args) -> int:
    parsed = _parsed(args)
    table, coeffs = coefficients_for_ideal(parsed.ideal)
    emit(
        {
            "command": "coeffs",
            "e": list(coeffs.e),
            "postulation": coeffs.postulation,
        },
        args.json,
        [f"e = {list(coeffs.e)}", f"postulation = {coeffs.postulation}"],
    )
    return EXIT_OK


def cmd_reduction(args) -> int:
    parsed = _parsed(args)
    rd, _, _, _ = _reduction_pipeline(parsed, args, need_sally=False)
    emit(
        {"command": "reduction", "r": rd.r},
        args.json,
        [f"reduction number r = {rd.r}"],
    )
    return EXIT_OK


def cmd_sally(args) -> int:
    parsed = _parsed(args)
    rd, table, coeffs, sl = _reduction_pipeline(parsed, args)
    lines = ["  n     s     c     l"]
    for n in range(len(sl.s)):
        lines.append(f"{n:>3}  {sl.s[n]:>4}  {sl.c[n]:>4}  {sl.l[n]:>4}")
    emit(
        {
            "command": "sally",
            "s": list(sl.s),
            "c": list(sl.c),
            "l": list(sl.l),
        },
        args.json,
        lines,
    )
    return EXIT_OK


def cmd_depth(args) -> int:
    parsed = _parsed(args)
    rd, table, coeffs, sl = _reduction_pipeline(parsed, args)
    lower, upper, just = depth_bounds(rd, coeffs, sl, closed_flag=_closed_flag(parsed))
    lines = [f"depth interval: [{lower}, {upper}]"]
    lines.extend(f"justification: {j}" for j in just)
    emit(
        {
            "command": "depth",
            "depth_lower": lower,
            "depth_upper": upper,
            "justifications": list(just),
        },
        args.json,
        lines,
    )
    return EXIT_OK


def _report_lines(report) -> list:
    lines = [f"theorem {report.theorem_id}"]
    for name, holds in report.hypotheses:
        lines.append(f"hypothesis {name}: {str(holds).lower()}")
    lines.append(f"lhs = {frac_str(report.lhs)}")
    lines.append(f"rhs = {frac_str(report.rhs)}")
    lines.append(f"slack = {frac_str(report.slack)}")
    lines.append(f"equality = {str(report.equality).lower()}")
    cert = "unknown" if report.certificate is None else str(report.certificate).lower()
    lines.append(f"certificate = {cert}")
    lines.append(f"depth bounds = [{report.depth_lower}, {report.depth_upper}]")
    lines.extend(f"justification: {j}" for j in report.justifications)
    return lines


def cmd_verify(args) -> int:
    theorem = args.theorem
    if theorem not in THEOREM_IDS:
        raise InputError("theorem", f"unknown theorem id {theorem!r}")

    if args.fixture is not None:
        if args.fixture != "final-example":
            raise InputError("fixture", f"unknown fixture {args.fixture!r}")
        if theorem not in ("thm310", "prop310"):
            raise InputError("fixture", "fixtures apply to thm310 and prop310 only")
        fx = FinalExampleFixture(
            args.m if args.m is not None else 1,
            args.d if args.d is not None else 2,
        )
        report = verify_thm310(fx) if theorem == "thm310" else verify_prop310(fx)
        return _finish_verify(args, report)

    parsed = _parsed(args)
    if theorem == "lemma36":
        t = args.t
        if t is None:
            degrees = {sum(g) for g in parsed.ideal.generators}
            if len(degrees) != 1:
                raise InputError("t", "generators are not in a single degree; pass --t")
            t = degrees.pop()
        report = verify_lemma36(t, parsed.ideal.generators)
        return _finish_verify(args, report)
    if theorem == "lemma35":
        if parsed.reduction is None:
            raise InputError("reduction", "required for this command")
        report = verify_lemma35(parsed.ideal, parsed.reduction)
        return _finish_verify(args, report)

    rd, table, coeffs, sl = _reduction_pipeline(parsed, args)
    closed = _closed_flag(parsed)
    if theorem == "northcott":
        report = verify_northcott(rd, coeffs)
    elif theorem == "prop31":
        report = verify_prop31(rd, coeffs, sl, N=args.N)
    elif theorem == "prop32":
        report = verify_prop32(rd, coeffs)
    elif theorem == "thm33":
        report = verify_thm33(rd, coeffs, sl, closed_flag=closed, rr_closed=parsed.assume_rr_closed)
    elif theorem == "prop39":
        report = verify_prop39(rd, coeffs, sl, N=args.N)
    elif theorem == "prop310":
        report = verify_prop310(rd, coeffs, closed_flag=closed)
    elif theorem == "thm310":
        report = verify_thm310(rd, coeffs, sl, closed_flag=closed)
    else:  # thm11a on the s-table in its natural shape
        report = thm11a_check(sl.s, 1, parsed.ambient.dim, sl.s[1])
    return _finish_verify(args, report)


def _finish_verify(args, report) -> int:
    emit(
        {"command": "verify", **report.to_dict()},
        args.json,
        _report_lines(report),
    )
    if not report.hypotheses_hold():
        return EXIT_HYPOTHESIS
    if args.expect_equality and not report.equality:
        return EXIT_STRICT
    return EXIT_OK


def cmd_paper_examples(args) -> int:
    which = args.which
    if which == "ex3.7":
        lines = examples.run_degree_seven()
    elif which == "ex3.8":
        lines = examples.run_semigroup_family(args.s if args.s is not None else 1)
    elif which == "lemma3.6":
        lines = examples.run_degree_t_sweep(args.t if args.t is not None else 3)
    elif which == "ex2.7":
        lines = examples.run_chain_demo(
            args.m if args.m is not None else 3,
            args.d if args.d is not None else 2,
            args.N if args.N is not None else 6,
        )
    elif which == "final":
        lines = examples.run_final_fixture(
            args.m if args.m is not None else 1,
            args.d if args.d is not None else 2,
        )
    else:
        raise InputError("which", f"unknown example {which!r}")
    emit(
        {"command": "paper-examples", "which": which, "checks": lines, "status": "PASS"},
        args.json,
        lines + ["ALL PASS"],
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sally-lab",
        description="Exact computations and theorem checks for m-primary monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--in", dest="infile", default=None, help="input JSON document (default: stdin)")
        p.add_argument("--json", action="store_true", help="emit the structured JSON report")
        p.add_argument("--N", type=int, default=None, help="table window (power exponent for `power`)")
        p.add_argument("--cap", type=int, default=None, help="reduction-number search cap")
        p.add_argument("--expect-equality", action="store_true", help="exit 1 on a verified strict inequality")
        p.add_argument("--s", type=int, default=None, help="family parameter s")
        p.add_argument("--t", type=int, default=None, help="single generation degree t")
        p.add_argument("--m", type=int, default=None, help="coefficient length m")
        p.add_argument("--d", type=int, default=None, help="dimension d")
        p.add_argument("--fixture", default=None, help="named constant fixture (final-example)")

    for name, func in (
        ("length", cmd_length),
        ("power", cmd_power),
        ("closure", cmd_closure),
        ("hilbert", cmd_hilbert),
        ("coeffs", cmd_coeffs),
        ("reduction", cmd_reduction),
        ("sally", cmd_sally),
        ("depth", cmd_depth),
    ):
        p = sub.add_parser(name)
        common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("verify")
    p.add_argument("theorem", choices=THEOREM_IDS)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paper-examples")
    p.add_argument("which", choices=("ex2.7", "ex3.7", "ex3.8", "lemma3.6", "final"))
    common(p)
    p.set_defaults(func=cmd_paper_examples)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except HypothesisFailed as exc:
        print(f"hypothesis failed: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (InternalInconsistency, GoldenMismatch) as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except SallyLabError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
