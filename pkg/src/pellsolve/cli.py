"""Command-line front end.

Exit codes: 0 success, 1 no solutions, 2 usage, 3 unsupported or degenerate
equation, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd
from typing import Any, Callable, Sequence

from .automorphism import matrix_to_json
from .classifier import solve_square_case
from .closedform import decimal_preview, derive_closed_form, eval_closed_form
from .general import solve_general
from .genquad import DegenerateConicError, UnsupportedEquationError
from .golden import FAIL, all_conform, golden_report
from .model import GeneralQuadratic, InvalidEquationError, Kind, PellEquation
from .oracle import brute_force
from .orbits import enumerate_orbit, solve, verify_completeness

EXIT_OK, EXIT_NONE, EXIT_USAGE, EXIT_UNSUPPORTED, EXIT_VERIFY = 0, 1, 2, 3, 4

DEFAULT_COUNT = 5
DEFAULT_BOUND = 10_000


class UsageError(Exception):
    pass


class Output:
    """Collects text lines and a JSON document; prints one of them."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.doc: dict[str, Any] = {}
        self.lines: list[str] = []

    def say(self, line: str = "") -> None:
        self.lines.append(line)

    def message(self, line: str) -> None:
        """A human explanation that also goes into the JSON document."""
        self.doc["message"] = line
        self.lines.append(line)

    def flush(self) -> None:
        if self.as_json:
            print(json.dumps(self.doc, indent=2, ensure_ascii=False))
        else:
            print("\n".join(self.lines))


def _pair(s: Sequence[int]) -> str:
    return f"({s[0]}, {s[1]})"


def _matrix_str(m: Sequence[Sequence[object]]) -> str:
    return "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in m) + "]"


def _add_equation_flags(p: argparse.ArgumentParser, general: bool = True) -> None:
    g = p.add_argument_group("equation a*x^2 - b*y^2 + c = 0")
    g.add_argument("-a", type=int)
    g.add_argument("-b", type=int)
    g.add_argument("-c", type=int)
    if general:
        h = p.add_argument_group("general equation Ax^2 + Bxy + Cy^2 + Dx + Ey + F = 0")
        for name in "ABCDEF":
            h.add_argument(f"-{name}", type=int, dest=f"g{name}")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _equation(args: argparse.Namespace) -> PellEquation | GeneralQuadratic:
    pell = [args.a, args.b, args.c]
    gen = [getattr(args, f"g{n}", None) for n in "ABCDEF"]
    if any(v is not None for v in gen):
        if any(v is not None for v in pell):
            raise UsageError("use either -a/-b/-c or -A..-F, not both")
        return GeneralQuadratic(*[v or 0 for v in gen])
    if any(v is None for v in pell):
        raise UsageError("need -a, -b and -c (or -A..-F)")
    return PellEquation(*pell)


def _pell_only(args: argparse.Namespace) -> PellEquation:
    eq = _equation(args)
    if not isinstance(eq, PellEquation):
        raise UsageError("this command takes -a, -b, -c")
    return eq


def _no_solution_reason(eq: PellEquation, kind: Kind, evidence: dict) -> str:
    if kind is Kind.NO_SOLUTIONS_GCD:
        g = gcd(eq.a, eq.b)
        return f"gcd({eq.a},{eq.b})={g} does not divide {eq.c}"
    if kind is Kind.NO_SOLUTIONS_PROVEN:
        method = evidence.get("method")
        if method == "scan":
            return f"no solutions: exhaustive search to |y| <= {evidence['y_max']} is complete"
        return "no solutions: continued-fraction search is complete"
    return "no integer solutions"


# -- solve -------------------------------------------------------------------

def _solve_pell(eq: PellEquation, count: int, y_max: int | None, out: Output) -> int:
    sol = solve(eq, y_max)
    cls = sol.classification
    out.doc.update(equation=eq.to_json(), classification=cls.to_json())
    out.say(f"equation: {eq}")
    out.say(f"classification: {cls}")

    if cls.kind is Kind.FINITE_SQUARE_DISCRIMINANT:
        out.doc["solutions"] = [s.to_json() for s in sol.finite_solutions]
        ax = "x" if eq.a == 1 else f"{eq.a}x"
        out.say(f"({ax} - {cls.k}y)({ax} + {cls.k}y) = {-eq.a * eq.c}: "
                f"{len(sol.finite_solutions)} solution(s)")
        for s in sol.finite_solutions:
            out.say(f"  {_pair(s)}")
        if not sol.finite_solutions:
            out.message("no integer solutions")
            return EXIT_NONE
        return EXIT_OK

    if sol.automorphism is not None:
        aut = sol.automorphism
        out.doc["automorphism"] = aut.to_json()
        out.say(f"automorphism: {_matrix_str(aut.matrix)}  (alpha0={aut.alpha0}, gamma0={aut.gamma0})")

    if not sol.orbits:
        if sol.inconclusive:
            out.doc["inconclusive"] = True
            out.message(f"inconclusive: nothing found to |y| <= {cls.evidence.get('y_max')}, "
                    f"below the bound {cls.evidence.get('analytic_bound')}")
        else:
            out.message(_no_solution_reason(eq, cls.kind, cls.evidence))
        return EXIT_NONE

    out.doc["orbits"] = []
    out.say(f"orbits: {len(sol.orbits)}")
    for i, orbit in enumerate(sol.orbits):
        terms = orbit.terms(max(count - 1, 0))[:count]
        out.doc["orbits"].append({**orbit.to_json(), "terms": [t.to_json() for t in terms]})
        out.say(f"  orbit {i}: seed {_pair(orbit.seed)}  ε={orbit.sign_class:+d}")
        out.say("    " + ", ".join(_pair(t) for t in terms))
    return EXIT_OK


def _families_report(gq: GeneralQuadratic, count: int, y_max: int | None, out: Output) -> int:
    sol = solve_general(gq, y_max)
    red, t = sol.reduction, sol.reduction.transform
    out.doc.update(equation=gq.to_json(), reduced={"target": [str(v) for v in red.target],
                                                   "transform": t.to_json()},
                   classification=sol.classification.to_json())
    out.say(f"equation: {gq}")
    out.say(f"reduced: {red.target_str()}")
    if t.is_identity():
        out.say("transform: identity (equation is already diagonal)")
    else:
        out.say(f"transform: {t.describe()}")
        out.say(f"multiplier: {t.multiplier}  ({t.multiplier}·f = reduced form)")
        out.say(f"back map: {t.back_map_str()}")
    out.say(f"classification: {sol.classification}")

    if sol.automorphism is not None:
        out.doc["reduced_automorphism"] = sol.automorphism.to_json()
        out.say(f"reduced automorphism: {_matrix_str(sol.automorphism.matrix)}")

    if sol.finite_solutions or sol.classification.kind in (
            Kind.FINITE_DEFINITE, Kind.FINITE_SQUARE_DISCRIMINANT):
        out.doc["solutions"] = [s.to_json() for s in sol.finite_solutions]
        out.say(f"{len(sol.finite_solutions)} solution(s)")
        for s in sol.finite_solutions:
            out.say(f"  {_pair(s)}")
        return EXIT_OK if sol.finite_solutions else EXIT_NONE

    if not sol.families:
        if sol.inconclusive:
            out.message("inconclusive search")
        elif sol.classification.kind is Kind.NO_SOLUTIONS_GCD:
            out.message("reduced form: " + _no_solution_reason(red.pell(), Kind.NO_SOLUTIONS_GCD, {}))
        else:
            out.message("no integer solutions")
        return EXIT_NONE

    fam0 = sol.families[0]
    out.doc["affine_automorphism"] = matrix_to_json(fam0.affine)
    if fam0.power != 1:
        out.say(f"step: reduced automorphism to the power {fam0.power}")
    out.say(f"affine automorphism on (x, y, 1): {_matrix_str(fam0.affine)}")
    out.doc["families"] = []
    for i, fam in enumerate(sol.families):
        terms = fam.terms(max(count - 1, 0))[:count]
        out.doc["families"].append({**fam.to_json(), "terms": [s.to_json() for s in terms]})
        out.say(f"  family {i}: start {_pair(fam.start)} from reduced {_pair(fam.reduced_start)}")
        out.say("    " + ", ".join(_pair(s) for s in terms))
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    if args.input:
        return _solve_file(args)
    out = Output(args.json)
    eq = _equation(args)
    if isinstance(eq, PellEquation):
        code = _solve_pell(eq, args.count, args.ymax, out)
    else:
        code = _families_report(eq, args.count, args.ymax, out)
    out.flush()
    return code


def _solve_file(args: argparse.Namespace) -> int:
    worst = EXIT_OK
    docs = []
    with open(args.input, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                nums = [int(tok) for tok in line.replace(",", " ").split()]
            except ValueError:
                raise UsageError(f"{args.input}:{lineno}: expected integers")
            if len(nums) == 3:
                eq: PellEquation | GeneralQuadratic = PellEquation(*nums)
            elif len(nums) == 6:
                eq = GeneralQuadratic(*nums)
            else:
                raise UsageError(f"{args.input}:{lineno}: need 3 or 6 coefficients")
            out = Output(args.json)
            if isinstance(eq, PellEquation):
                code = _solve_pell(eq, args.count, args.ymax, out)
            else:
                code = _families_report(eq, args.count, args.ymax, out)
            worst = max(worst, code)
            if args.json:
                docs.append(out.doc)
            else:
                out.flush()
                print()
    if args.json:
        print(json.dumps(docs, indent=2, ensure_ascii=False))
    return worst


def cmd_classify(args: argparse.Namespace) -> int:
    out = Output(args.json)
    eq = _pell_only(args)
    sol = solve(eq, args.ymax)
    out.doc.update(equation=eq.to_json(), classification=sol.classification.to_json())
    out.say(f"{eq}: {sol.classification}")
    if sol.inconclusive:
        out.doc["inconclusive"] = True
        out.say("(search bound below the analytic bound: inconclusive)")
    out.flush()
    return EXIT_OK if sol.has_solutions else EXIT_NONE


def cmd_enumerate(args: argparse.Namespace) -> int:
    out = Output(args.json)
    eq = _pell_only(args)
    sol = solve(eq, args.ymax)
    if not sol.orbits:
        if sol.classification.kind is Kind.FINITE_SQUARE_DISCRIMINANT:
            out.message("square discriminant: finite solution set, nothing to enumerate; use solve")
        else:
            out.message(_no_solution_reason(eq, sol.classification.kind, sol.classification.evidence))
        out.flush()
        return EXIT_NONE
    orbits = list(enumerate(sol.orbits))
    if args.orbit is not None:
        if not 0 <= args.orbit < len(orbits):
            raise UsageError(f"--orbit must be in 0..{len(orbits) - 1}")
        orbits = [orbits[args.orbit]]
    out.doc["orbits"] = []
    for i, orbit in orbits:
        ns = range(args.start, args.start + args.count)
        terms = [(n, enumerate_orbit(orbit, n)) for n in ns]
        out.doc["orbits"].append({"index": str(i), "seed": orbit.seed.to_json(),
                                  "terms": [{"n": str(n), "solution": s.to_json()} for n, s in terms]})
        out.say(f"orbit {i}: seed {_pair(orbit.seed)}")
        for n, s in terms:
            out.say(f"  n={n}: {_pair(s)}")
    out.flush()
    return EXIT_OK


def cmd_closed_form(args: argparse.Namespace) -> int:
    out = Output(args.json)
    eq = _pell_only(args)
    sol = solve(eq, args.ymax)
    kind = sol.classification.kind
    if kind is Kind.FINITE_SQUARE_DISCRIMINANT:
        out.message("square discriminant: closed forms do not apply; use solve")
        out.flush()
        return EXIT_NONE
    if not sol.orbits:
        out.message(_no_solution_reason(eq, kind, sol.classification.evidence))
        out.flush()
        return EXIT_NONE
    out.doc.update(equation=eq.to_json(), closed_forms=[])
    out.say(f"equation: {eq}")
    for i, orbit in enumerate(sol.orbits):
        cf = derive_closed_form(orbit)
        checked = all(eval_closed_form(cf, n) == s
                      for n, s in enumerate(orbit.terms(args.check_n)))
        xs, ys = cf.render()
        out.doc["closed_forms"].append({**cf.to_json(), "text": [xs, ys],
                                        "checked_n": str(args.check_n), "ok": checked,
                                        "approx": decimal_preview(cf)})
        out.say(f"orbit {i}: seed {_pair(orbit.seed)}  ε={orbit.sign_class:+d}")
        out.say(f"  {xs}")
        out.say(f"  {ys}")
        out.say(f"  lambda ≈ {cf.lam.to_decimal(20)}")
        out.say(f"  matches enumeration for n = 0..{args.check_n}: {'yes' if checked else 'NO'}")
        if not checked:
            out.flush()
            return EXIT_VERIFY
    out.flush()
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    out = Output(args.json)
    eq = _equation(args)
    gq = GeneralQuadratic.from_pell(eq) if isinstance(eq, PellEquation) else eq
    code = _families_report(gq, args.count, args.ymax, out)
    out.flush()
    return code


def cmd_verify(args: argparse.Namespace) -> int:
    out = Output(args.json)
    eq = _pell_only(args)
    sol = solve(eq, args.ymax)
    kind = sol.classification.kind
    out.doc.update(equation=eq.to_json(), classification=sol.classification.to_json())
    out.say(f"equation: {eq}  [{sol.classification}]")

    if kind is Kind.FINITE_SQUARE_DISCRIMINANT or kind is Kind.NO_SOLUTIONS_GCD:
        expected = set(solve_square_case(eq)) if kind is Kind.FINITE_SQUARE_DISCRIMINANT else set()
        oracle = set(brute_force(eq, args.bound))
        missing = sorted(oracle - expected)
        out.doc["report"] = {"bound": str(args.bound), "found": str(len(oracle)),
                             "failures": [s.to_json() for s in missing]}
        out.say(f"brute force to {args.bound}: {len(oracle)} solution(s), "
                f"{len(missing)} not predicted")
        for s in missing:
            out.say(f"  counterexample {_pair(s)}")
        out.flush()
        return EXIT_VERIFY if missing else EXIT_OK

    orbits = list(sol.orbits)
    if args.drop_orbit is not None:
        if not 0 <= args.drop_orbit < len(orbits):
            raise UsageError(f"--drop-orbit must be in 0..{len(orbits) - 1}")
        del orbits[args.drop_orbit]
    report = verify_completeness(eq, orbits, args.bound)
    out.doc["report"] = report.to_json()
    out.say(f"brute force to {args.bound}: {report.found} solution(s)")
    for seed, n in report.counts:
        out.say(f"  orbit seed {_pair(seed)}: {n}")
    out.say(f"failures: {len(report.failures)}")
    for s, canon in report.failures:
        out.say(f"  counterexample {_pair(s)} -> canonical {_pair(canon)}")
    out.flush()
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_examples(args: argparse.Namespace) -> int:
    rows = golden_report()
    if args.json:
        print(json.dumps({"rows": [r.to_json() for r in rows],
                          "ok": all_conform(rows)}, indent=2, ensure_ascii=False))
    else:
        w = max(len(r.check) for r in rows)
        item = None
        for r in rows:
            if r.item != item:
                item = r.item
                print(item)
            print(f"  {r.status:8} {r.check:<{w}}  ref {r.reference}  got {r.derived}")
            if r.note:
                print(f"  {'':8} {'':<{w}}  note: {r.note}")
        bad = sum(r.status == FAIL for r in rows)
        print(f"{len(rows)} checks, {bad} failed")
    return EXIT_OK if all_conform(rows) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pellsolve",
        description="Exact solver for a*x^2 - b*y^2 + c = 0 and binary quadratic equations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable[[argparse.Namespace], int], help_: str,
            general: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        _add_equation_flags(p, general)
        p.add_argument("--ymax", type=int, help="override the seed-search bound on |y|")
        p.set_defaults(func=func)
        return p

    p = add("solve", cmd_solve, "classify and solve")
    p.add_argument("--count", type=int, default=DEFAULT_COUNT, help="terms per orbit")
    p.add_argument("--input", help="file with one equation per line (3 or 6 integers)")

    add("classify", cmd_classify, "classification only", general=False)

    p = add("enumerate", cmd_enumerate, "A^n * seed for a range of n", general=False)
    p.add_argument("--orbit", type=int)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--count", type=int, default=DEFAULT_COUNT)

    p = add("closed-form", cmd_closed_form, "exact closed forms per orbit", general=False)
    p.add_argument("--check-n", type=int, default=10)

    p = add("reduce", cmd_reduce, "reduce a general quadratic and solve it")
    p.add_argument("--count", type=int, default=DEFAULT_COUNT)

    p = add("verify", cmd_verify, "check completeness against brute force", general=False)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--drop-orbit", type=int, help=argparse.SUPPRESS)

    p = sub.add_parser("paper-examples", help="run the built-in golden suite")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("count", "bound", "check_n", "ymax"):
        v = getattr(args, name, None)
        if v is not None and v < 0:
            parser.error(f"--{name.replace('_', '-')} must be non-negative")
    try:
        return args.func(args)
    except (UsageError, InvalidEquationError, OSError) as exc:
        print(f"pellsolve: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DegenerateConicError, UnsupportedEquationError) as exc:
        print(f"pellsolve: unsupported equation: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
