"""Command line front end: ``fieldgrid norm|compare|find-prime|verify``."""

from __future__ import annotations

import argparse
import json
import sys

from fieldgrid.hermitian import parse_vector, vector_norm
from fieldgrid.modring import Modulus, ModulusError, ParseError, as_modulus, manhattan_norm, parse_element
from fieldgrid.order import DEFAULT_CAP, SearchExhausted, Verdict, find_kustaanheimo_prime, tournament_compare
from fieldgrid.verify import DEFAULT_SEED, SUITES, InfeasibleSuite, run_all, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_INFEASIBLE = 4


def _modulus_from(args) -> Modulus:
    if args.p is not None:
        return Modulus.prime(args.p)
    if args.m is not None:
        return as_modulus(args.m)
    raise ModulusError("give --p or --m")


def cmd_norm(args) -> int:
    mod = _modulus_from(args)
    text = args.value
    if "," in text:
        print(vector_norm(parse_vector(text, mod)))
    else:
        print(manhattan_norm(parse_element(text, mod)))
    return EXIT_OK


def cmd_compare(args) -> int:
    p = Modulus.prime(args.p).m
    for v in (args.x, args.y):
        if not 0 <= v < p:
            raise ParseError(f"bad element token {v!r}: not in [0, {p})")
    verdict = tournament_compare(args.x, args.y, p)
    if verdict is Verdict.EQUAL:
        print(f"{args.x} = {args.y}")
    elif verdict is Verdict.LESS:
        print(f"{args.x} <_p {args.y}")
    else:
        print(f"{args.y} <_p {args.x}")
    return EXIT_OK


def cmd_find_prime(args) -> int:
    try:
        cert = find_kustaanheimo_prime(args.k, args.cap)
    except SearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    if args.json:
        print(json.dumps(cert.to_dict(), indent=2, sort_keys=True))
    else:
        sys.stdout.write(cert.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == "all":
        reports = run_all(seed=args.seed)
    else:
        params = {k: getattr(args, k) for k in ("p", "m", "k", "n", "kind", "samples", "seed", "force", "cap")}
        reports = [run_suite(args.suite, **params)]
    for rep in reports:
        print(rep.summary())
        if rep.suite == "counterexample" and rep.violations:
            notes = rep.notes
            print(f"v=({notes['v']}) w=({notes['w']})")
            status = "non-residue" if notes["diff"] != 0 else "zero"
            print(f"LHS={notes['lhs']} RHS={notes['rhs']} ({status})")
            print(f"RHS-LHS={notes['diff']}")
    if args.report:
        with open(args.report, "w") as fh:
            fh.write("\n".join(rep.to_records() for rep in reports))
    return EXIT_OK if all(rep.passed for rep in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fieldgrid", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def modulus_flags(sp, need_p=False):
        sp.add_argument("--p", type=int, required=need_p, help="prime p = 3 mod 4")
        if not need_p:
            sp.add_argument("--m", type=int, help="general modulus m >= 2")

    sp = sub.add_parser("norm", help="Manhattan norm of an element a+bi or a vector a+bi,c+di,...")
    modulus_flags(sp)
    sp.add_argument("value")
    sp.set_defaults(func=cmd_norm)

    sp = sub.add_parser("compare", help="compare x, y in the quadratic residue tournament")
    modulus_flags(sp, need_p=True)
    sp.add_argument("x", type=int)
    sp.add_argument("y", type=int)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("find-prime", help="least prime p = 3 mod 4 with 1..k quadratic residues")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--json", action="store_true", help="structured output instead of text")
    sp.set_defaults(func=cmd_find_prime)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=SUITES + ("all",))
    modulus_flags(sp)
    sp.add_argument("--k", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--kind", choices=("complex-n2", "real-n3"))
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="bound for the prime search (cpd, cauchy-schwarz)")
    sp.add_argument("--samples", type=int, help="random pairs instead of an exhaustive sweep (inner-norm)")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--force", action="store_true", help="run even above the 1e8 case limit")
    sp.add_argument("--report", help="write the line-oriented report here")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ModulusError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleSuite as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except SearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
