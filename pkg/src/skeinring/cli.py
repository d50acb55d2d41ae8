"""Command-line entry point.

Exit codes: 0 success, 1 a property violation or failed check, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .coeff import ProfileError, normal_form
from .diagram import DiagramError, writhe
from .evaluator import EvaluationError, Evaluator, check_g_window
from .groebner import MonomialOrder, buchberger, format_basis, parse_ideal, same_ideal
from .knotlib import builtin_entry, builtin_names, parse_file
from .poly import Poly

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2
DEFAULT_SEED = 20240601


class InputError(Exception):
    pass


def _profile(name: str):
    from .profiles import get_profile

    try:
        return get_profile(name)
    except KeyError as e:
        raise InputError(e.args[0]) from None


def _diagrams(args) -> list:
    """[(name, Diagram)] from --pd or --builtin."""
    try:
        if args.pd:
            entries = parse_file(args.pd)
            if not entries:
                raise InputError(f"{args.pd}: no diagrams found")
            return [(e.name, e.diagram()) for e in entries]
        if args.builtin:
            e = builtin_entry(args.builtin)
            return [(e.name, e.diagram())]
    except OSError as e:
        raise InputError(str(e)) from None
    except KeyError as e:
        raise InputError(e.args[0]) from None
    except DiagramError as e:
        raise InputError(str(e)) from None
    raise InputError("give --pd FILE or --builtin NAME")


def _unit_weight(w, c, mu):
    return 1


# -- commands ---------------------------------------------------------------

def cmd_invariant(args) -> int:
    from .relations import verify_profile

    P = _profile(args.profile)
    diagrams = _diagrams(args)
    if not args.no_verify:
        rep = verify_profile(P)
        if not rep.ok:
            print(rep)
            return EXIT_VIOLATION
    family = "type1" if args.type.startswith("1") else "type2"
    if family != P.family:
        raise InputError(f"profile {P.name} is for {P.family} invariants, not type {args.type}")
    ev = Evaluator(P, family, modified=(args.type == "1w"), crossing_cap=P.crossing_cap)
    results = []
    for name, d in diagrams:
        row = {"name": name, "f": ev.f(d) if args.type != "1w" else normal_form(ev.f(d), P)}
        if args.type == "1w":
            row["F"] = ev.F(d)
        elif args.type == "2w":
            bad = check_g_window(_unit_weight, P, d.n_crossings + 2, d.n_components + 1)
            if bad:
                kind, w, c, mu, n = bad[0]
                print(f"unit weight violates the {kind} equation at w={w}, c={c}, mu={mu}, n={n}")
                return EXIT_VIOLATION
            row["F"] = normal_form(row["f"].scale(Poly.const(_unit_weight(writhe(d), d.n_crossings,
                                                                          d.n_components))), P)
        results.append(row)
    if args.json:
        out = [{"name": r["name"], "profile": P.name, "type": args.type,
                **{k: json.loads(r[k].to_json()) for k in ("f", "F") if k in r}} for r in results]
        print(json.dumps(out if len(out) > 1 else out[0], sort_keys=True))
    else:
        for r in results:
            prefix = f"{r['name']}: " if len(results) > 1 else ""
            print(f"{prefix}f = {r['f']}")
            if "F" in r:
                print(f"{prefix}F = {r['F']}")
    return EXIT_OK


def cmd_relations_derive(args) -> int:
    from .relations import CASE_NUMBERS, SIGN_PAIRS, CaseConfig, derive_case_relations, format_relations

    cases = sorted(CASE_NUMBERS) if args.case == "all" else [args.case]
    signs = SIGN_PAIRS if args.signs == "all" else [args.signs]
    blocks = []
    for c in cases:
        for s in signs:
            rels = derive_case_relations(CaseConfig(CASE_NUMBERS[c], s), args.family)
            header = f"# case {c} ({CASE_NUMBERS[c]}) signs {s}: {len(rels)} relations"
            blocks.append(header + ("\n" + format_relations(rels) if rels else ""))
    text = "\n".join(blocks)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _read_relations(path: str):
    from .relations import parse_relation

    rels = set()
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                try:
                    rels.add(parse_relation(line))
                except ValueError as e:
                    raise InputError(f"{path}:{lineno}: {e}") from None
    except OSError as e:
        raise InputError(str(e)) from None
    return rels


def cmd_relations_verify(args) -> int:
    from .relations import check_R3, verify_profile

    P = _profile(args.profile)
    rels = _read_relations(args.relations) if args.relations else None
    rep = verify_profile(P, rels)
    print(rep)
    ok = rep.ok
    if not args.skip_r3:
        r3 = check_R3(P)
        print(r3)
        ok = ok and r3.ok
    print("pass" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_VIOLATION


def _read_ideal(path: str) -> list:
    try:
        with open(path) as fh:
            return parse_ideal(fh.read())
    except OSError as e:
        raise InputError(str(e)) from None
    except ValueError as e:
        raise InputError(f"{path}: {e}") from None


def cmd_gb(args) -> int:
    gens = _read_ideal(args.ideal)
    try:
        order = MonomialOrder.parse(args.order, args.kind)
        G = buchberger(gens, order)
    except ValueError as e:
        raise InputError(str(e)) from None
    print(format_basis(G))
    if args.compare:
        other = buchberger(_read_ideal(args.compare), G.order)
        same = same_ideal(G, other)
        print(f"same ideal as {args.compare}: {'yes' if same else 'no'}")
        return EXIT_OK if same else EXIT_VIOLATION
    return EXIT_OK


def cmd_mutant_demo(args) -> int:
    from . import mutants

    rep = mutants.run()
    if args.json:
        print(json.dumps({
            "values": {f"{p}:{k}": json.loads(v.to_json()) for (p, k), v in sorted(rep.values.items())},
            "closed_form_match": rep.closed_form_match,
            "power_form_match": rep.power_form_match,
            "witness": str(rep.witness),
            "homflypt_equal": rep.homflypt_equal,
            "separated": rep.separated,
        }, sort_keys=True))
    else:
        print("\n".join(rep.lines()))
    return EXIT_OK if rep.separated else EXIT_VIOLATION


def cmd_rtest(args) -> int:
    from .invariance import Checker, default_moves, minimize, run_suite
    from .moves import MOVE_KINDS

    P = _profile(args.profile)
    if args.trials < 0:
        raise InputError("--trials must be non-negative")
    kinds = tuple(args.moves.split(",")) if args.moves else default_moves(args.type)
    for k in kinds:
        if k not in MOVE_KINDS:
            raise InputError(f"unknown move {k!r}; choose from {', '.join(MOVE_KINDS)}")
    family = "type1" if args.type.startswith("1") else "type2"
    if family != P.family:
        raise InputError(f"profile {P.name} is for {P.family} invariants, not type {args.type}")
    g = _unit_weight if args.type == "2w" else None
    checker = Checker(P, args.type, g)
    rng = random.Random(args.seed)
    failed = False
    for name, d in _diagrams(args):
        rep = run_suite(d, P, args.type, args.trials, rng, kinds=kinds,
                        max_crossings=args.max_crossings, g=g, checker=checker)
        print(f"{name}: {rep.trials} trials, {rep.checks} checks, {len(rep.violations)} violations")
        if rep.violations:
            failed = True
            print(minimize(rep.violations[0], checker, kinds).dump())
    print("FAIL" if failed else "pass")
    return EXIT_VIOLATION if failed else EXIT_OK


# -- parser -----------------------------------------------------------------

def _add_diagram_args(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--pd", help="PD file (one or more diagrams)")
    src.add_argument("--builtin", help=f"built-in diagram: {', '.join(builtin_names())}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skeinring", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", help="evaluate an invariant")
    p.add_argument("--type", choices=("1", "1w", "2", "2w"), default="1")
    p.add_argument("--profile", required=True)
    _add_diagram_args(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-verify", action="store_true", help="skip the relation check on the profile")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("relations-derive", help="derive two-crossing coefficient relations")
    p.add_argument("--case", choices=("0", "1", "2", "3", "4", "5", "all"), default="all")
    p.add_argument("--signs", choices=("++", "+-", "-+", "--", "all"), default="++")
    p.add_argument("--family", choices=("type1", "type2"), default="type1")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_relations_derive)

    p = sub.add_parser("relations-verify", help="check a profile against the relations")
    p.add_argument("--profile", required=True)
    p.add_argument("--relations", help="relation file (one equation per line); default: derived set")
    p.add_argument("--skip-r3", action="store_true", help="skip the unknot relation check")
    p.set_defaults(func=cmd_relations_verify)

    p = sub.add_parser("gb", help="reduced Gröbner basis of an ideal")
    p.add_argument("--ideal", required=True, help="file with one polynomial per line")
    p.add_argument("--order", required=True, help='variable precedence, e.g. "x>y>z"')
    p.add_argument("--kind", choices=("lex", "grevlex"), default="lex")
    p.add_argument("--compare", help="second generator file; report whether the ideals agree")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("mutant-demo", help="compare the Conway and Kinoshita-Terasaka knots")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mutant_demo)

    p = sub.add_parser("rtest", help="randomised invariance checks")
    _add_diagram_args(p)
    p.add_argument("--profile", required=True)
    p.add_argument("--type", choices=("1", "1w", "2", "2w"), default="1")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--moves", help="comma-separated subset of R1,R1-,R2,R3")
    p.add_argument("--max-crossings", type=int, default=7)
    p.set_defaults(func=cmd_rtest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (EvaluationError, ProfileError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
