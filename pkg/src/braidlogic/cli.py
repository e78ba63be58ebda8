"""Command-line front end.

Exit codes: 0 success / equal / equivalent, 1 unequal / distinct / axiom
failure, 2 usage or parse error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import axioms as axioms_mod
from .braids import BraidWord, WidthError, format_word, mirror, parse_word
from .garside import equal, normal_form
from .invariants import alexander, closure_components, exponent_sum, jones, kauffman_bracket
from .markov import (
    Distinct,
    Equivalent,
    SearchBudget,
    format_certificate,
    search_equivalence,
)
from .semantics import evaluate, quote
from .terms import TermSyntaxError, parse_term, render_term

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3

# tests swap this for a faulty model
MODEL_FACTORY = axioms_mod.BraidModel


class UsageError(Exception):
    pass


def _word(term_text: str) -> BraidWord:
    try:
        return evaluate(parse_term(term_text))
    except TermSyntaxError as exc:
        raise UsageError(f"syntax error at offset {exc.offset} in {term_text!r}: {exc.msg}") from None
    except OverflowError as exc:
        raise UsageError(str(exc)) from None


def _default_seed() -> int:
    env = os.environ.get("BRAIDLOGIC_SEED")
    if env is None:
        return axioms_mod.DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"BRAIDLOGIC_SEED must be an integer, got {env!r}") from None


# -- commands: each returns (exit code, output text or JSON-able object) ------


def cmd_eval(term: str):
    return EXIT_OK, format_word(_word(term))


def cmd_quote(word: str):
    try:
        w = parse_word(word)
    except (ValueError, OverflowError) as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK, render_term(quote(w))


def cmd_normalize(term: str, width: int | None = None):
    w = _word(term)
    try:
        nf = normal_form(w, width)
    except WidthError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK, {
        "width": nf.width,
        "infimum": nf.infimum,
        "factors": [list(f) for f in nf.factors],
        "word": format_word(nf.to_word()),
    }


def cmd_eq(t1: str, t2: str):
    same = equal(_word(t1), _word(t2))
    return (EXIT_OK, "equal") if same else (EXIT_NO, "unequal")


def cmd_mirror(term: str, width: int | None = None):
    w = _word(term)
    n = width if width is not None else max(2, w.width)
    try:
        return EXIT_OK, format_word(mirror(w, n))
    except WidthError as exc:
        raise UsageError(str(exc)) from None


def cmd_markov(
    t1: str,
    t2: str,
    budget: SearchBudget | None = None,
    as_json: bool = False,
    certificate_path: str | None = None,
):
    a, b = _word(t1), _word(t2)
    verdict = search_equivalence(a, b, budget or SearchBudget())
    if isinstance(verdict, Equivalent):
        cert = verdict.certificate
        if certificate_path:
            with open(certificate_path, "w", encoding="utf-8") as fh:
                fh.write(format_certificate(cert))
        if as_json:
            return EXIT_OK, {
                "verdict": "Equivalent",
                "moves": len(cert),
                "certificate": format_certificate(cert),
            }
        noun = "move" if len(cert) == 1 else "moves"
        return EXIT_OK, f"Equivalent ({len(cert)} {noun})\n" + format_certificate(cert).rstrip("\n")
    if isinstance(verdict, Distinct):
        if as_json:
            return EXIT_NO, {
                "verdict": "Distinct",
                "invariant": verdict.invariant,
                "left": str(verdict.left),
                "right": str(verdict.right),
            }
        return EXIT_NO, f"Distinct ({verdict.invariant}): {verdict.left}  vs  {verdict.right}"
    if as_json:
        return EXIT_UNKNOWN, {"verdict": "Unknown", "reason": verdict.reason, "states": verdict.states}
    return EXIT_UNKNOWN, f"Unknown: {verdict.reason} ({verdict.states} states)"


def cmd_invariants(term: str, which: Sequence[str] = (), width: int | None = None):
    w = _word(term)
    which = list(which) or ["components", "writhe", "alexander", "jones"]
    out: dict[str, object] = {}
    try:
        for name in which:
            if name == "components":
                out["components"] = closure_components(w, width)
            elif name == "writhe":
                out["writhe"] = exponent_sum(w)
            elif name == "alexander":
                out["alexander"] = str(alexander(w, width))
            elif name == "jones":
                out["jones"] = str(jones(w, width))
            elif name == "bracket":
                out["bracket"] = str(kauffman_bracket(w, width, method="transfer"))
    except WidthError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK, out


def cmd_axioms(seed: int | None = None, cases: int = 1000):
    seed = _default_seed() if seed is None else seed
    if cases < 1:
        raise UsageError("--cases must be at least 1")
    reports = axioms_mod.run_suite(seed, cases, MODEL_FACTORY())
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_NO
    return code, [r.to_json() for r in reports]


def cmd_batch(path: str, command: str, budget: SearchBudget | None = None):
    """One term (or ``;``-separated pair) per line; yields JSON-lines records."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    worst = EXIT_OK
    records = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        args = [part.strip() for part in line.split(";")]
        try:
            if command == "eval":
                code, result = cmd_eval(*args)
            elif command == "eq":
                code, result = cmd_eq(*args)
            elif command == "markov":
                code, result = cmd_markov(*args, budget=budget, as_json=True)
            else:
                code, result = cmd_invariants(args[0])
        except (UsageError, TypeError) as exc:
            code, result = EXIT_USAGE, {"error": str(exc)}
        worst = max(worst, code)
        records.append({"line": lineno, "input": args, "exit": code, "result": result})
    return worst, records


# -- argument parsing ---------------------------------------------------------


def _add_budget(p: argparse.ArgumentParser) -> None:
    d = SearchBudget()
    p.add_argument("--max-depth", type=int, default=d.max_depth)
    p.add_argument("--max-len", type=int, default=d.max_word_length)
    p.add_argument("--max-width", type=int, default=d.max_width)
    p.add_argument("--max-states", type=int, default=d.max_states)


def _budget(args) -> SearchBudget:
    try:
        return SearchBudget(args.max_depth, args.max_len, args.max_width, args.max_states)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidlogic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a term to a braid word")
    p.add_argument("term")

    p = sub.add_parser("quote", help="turn a braid word such as '1 2 -1' into a term")
    p.add_argument("word")

    p = sub.add_parser("normalize", help="Garside normal form of a term")
    p.add_argument("term")
    p.add_argument("--width", type=int)

    p = sub.add_parser("eq", help="decide equality in B∞")
    p.add_argument("t1")
    p.add_argument("t2")

    p = sub.add_parser("markov", help="search for a stable equivalence")
    p.add_argument("t1")
    p.add_argument("t2")
    _add_budget(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--certificate", metavar="FILE", help="write the certificate here")

    p = sub.add_parser("invariants", help="closure invariants as JSON")
    p.add_argument("term")
    for flag in ("components", "writhe", "alexander", "jones", "bracket"):
        p.add_argument(f"--{flag}", action="append_const", const=flag, dest="which")
    p.add_argument("--width", type=int)

    p = sub.add_parser("mirror", help="rotate a braid: σ_i ↦ σ_{n-i}")
    p.add_argument("term")
    p.add_argument("--width", type=int)

    p = sub.add_parser("axioms", help="run the link-axiom suite")
    p.add_argument("--seed", type=int)
    p.add_argument("--cases", type=int, default=1000)

    p = sub.add_parser("batch", help="run a command over a file, JSON-lines out")
    p.add_argument("file")
    p.add_argument("--command", dest="batch_command", choices=("eval", "eq", "markov", "invariants"),
                   default="eval")
    _add_budget(p)
    return parser


def _emit(result) -> None:
    if isinstance(result, (dict, list)):
        print(json.dumps(result, sort_keys=True))
    else:
        print(result)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "eval":
            code, out = cmd_eval(args.term)
        elif args.command == "quote":
            code, out = cmd_quote(args.word)
        elif args.command == "normalize":
            code, out = cmd_normalize(args.term, args.width)
        elif args.command == "eq":
            code, out = cmd_eq(args.t1, args.t2)
        elif args.command == "mirror":
            code, out = cmd_mirror(args.term, args.width)
        elif args.command == "markov":
            code, out = cmd_markov(args.t1, args.t2, _budget(args), args.json, args.certificate)
        elif args.command == "invariants":
            code, out = cmd_invariants(args.term, args.which or (), args.width)
        elif args.command == "axioms":
            code, out = cmd_axioms(args.seed, args.cases)
        elif args.command == "batch":
            code, records = cmd_batch(args.file, args.batch_command, _budget(args))
            for rec in records:
                print(json.dumps(rec, sort_keys=True))
            return code
        else:  # pragma: no cover - argparse rejects unknown commands
            raise UsageError(f"unknown command {args.command}")
    except UsageError as exc:
        print(f"braidlogic: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
