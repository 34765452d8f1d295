"""Command-line front end.

Subcommands: convert (automaton to single-state automaton or grammar), run
(simulate a string), member (grammar membership), enum (bounded language
listing), check (differential comparison of the conversion routes), and
stats (construction size accounting).

Exit codes: 0 success (for run/member: the string is accepted), 1 rejected
or mismatches found, 2 inconclusive, 64 usage error, 65 parse or validation
error.  Diagnostics go to stderr; payload goes to stdout, and nothing is
written on a parse error.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from .engine import Limits, accepts, cfg_member, enumerate_language
from .grammar import classical_pda_to_cfg, pda_to_cfg, prune_useless, sspda_to_cfg
from .harness import differential_check
from .model import Cfg
from .singlestate import size_stats, to_single_state
from .textio import ParseError, parse_cfg, parse_pda, parse_source, render

EXIT_OK = 0
EXIT_NO = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_DATA = 65


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want 64
        raise _UsageError(message)


def _add_limit_flags(parser):
    parser.add_argument("--max-configs", type=int, default=100_000,
                        help="simulator configuration budget (default 100000)")
    parser.add_argument("--max-depth", type=int, default=64,
                        help="simulator stack depth bound (default 64)")


def build_parser() -> _Parser:
    parser = _Parser(prog="pdacfg",
                     description="Pushdown automata to grammars, with checking tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("convert", help="convert an automaton file")
    p.add_argument("input", help="multistate PDA file")
    p.add_argument("--stage", choices=("sspda", "cfg"), default="cfg",
                   help="emit the single-state automaton or the grammar (default cfg)")
    p.add_argument("--prune", action="store_true",
                   help="drop useless grammar symbols (cfg stage only)")
    p.add_argument("--classical", action="store_true",
                   help="use the direct one-step construction (cfg stage only)")
    p.add_argument("--verbose", action="store_true",
                   help="annotate output with provenance comments")
    p.add_argument("-o", "--output", help="output file (default stdout)")

    p = sub.add_parser("run", help="simulate an automaton on a string")
    p.add_argument("pda", help="PDA file (multistate or single-state)")
    p.add_argument("string", help="query string; one character per input symbol")
    _add_limit_flags(p)

    p = sub.add_parser("member", help="grammar membership for a string")
    p.add_argument("cfg", help="grammar file")
    p.add_argument("string", help="query string")

    p = sub.add_parser("enum", help="list the bounded language of a file")
    p.add_argument("source", help="PDA, single-state PDA, or grammar file")
    p.add_argument("--max-len", type=int, required=True, help="length bound")
    _add_limit_flags(p)

    p = sub.add_parser("check", help="differential-check the conversion routes")
    p.add_argument("pda", help="multistate PDA file")
    p.add_argument("--max-len", type=int, default=6, help="length bound (default 6)")
    p.add_argument("--classical", action="store_true",
                   help="also compare against the direct one-step construction")
    _add_limit_flags(p)

    p = sub.add_parser("stats", help="construction size accounting")
    p.add_argument("pda", help="multistate PDA file")
    return parser


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_automaton(path: str):
    source = parse_source(_read(path))
    if isinstance(source, Cfg):
        raise ValueError(f"{path} holds a grammar; this command needs an automaton")
    return source


def _emit(payload: str, output) -> None:
    if output:
        Path(output).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def _cmd_convert(args) -> int:
    if args.stage == "sspda" and (args.prune or args.classical):
        raise _UsageError("--prune and --classical apply only to --stage cfg")
    pda = parse_pda(_read(args.input))
    if args.stage == "sspda":
        payload = render(to_single_state(pda), verbose=args.verbose)
    else:
        cfg = classical_pda_to_cfg(pda) if args.classical else pda_to_cfg(pda)
        if args.prune:
            cfg = prune_useless(cfg)
        payload = render(cfg, verbose=args.verbose)
    _emit(payload, args.output)
    return EXIT_OK


def _cmd_run(args) -> int:
    automaton = _load_automaton(args.pda)
    limits = Limits(args.max_configs, args.max_depth)
    verdict = accepts(automaton, args.string, limits)
    if verdict.is_accepted:
        for i, move in enumerate(verdict.witness, start=1):
            print(f"{i}: {move}")
        return EXIT_OK
    if verdict.is_rejected:
        print("rejected", file=sys.stderr)
        return EXIT_NO
    print(f"inconclusive: {verdict.reason} limit hit", file=sys.stderr)
    return EXIT_INCONCLUSIVE


def _cmd_member(args) -> int:
    cfg = parse_cfg(_read(args.cfg))
    if cfg_member(cfg, args.string):
        print("member", file=sys.stderr)
        return EXIT_OK
    print("not a member", file=sys.stderr)
    return EXIT_NO


def _cmd_enum(args) -> int:
    source = parse_source(_read(args.source))
    limits = Limits(args.max_configs, args.max_depth)
    members, complete = enumerate_language(source, args.max_len, limits)
    payload = "".join(
        w + "\n" for w in sorted(members, key=lambda w: (len(w), w)))
    _emit(payload, None)
    if not complete:
        print("incomplete: some verdicts were inconclusive", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_check(args) -> int:
    pda = parse_pda(_read(args.pda))
    limits = Limits(args.max_configs, args.max_depth)
    sspda = to_single_state(pda)
    sources = [("pda", pda), ("sspda", sspda), ("cfg", sspda_to_cfg(sspda))]
    if args.classical:
        sources.append(("classical", classical_pda_to_cfg(pda)))
    report = differential_check(sources, pda.input_alphabet, args.max_len, limits)
    print(report.table())
    if report.mismatches:
        return EXIT_NO
    if report.inconclusive_strings:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_stats(args) -> int:
    stats = size_stats(parse_pda(_read(args.pda)))
    for field in dataclasses.fields(stats):
        print(f"{field.name}={getattr(stats, field.name)}")
    return EXIT_OK


_COMMANDS = {
    "convert": _cmd_convert,
    "run": _cmd_run,
    "member": _cmd_member,
    "enum": _cmd_enum,
    "check": _cmd_check,
    "stats": _cmd_stats,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DATA
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DATA


def app() -> None:
    raise SystemExit(main())
