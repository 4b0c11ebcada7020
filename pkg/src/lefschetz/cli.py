"""Command-line interface.

Subcommands: analyze, generate, sum, check, selftest.  Machine output goes
to stdout, diagnostics to stderr.  Exit codes: 0 all verdicts pass, 2 some
verdict failed, 1 the input could not be used at all.
"""

from __future__ import annotations

import argparse
import sys

from . import families
from .moduli_invariants import (
    divisibility_verdict,
    full_report,
    torelli_check,
    word_stats,
)
from .monodromy import Word, check_global_relation
from .reporting import render_csv, render_json, render_text
from .word_dsl import ParseError, parse, serialize

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FAIL = 2


class _ArgumentParser(argparse.ArgumentParser):
    # usage problems are input errors: exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="lefschetz",
        description="Invariants of Lefschetz fibrations over the sphere, "
        "given as positive words of Dehn twists (.lfw files).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="full invariant report for a word file")
    analyze.add_argument("file", help="input .lfw file")
    analyze.add_argument("--format", choices=("json", "csv", "text"), default="json")
    analyze.add_argument(
        "--assume-hyperelliptic",
        action="store_true",
        help="also check the hyperelliptic signature equality",
    )
    analyze.add_argument(
        "--figure",
        metavar="PATH",
        help="also render a summary figure to this file (png/pdf/svg by suffix)",
    )

    generate = sub.add_parser("generate", help="write a named family as a word file")
    generate.add_argument("--family", required=True, choices=("A", "B", "C", "H", "E"))
    generate.add_argument("--genus", type=int, help="required for H; fixed otherwise")
    generate.add_argument("--power", type=int, default=1, help="repeat the word this many times")
    generate.add_argument("-o", "--output", help="output file (default stdout)")

    sum_cmd = sub.add_parser("sum", help="fibre sum: concatenate two word files")
    sum_cmd.add_argument("file1")
    sum_cmd.add_argument("file2")
    sum_cmd.add_argument("-o", "--output", help="output file (default stdout)")

    check = sub.add_parser(
        "check", help="fast verdicts only: relation, divisibility, Torelli"
    )
    check.add_argument("file", help="input .lfw file")

    sub.add_parser("selftest", help="verify the built-in fixture table")
    return parser


def _read_word(path: str) -> Word:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SystemExit(_input_error(f"cannot read {path}: {exc.strerror or exc}"))
    try:
        return parse(text)
    except ParseError as exc:
        raise SystemExit(_input_error(f"{path}: {exc}"))


def _input_error(message: str) -> int:
    print(message, file=sys.stderr)
    return EXIT_INPUT


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_analyze(args) -> int:
    word = _read_word(args.file)
    report = full_report(word, assume_hyperelliptic=args.assume_hyperelliptic)
    renderer = {"json": render_json, "csv": render_csv, "text": render_text}[args.format]
    sys.stdout.write(renderer(report))
    if args.figure:
        from .figures import render_report_figure

        render_report_figure(report, args.figure)
    return EXIT_OK if report.all_passed else EXIT_FAIL


def _cmd_generate(args) -> int:
    family, genus = args.family, args.genus
    try:
        if family in ("A", "B", "C"):
            if genus not in (None, 2):
                return _input_error(f"family {family} is a genus-2 word, got --genus {genus}")
            word = {"A": families.word_A, "B": families.word_B, "C": families.word_C}[family]()
        elif family == "H":
            if genus is None:
                return _input_error("family H needs --genus")
            word = families.hyperelliptic_word(genus)
        else:  # E
            if genus not in (None, 1):
                return _input_error(f"family E is a genus-1 word, got --genus {genus}")
            word = families.genus1_word(args.power)
        if family != "E" and args.power != 1:
            word = families.word_power(word, args.power)
    except ValueError as exc:
        return _input_error(str(exc))
    _write_output(serialize(word), args.output)
    return EXIT_OK


def _cmd_sum(args) -> int:
    w1 = _read_word(args.file1)
    w2 = _read_word(args.file2)
    try:
        combined = families.fibre_sum(w1, w2)
    except ValueError as exc:
        return _input_error(str(exc))
    _write_output(serialize(combined), args.output)
    return EXIT_OK


def _cmd_check(args) -> int:
    word = _read_word(args.file)
    stats = word_stats(word)
    relation = check_global_relation(word)
    verdicts = [
        ("global_relation", relation.passed, "monodromy product is the identity"
         if relation.passed else "monodromy product is not the identity"),
    ]
    div = divisibility_verdict(stats.genus, stats.nonseparating, stats.separating)
    verdicts.append((div.name, div.passed, div.detail))
    tor = torelli_check(word)
    verdicts.append((tor.name, tor.passed, tor.detail))
    for name, passed, detail in verdicts:
        print(f"{'Pass' if passed else 'Fail'} {name}: {detail}")
    return EXIT_OK if all(p for _, p, _ in verdicts) else EXIT_FAIL


# expected analyze results for the built-in fixtures:
# (twists, sigma, chi, hodge degree, wp pairing, double-cover parity)
_SELFTEST_ROWS = (
    ("A", lambda: families.word_A(), 20, -12, 16, 2, 4, "even"),
    ("B", lambda: families.word_B(), 30, -18, 26, 3, 6, "odd"),
    ("C", lambda: families.word_C(), 40, -24, 36, 4, 8, "even"),
    ("E(1)", lambda: families.genus1_word(1), 12, -8, 12, 1, 0, None),
    ("H(3)", lambda: families.hyperelliptic_word(3), 56, -32, 48, 6, 16, None),
)


def _cmd_selftest(_args) -> int:
    ok = True
    for name, make, twists, sigma, chi, hodge, wp, base in _SELFTEST_ROWS:
        report = full_report(make())
        got = (
            report.stats.twist_count,
            report.sigma,
            report.chi,
            report.hodge_degree,
            report.wp_pairing,
            report.double_cover_base,
        )
        want = (twists, sigma, chi, hodge, wp, base)
        row_ok = got == want
        ok = ok and row_ok
        print(
            f"{'Pass' if row_ok else 'Fail'} {name}: twists={got[0]} sigma={got[1]} "
            f"chi={got[2]} hodge={got[3]} wp={got[4]} base={got[5]}"
            + ("" if row_ok else f" (expected {want})")
        )
    return EXIT_OK if ok else EXIT_FAIL


def main(argv=None) -> int:
    handlers = {
        "analyze": _cmd_analyze,
        "generate": _cmd_generate,
        "sum": _cmd_sum,
        "check": _cmd_check,
        "selftest": _cmd_selftest,
    }
    try:
        args = _build_parser().parse_args(argv)
        return handlers[args.command](args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
