"""``focuslog``: parse sentences with focus markers and print their analyses.

Exit status is 0 when every input parsed, 1 when some input had no parse or
an unknown word, and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import TextIO

from .entailment import derive, note
from .errors import FocuslogError, FootClash, LexiconError, NoParse, NotFocusable, UnknownWord
from .grammar import Lexicon, bundled_lexicon, load_lexicon_file
from .logic import FORMATS, canonical_names, pretty, reset_fresh
from .parser import parse_with_chart, tokenize

EXIT_OK, EXIT_NO_PARSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def build_argparser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="focuslog",
        description="Logical forms for sentences with focus; mark focus as *word*.",
    )
    p.add_argument("sentence", nargs="?", help="sentence to parse (batch mode: input file)")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--entail", action="store_true", help="print meaning-postulate consequences")
    p.add_argument("--show-store", action="store_true", help="print the quantifier store and matrix")
    p.add_argument("--show-chart", action="store_true", help="print every chart edge")
    p.add_argument("--first", action="store_true", help="print only the first analysis")
    p.add_argument("--lexicon", metavar="PATH", help="lexicon file (default: bundled fragment)")
    p.add_argument("--batch", action="store_true", help="one sentence per input line")
    return p


def _render(term, fmt: str) -> str:
    text = pretty(canonical_names(term), fmt)
    return f"${text}$" if fmt == "latex" else text


def _check_sentence(sentence: str) -> None:
    if not sentence.strip():
        raise UsageError("empty sentence")
    try:
        _, marks = tokenize(sentence)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(marks) > 1:
        raise UsageError("at most one focus marker per sentence")


def report(sentence: str, lexicon: Lexicon, args, out: TextIO) -> int:
    """Print the analyses of one sentence; return its exit status."""
    _check_sentence(sentence)
    reset_fresh()
    try:
        found, chart = parse_with_chart(sentence, lexicon)
    except (NoParse, UnknownWord, NotFocusable, FootClash) as exc:
        print(f"error: {exc}", file=out)
        return EXIT_NO_PARSE
    if args.show_chart:
        print(f"chart: {len(chart.edges())} edges", file=out)
        for e in chart.edges():
            print(f"  [{e.start},{e.end}] {e.sign.category} {e.sign.trace}", file=out)
    if args.first:
        found = found[:1]
    fmt = args.format
    for i, a in enumerate(found, 1):
        print(f"analysis {i}: {_render(a.formula, fmt)}", file=out)
        if args.show_store and a.sign is not None:
            print(f"  matrix: {_render(a.sign.sem, fmt)}", file=out)
            for e in a.sign.store:
                print(f"  store: {e.to_sexpr()}", file=out)
        if a.focus_residue is not None:
            item = a.focus_residue.item
            print(f"  focus: {item.word} {item.category} {_render(item.sem, fmt)}", file=out)
        if args.entail:
            cons = derive(a)
            for c in cons:
                print(f"  {c.label}: {_render(c.formula, fmt)}", file=out)
            if not cons:
                print(f"  {note(a)}", file=out)
    return EXIT_OK


def _read_batch(args, stdin: TextIO) -> list[str]:
    if args.sentence is not None:
        with open(args.sentence, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = stdin.read()
    return [line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")]


def run(argv: list[str] | None = None, stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_argparser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    try:
        lexicon = load_lexicon_file(args.lexicon) if args.lexicon else bundled_lexicon()
    except OSError as exc:
        print(f"focuslog: cannot read lexicon: {exc}", file=err)
        return EXIT_USAGE
    except LexiconError as exc:
        print(f"focuslog: bad lexicon: {exc}", file=err)
        return EXIT_USAGE

    try:
        if args.batch:
            sentences = _read_batch(args, stdin)
        elif args.sentence is not None:
            sentences = [args.sentence]
        else:
            sentences = [stdin.read().strip()]
    except OSError as exc:
        print(f"focuslog: {exc}", file=err)
        return EXIT_USAGE

    status = EXIT_OK
    try:
        for n, sentence in enumerate(sentences, 1):
            if args.batch:
                print(f"## {n}: {sentence}", file=out)
            status = max(status, report(sentence, lexicon, args, out))
    except UsageError as exc:
        print(f"focuslog: {exc}", file=err)
        return EXIT_USAGE
    except FocuslogError as exc:
        print(f"focuslog: {exc}", file=err)
        return EXIT_NO_PARSE
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
