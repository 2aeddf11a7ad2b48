"""Command line surface: enumerate, advance, validate, count and render.

Exit codes are part of the contract: 0 success, 1 "no result" (a maximal
word for ``next``, an invalid word for ``validate``), 2 bad input or bad
arguments, 3 output I/O failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from itertools import islice

from .analysis import catalan
from .bits import (
    MAX_HALF_LENGTH,
    enumerate_words,
    max_value,
    next_unchecked,
    word_width,
)
from .oracle import brute_force_all
from .paths import MAX_RENDER_N, render_grid
from .strings import BITS, PARENS, SymbolPair

MAX_COUNT_N = 34  # documented cap so scripted callers fit results in 64 bits

PUBLIC_COMMANDS = "{enum,next,count,validate,render}"


@dataclass(frozen=True)
class WordFormat:
    """How words are read and printed.

    kind is one of "bits", "parens", "custom" or "int"; symbol kinds carry
    the pair of characters standing in for one and zero.
    """

    kind: str
    symbols: SymbolPair | None = None


def parse_format(spec: str) -> WordFormat:
    """Parse a --format value: bits | parens | int | custom:<one><zero>."""
    if spec == "bits":
        return WordFormat("bits", BITS)
    if spec == "parens":
        return WordFormat("parens", PARENS)
    if spec == "int":
        return WordFormat("int")
    if spec.startswith("custom:"):
        symbols = spec[len("custom:") :]
        if len(symbols) != 2:
            raise ValueError(
                f"custom format needs exactly two symbols, got {symbols!r}"
            )
        return WordFormat("custom", SymbolPair(symbols[0], symbols[1]))
    raise ValueError(f"unknown format {spec!r}")


def format_value(value: int, n: int, fmt: WordFormat) -> str:
    """Render the 2n-bit window of ``value`` in the requested format."""
    if fmt.kind == "int":
        return str(value)
    window = format(value, f"0{2 * n}b")
    if fmt.symbols == BITS:
        return window
    return window.translate(
        {ord("1"): fmt.symbols.one, ord("0"): fmt.symbols.zero}
    )


class WordParseError(ValueError):
    """Input text does not even parse under the requested format."""


def parse_window(text: str, fmt: WordFormat) -> str:
    """Turn input text into an explicit '1'/'0' window.

    Raises WordParseError when the text is not well formed under the
    format. The window may still fail validation (odd length, prefix
    violations); that is the caller's concern.
    """
    if not text:
        raise WordParseError("empty word")
    if fmt.kind == "int":
        if not text.isdigit():
            raise WordParseError(f"not an unsigned decimal integer: {text!r}")
        value = int(text)
        # Minimal window: a valid word always has its top window bit set,
        # so any leading-zero reading would fail validation anyway.
        return format(value, "b") if value else "0"
    one, zero = fmt.symbols.one, fmt.symbols.zero
    window = []
    for ch in text:
        if ch == one:
            window.append("1")
        elif ch == zero:
            window.append("0")
        else:
            raise WordParseError(
                f"character {ch!r} is neither {one!r} nor {zero!r}"
            )
    return "".join(window)


def diagnose_window(window: str) -> str | None:
    """None when the window encodes a Dyck word, else a diagnostic.

    Prefix violations are reported at the first offending position,
    1-based from the most significant end.
    """
    if len(window) % 2:
        return f"odd length {len(window)}"
    ones = 0
    zeros = 0
    for position, ch in enumerate(window, start=1):
        if ch == "1":
            ones += 1
        else:
            zeros += 1
        if zeros > ones:
            return f"prefix violation at position {position}"
    if ones != zeros:
        return f"unbalanced word: {ones} ones, {zeros} zeros"
    return None


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def cmd_enum(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= MAX_HALF_LENGTH:
        return _fail(f"--n must be in 1..{MAX_HALF_LENGTH}, got {args.n}", 2)
    if args.limit is not None and args.limit < 0:
        return _fail(f"--limit must be nonnegative, got {args.limit}", 2)
    words = enumerate_words(args.n)
    if args.limit is not None:
        words = islice(words, args.limit)
    for word in words:
        print(format_value(word.value, word.n, args.format))
    return 0


def cmd_next(args: argparse.Namespace) -> int:
    try:
        window = parse_window(args.word, args.format)
    except WordParseError as exc:
        return _fail(str(exc), 2)
    diagnostic = diagnose_window(window)
    if diagnostic is not None:
        return _fail(diagnostic, 2)
    n = len(window) // 2
    if n > MAX_HALF_LENGTH:
        return _fail(f"word exceeds the 64-bit window (n={n})", 2)
    value = int(window, 2)
    if value == max_value(n):
        return 1  # maximal word: nothing to print, like the string clear
    successor = next_unchecked(value, word_width(n))
    print(format_value(successor, n, args.format))
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    if not 0 <= args.n <= MAX_COUNT_N:
        return _fail(f"--n must be in 0..{MAX_COUNT_N}, got {args.n}", 2)
    print(catalan(args.n))
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        window = parse_window(args.word, args.format)
    except WordParseError as exc:
        return _fail(str(exc), 2)
    diagnostic = diagnose_window(window)
    if diagnostic is not None:
        return _fail(diagnostic, 1)
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= MAX_RENDER_N:
        return _fail(f"--n must be in 1..{MAX_RENDER_N} for rendering", 2)
    try:
        with open(args.output, "wb") as sink:
            render_grid(args.n, sink)
    except OSError as exc:
        return _fail(f"cannot write {args.output}: {exc}", 3)
    print(catalan(args.n), file=sys.stderr)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    # Hidden debugging aid: the brute-force reference list.
    try:
        values = brute_force_all(args.n)
    except ValueError as exc:
        return _fail(str(exc), 2)
    for value in values:
        print(format_value(value, args.n, args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyckgen",
        description="Generate Dyck words of a fixed size in increasing order.",
    )
    commands = parser.add_subparsers(
        dest="command", required=True, metavar=PUBLIC_COMMANDS
    )

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            type=parse_format,
            default=parse_format("bits"),
            help="bits | parens | int | custom:<one><zero> (default: bits)",
        )

    enum = commands.add_parser(
        "enum", help="print all words of half-length N in increasing order"
    )
    enum.add_argument("--n", type=int, required=True, help="half-length, 1..32")
    add_format(enum)
    enum.add_argument("--limit", type=int, help="stop after this many words")
    enum.set_defaults(handler=cmd_enum)

    nxt = commands.add_parser(
        "next", help="print the successor of WORD, or exit 1 at the maximum"
    )
    nxt.add_argument("word")
    add_format(nxt)
    nxt.set_defaults(handler=cmd_next)

    count = commands.add_parser(
        "count", help="print the number of words of half-length N"
    )
    count.add_argument("--n", type=int, required=True, help="half-length, 0..34")
    count.set_defaults(handler=cmd_count)

    validate = commands.add_parser(
        "validate", help="exit 0 iff WORD is a Dyck word (1 invalid, 2 unparseable)"
    )
    validate.add_argument("word")
    add_format(validate)
    validate.set_defaults(handler=cmd_validate)

    render = commands.add_parser(
        "render", help="write an SVG sheet of all grid paths of size N"
    )
    render.add_argument("--n", type=int, required=True, help="grid size, 1..8")
    render.add_argument("-o", "--output", required=True, help="output SVG path")
    render.set_defaults(handler=cmd_render)

    oracle = commands.add_parser("oracle")  # hidden: brute-force reference
    oracle.add_argument("--n", type=int, required=True)
    add_format(oracle)
    oracle.set_defaults(handler=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except BrokenPipeError:
        # Downstream consumer (head, etc.) closed the stream; not an error.
        return 0


if __name__ == "__main__":
    sys.exit(main())
