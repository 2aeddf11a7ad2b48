"""In-place successor on Dyck words kept as mutable symbol sequences.

Works over any two distinct single-character symbols, for example '(' and
')'. One backward scan finds the rewrite point, one forward pass rewrites
to the end, so a call touches each position at most twice and allocates
no auxiliary sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import MutableSequence

__all__ = [
    "BITS",
    "PARENS",
    "DyckString",
    "SymbolPair",
    "is_dyck_text",
    "next_in_place",
    "next_string",
]


@dataclass(frozen=True)
class SymbolPair:
    """The two characters playing the roles of one and zero."""

    one: str
    zero: str

    def __post_init__(self) -> None:
        if len(self.one) != 1 or len(self.zero) != 1:
            raise ValueError("symbols must be single characters")
        if self.one == self.zero:
            raise ValueError("symbols must be distinct")


BITS = SymbolPair("1", "0")
PARENS = SymbolPair("(", ")")


def is_dyck_text(text, symbols: SymbolPair = BITS) -> bool:
    """Prefix-count check over a character sequence; '' counts as valid."""
    if len(text) % 2:
        return False
    balance = 0
    for ch in text:
        if ch == symbols.one:
            balance += 1
        elif ch == symbols.zero:
            balance -= 1
        else:
            return False
        if balance < 0:
            return False
    return balance == 0


def next_in_place(w: MutableSequence[str], symbols: SymbolPair = BITS) -> None:
    """Advance w to its successor in place; clear it when none exists.

    w must already be a Dyck word over the given symbols. That is not
    checked here: garbage in, garbage out, in exchange for never paying a
    validation pass. The backward scan guard ``i > 0`` is enough because a
    Dyck word never starts with a zero, so the rewritten position is at
    least the second one.
    """
    one = symbols.one
    zero = symbols.zero
    if one == zero:
        raise ValueError("symbols must be distinct")
    m = len(w) - 1
    y = 0  # trailing zeros scanned so far
    x = 0  # ones sitting between the trailing zeros and the rewrite point
    i = m
    while i > 0:
        if w[i] == zero:
            y += 1
        elif w[i - 1] == zero:
            # Greatest position holding a zero directly before a one:
            # swap the pair, then rebuild everything to its right as
            # y - x zeros followed by alternating one-zero pairs.
            w[i - 1] = one
            w[i] = zero
            for _ in range(y - x):
                i += 1
                w[i] = zero
            while i < m:
                i += 1
                w[i] = one
                i += 1
                w[i] = zero
            return
        else:
            x += 1
        i -= 1
    w.clear()  # maximum word: no successor of this size


def next_string(text: str, symbols: SymbolPair = BITS) -> str | None:
    """Checked, non-mutating successor; None when text is the maximum word.

    Unlike the in-place primitive this validates its input up front and
    raises ValueError on anything that is not a Dyck word over the given
    symbols. The empty word is treated as already maximal.
    """
    if not is_dyck_text(text, symbols):
        raise ValueError(
            f"{text!r} is not a Dyck word over "
            f"{symbols.one!r}/{symbols.zero!r}"
        )
    buffer = list(text)
    next_in_place(buffer, symbols)
    return "".join(buffer) if buffer else None


@dataclass(frozen=True)
class DyckString:
    """A validated Dyck word in symbol form, carrying its own alphabet."""

    text: str
    symbols: SymbolPair = BITS

    def __post_init__(self) -> None:
        if not is_dyck_text(self.text, self.symbols):
            raise ValueError(
                f"{self.text!r} is not a Dyck word over "
                f"{self.symbols.one!r}/{self.symbols.zero!r}"
            )

    @property
    def n(self) -> int:
        return len(self.text) // 2

    def successor(self) -> DyckString | None:
        """The next word over the same alphabet, or None at the maximum."""
        advanced = next_string(self.text, self.symbols)
        if advanced is None:
            return None
        return DyckString(advanced, self.symbols)
