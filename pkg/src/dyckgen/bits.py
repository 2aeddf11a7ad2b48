"""Dyck words as fixed-width unsigned integers with a loopless successor.

A word of half-length n occupies the low 2n bits of an unsigned value,
most significant bit of the window first, so lexicographic order on
words coincides with numeric order on values. The successor is five
straight-line integer statements, the first two borrowed from Gosper's
hack; minimum and maximum words are built by shifting, never by raising
4 to the n, so nothing overflows a 2n-bit window.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "MAX_HALF_LENGTH",
    "WIDTHS",
    "DyckWord",
    "alternating_constant",
    "check_half_length",
    "enumerate_words",
    "is_dyck",
    "max_value",
    "max_word",
    "min_value",
    "min_word",
    "next_unchecked",
    "next_word",
    "word_width",
]

WIDTHS = (8, 16, 32, 64)
MAX_HALF_LENGTH = 32
ENUMERATION_WARN_N = 20  # Catalan(21) is ~24.5e9 words, a week of CPU


def alternating_constant(width: int) -> int:
    """The alternating-bits mask 0xAA...AA truncated to ``width`` bits.

    Doubles up the 0xAA byte instead of writing one hard-coded literal:
    the same pattern serves every supported width, and it doubles as the
    minimum full-width Dyck word.
    """
    if width not in WIDTHS:
        raise ValueError(f"width must be one of {WIDTHS}, got {width}")
    value = 0xAA
    size = 8
    while size < width:
        value |= value << size
        size *= 2
    return value


_ALTERNATING = {w: alternating_constant(w) for w in WIDTHS}


def check_half_length(n: int) -> None:
    """Raise ValueError unless 1 <= n <= 32 (2n must fit a 64-bit word)."""
    if not 1 <= n <= MAX_HALF_LENGTH:
        raise ValueError(f"half-length must be in 1..{MAX_HALF_LENGTH}, got {n}")


def word_width(n: int) -> int:
    """Smallest supported machine width whose words hold a 2n-bit window."""
    check_half_length(n)
    for width in WIDTHS:
        if 2 * n <= width:
            return width
    raise AssertionError("unreachable: check_half_length caps 2n at 64")


def next_unchecked(w: int, width: int = 64) -> int:
    """Next Dyck word of the same size, assuming one exists.

    The input must be a valid Dyck word that is not the maximum of its
    size; anything else is garbage in, garbage out (no checks at this
    layer, matching the C contract where the negation is 2**width-modular;
    Python's ``w & -w`` isolates the lowest set bit directly). The five
    statements: isolate the lowest set bit, ripple-add it, diff to locate
    the changed run, shrink the run into a 2x-bit mask, then refill the
    tail from the alternating constant. The shift is a logical shift,
    equivalent to truncating division by four.
    """
    a = w & -w
    b = w + a
    c = w ^ b
    c = ((c // a) >> 2) + 1
    return ((c * c - 1) & _ALTERNATING[width]) | b


def is_dyck(value: int, n: int) -> bool:
    """True iff the low 2n bits of ``value`` encode a Dyck word.

    Total function: out-of-range n, negative values, or set bits above
    the window all return False rather than raising.
    """
    if not 1 <= n <= MAX_HALF_LENGTH:
        return False
    if value < 0 or value >> (2 * n):
        return False
    balance = 0
    for pos in range(2 * n - 1, -1, -1):
        balance += 1 if (value >> pos) & 1 else -1
        if balance < 0:
            return False
    return balance == 0


def min_value(n: int) -> int:
    """The alternating word 1010...10 on 2n bits, as a raw integer.

    Built by shifting the pattern in two bits at a time; the closed form
    2/3 * (4**n - 1) is equal but would overflow a fixed-width register
    at n = 32, so it stays out of the construction.
    """
    check_half_length(n)
    value = 0
    for _ in range(n):
        value = (value << 2) | 0b10
    return value


def max_value(n: int) -> int:
    """n ones followed by n zeros, as a raw integer (equals 4**n - 2**n).

    Two single-width shifts; never shifts by the full 2n, which is the
    edge that bites fixed-width registers when 2n equals the word size.
    """
    check_half_length(n)
    return ((1 << n) - 1) << n


@dataclass(frozen=True, slots=True)
class DyckWord:
    """A validated Dyck word: ``value`` holds the 2n-bit window, MSB first."""

    value: int
    n: int

    def __post_init__(self) -> None:
        if not is_dyck(self.value, self.n):
            raise ValueError(
                f"{self.value} is not a Dyck word of half-length {self.n}"
            )

    @classmethod
    def from_bits(cls, text: str) -> DyckWord:
        """Parse an explicit window of '1'/'0' characters, e.g. '101100'."""
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bit window: {text!r}")
        if len(text) % 2:
            raise ValueError(f"bit window must have even length, got {len(text)}")
        return cls(int(text, 2), len(text) // 2)

    @classmethod
    def _trusted(cls, value: int, n: int) -> DyckWord:
        # Fast path for words produced by the successor itself: skips the
        # O(n) revalidation. Safe because the successor of a valid word is
        # valid, which the oracle tests check exhaustively at small n.
        word = object.__new__(cls)
        object.__setattr__(word, "value", value)
        object.__setattr__(word, "n", n)
        return word

    @property
    def bits(self) -> str:
        """The 2n-character window as text, MSB first."""
        return format(self.value, f"0{2 * self.n}b")

    @property
    def width(self) -> int:
        """Smallest supported machine width holding this word."""
        return word_width(self.n)

    def __str__(self) -> str:
        return self.bits


def min_word(n: int) -> DyckWord:
    """The smallest Dyck word of half-length n: 1010...10."""
    return DyckWord(min_value(n), n)


def max_word(n: int) -> DyckWord:
    """The largest Dyck word of half-length n: n ones then n zeros."""
    return DyckWord(max_value(n), n)


def next_word(w: DyckWord) -> DyckWord | None:
    """Checked successor: None when w is the maximum word of its size."""
    if w.value == max_value(w.n):
        return None
    return DyckWord._trusted(next_unchecked(w.value, w.width), w.n)


def enumerate_words(n: int) -> Iterator[DyckWord]:
    """All Dyck words of half-length n in strictly increasing order.

    Starts at min_word(n), ends at max_word(n), and yields exactly
    Catalan(n) words. Large sizes are permitted but warned about; a full
    pass above n = 20 is impractical rather than wrong.
    """
    check_half_length(n)
    if n > ENUMERATION_WARN_N:
        warnings.warn(
            f"enumerating n={n} visits Catalan({n}) words, which is "
            "billions and up; expect this to run practically forever",
            RuntimeWarning,
            stacklevel=2,
        )
    return _generate(n)


def _generate(n: int) -> Iterator[DyckWord]:
    width = word_width(n)
    make = DyckWord._trusted
    value = min_value(n)
    last = max_value(n)
    while value != last:
        yield make(value, n)
        value = next_unchecked(value, width)
    yield make(value, n)
