"""Nearly-divisionless uniform integers in [0, b) from random words.

The core trick: multiply a random L-bit word by the bound b and split the
product into (hi, lo). Whenever lo clears the rejection threshold
2**L mod b, hi is exactly uniform on [0, b). The threshold itself is only
needed when lo < b, so the common case costs one multiplication and no
division at all.

Word width is a parameter so that small widths (4, 8, 16 bits) can be
verified exhaustively; production callers use 64.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import BoundOverflow
from .wordsource import WordSource


class FullProduct(NamedTuple):
    """Exact double-width product split as hi * 2**bits + lo."""

    hi: int
    lo: int


def mul_full(a: int, b: int, bits: int = 64) -> FullProduct:
    """Full-width multiply of two words: the exact product as a (hi, lo) pair."""
    p = a * b
    return FullProduct(p >> bits, p & ((1 << bits) - 1))


@dataclass(frozen=True)
class BoundEncoding:
    """A bound b with 1 <= b <= 2**bits, stored as b mod 2**bits.

    The full range b = 2**bits is raw 0 plus a flag, so the wrapping-negation
    threshold formula needs no special case for it.
    """

    raw: int
    is_full_range: bool
    bits: int

    @classmethod
    def of(cls, bound: int, bits: int = 64) -> "BoundEncoding":
        if not 1 <= bound <= 1 << bits:
            raise BoundOverflow(f"bound {bound} not in [1, 2**{bits}]")
        full = bound == 1 << bits
        return cls(0 if full else bound, full, bits)

    @property
    def value(self) -> int:
        return (1 << self.bits) if self.is_full_range else self.raw


def threshold(bound: BoundEncoding) -> int:
    """Rejection threshold 2**bits mod b, via wrapping negation of the bound."""
    neg = (-bound.raw) & ((1 << bound.bits) - 1)
    return neg % bound.value


class RollOutcome(NamedTuple):
    """A bounded draw plus the words it consumed and remainders it computed."""

    value: int
    words_consumed: int
    remainder_ops: int


def roll_single_traced(source: WordSource, bound) -> RollOutcome:
    """Uniform integer in [0, bound) with draw and division instrumentation.

    ``bound`` may be a plain int (width taken from the source) or a
    BoundEncoding. The remainder is computed at most once, and only when the
    first multiply's low word falls below the bound; rejected draws reuse it.
    """
    if isinstance(bound, BoundEncoding):
        bits = bound.bits
        b = bound.value
    else:
        bits = source.word_bits
        b = bound
        if not 1 <= b <= 1 << bits:
            raise BoundOverflow(f"bound {b} not in [1, 2**{bits}]")
    mask = (1 << bits) - 1
    p = b * source.next_word()
    lo = p & mask
    if lo >= b:
        return RollOutcome(p >> bits, 1, 0)
    t = ((mask + 1) - b) % b  # 2**bits mod b; the only remainder operation
    words = 1
    while lo < t:
        p = b * source.next_word()
        lo = p & mask
        words += 1
    return RollOutcome(p >> bits, words, 1)


def roll_single(source: WordSource, bound) -> int:
    """Uniform integer in [0, bound); see roll_single_traced for mechanics."""
    return roll_single_traced(source, bound).value


def falling_factorial(n: int, k: int, bits: int = 64) -> int:
    """n * (n-1) * ... * (n-k+1), rejecting products that exceed 2**bits."""
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n} k={k}")
    limit = 1 << bits
    out = 1
    for factor in range(n, n - k, -1):
        out *= factor
        if out > limit:
            raise BoundOverflow(
                f"falling factorial of {n} over {k} terms exceeds 2**{bits}"
            )
    return out
