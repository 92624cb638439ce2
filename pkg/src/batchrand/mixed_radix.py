"""Mixed-radix positional numbers: each digit position has its own base.

A value a < b1*b2*...*bk has a unique digit tuple (a1..ak) with
0 <= ai < bi, most significant first. Decoding a uniform value yields
independent uniform digits, which makes this the reference oracle for the
multiplication-based batches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounded import BoundEncoding
from .errors import DigitOutOfRange, ValueOutOfRange


@dataclass(frozen=True)
class RadixBases:
    """An ordered base tuple (most significant first) with its cached product."""

    bases: tuple[int, ...]
    bits: int
    product: BoundEncoding

    @classmethod
    def of(cls, bases, bits: int = 64) -> "RadixBases":
        bases = tuple(bases)
        if not bases:
            raise ValueError("at least one base is required")
        if any(b < 1 for b in bases):
            raise ValueError(f"bases must be positive, got {bases}")
        # BoundEncoding.of rejects products beyond 2**bits
        return cls(bases, bits, BoundEncoding.of(math.prod(bases), bits))

    def __len__(self) -> int:
        return len(self.bases)


def encode(digits, bases: RadixBases) -> int:
    """Value represented by the digit tuple, in [0, product)."""
    if len(digits) != len(bases.bases):
        raise DigitOutOfRange(
            f"expected {len(bases.bases)} digits, got {len(digits)}"
        )
    value = 0
    for digit, base in zip(digits, bases.bases):
        if not 0 <= digit < base:
            raise DigitOutOfRange(f"digit {digit} not in [0, {base})")
        value = value * base + digit
    return value


def decode(value: int, bases: RadixBases) -> tuple[int, ...]:
    """The unique digit tuple representing ``value``.

    Remainders of successive quotients, dividing by the bases in reverse
    (least significant first).
    """
    if not 0 <= value < bases.product.value:
        raise ValueOutOfRange(f"value {value} not in [0, {bases.product.value})")
    digits = []
    for base in reversed(bases.bases):
        value, digit = divmod(value, base)
        digits.append(digit)
    digits.reverse()
    return tuple(digits)
