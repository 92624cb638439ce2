"""Batched dice rolls: several bounded integers from one random word.

A chain of full-width multiplies turns one word r0 into digits a1..ak,
one per base, passing the low half of each product to the next stage. The
final remainder doubles as the acceptance test: whenever it clears
2**L mod (b1*...*bk) the digits are independent and uniform, so a whole
batch costs one generator call and k multiplications in the common case.

Three entry points: a loop for precomputed thresholds, the general form
that derives the threshold lazily (skipping it whenever the remainder
already clears the product or a cached upper bound), and the
division-based single-draw-then-decode baseline.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bounded import roll_single, threshold
from .errors import BoundOverflow
from .mixed_radix import RadixBases, decode
from .wordsource import WordSource


@dataclass(frozen=True)
class BatchSpec:
    """Bases plus optional precomputed threshold and cached upper bound."""

    bases: RadixBases
    precomputed_threshold: Optional[int] = None
    upper_bound: Optional[int] = None

    def __post_init__(self):
        if self.precomputed_threshold is not None:
            expected = threshold(self.bases.product)
            if self.precomputed_threshold != expected:
                raise ValueError(
                    f"threshold {self.precomputed_threshold} does not match "
                    f"{expected} for bases {self.bases.bases}"
                )
        if self.upper_bound is not None:
            if self.upper_bound < self.bases.product.value:
                raise BoundOverflow(
                    f"upper bound {self.upper_bound} below product "
                    f"{self.bases.product.value}"
                )

    @classmethod
    def with_threshold(cls, bases: RadixBases) -> "BatchSpec":
        return cls(bases, precomputed_threshold=threshold(bases.product))


@dataclass(frozen=True)
class BatchResult:
    """Accepted digits plus per-call instrumentation.

    threshold_computed records whether this call performed its (single)
    remainder operation; words_consumed counts generator draws including
    rejected ones.
    """

    digits: tuple[int, ...]
    words_consumed: int
    threshold_computed: bool
    final_remainder: int


def digit_pass(r0: int, bases: RadixBases) -> tuple[tuple[int, ...], int]:
    """One multiply per base: returns the digit tuple and the final remainder.

    Performs exactly len(bases) multiplications and no divisions.
    """
    bits = bases.bits
    mask = (1 << bits) - 1
    r = r0
    digits = []
    for b in bases.bases:
        p = b * r
        digits.append(p >> bits)
        r = p & mask
    return tuple(digits), r


def roll_batch_known_threshold(source: WordSource, spec: BatchSpec) -> BatchResult:
    """Batched rolls with the rejection threshold already in hand.

    Repeats whole digit passes on fresh words until the final remainder
    clears the threshold. Never divides.
    """
    t = spec.precomputed_threshold
    if t is None:
        raise ValueError("spec has no precomputed threshold")
    words = 0
    while True:
        words += 1
        digits, rk = digit_pass(source.next_word(), spec.bases)
        if rk >= t:
            return BatchResult(digits, words, False, rk)


def roll_batch(source: WordSource, spec: BatchSpec) -> BatchResult:
    """Batched rolls deriving the threshold only when it can matter.

    The remainder 2**L mod product is computed once, and only when the
    first pass's final remainder falls below the product (or below the
    cached upper bound, when one is present); otherwise the batch is
    accepted with zero divisions.
    """
    bases = spec.bases
    words = 1
    digits, rk = digit_pass(source.next_word(), bases)
    u = spec.upper_bound
    if u is not None and rk >= u:
        return BatchResult(digits, words, False, rk)
    b = bases.product.value
    if rk >= b:
        return BatchResult(digits, words, False, rk)
    t = ((1 << bases.bits) - b) % b  # the only remainder operation
    while rk < t:
        words += 1
        digits, rk = digit_pass(source.next_word(), bases)
    return BatchResult(digits, words, True, rk)


def roll_batch_naive(source: WordSource, bases: RadixBases) -> tuple[int, ...]:
    """Division-based baseline: one uniform draw on the product, then decode."""
    return decode(roll_single(source, bases.product), bases)
