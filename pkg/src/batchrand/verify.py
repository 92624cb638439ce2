"""Exhaustive and statistical correctness oracles.

Small word widths make exact verification affordable: enumerating every
word tallies exactly how often each digit tuple is produced, which pins
down uniformity and independence with no statistics at all. For shuffles,
where enumeration is out of reach, a chi-square test over permutation
frequencies stands in.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from .batched import digit_pass
from .bounded import mul_full, threshold
from .errors import InsufficientTrials
from .mixed_radix import RadixBases, decode, encode
from .wordsource import WordSource

# Upper 0.1% points of the chi-square distribution for the degrees of
# freedom used here (n! - 1 for n up to 6), from standard tables. Zero
# degrees of freedom makes the test vacuous, hence the inf.
CHI2_CRITICAL_001 = {
    0: math.inf,
    1: 10.827566170662733,
    5: 20.515005652432873,
    23: 49.7282324664315,
    119: 172.41768160217916,
    719: 841.9052198159949,
}

#: Exhaustive 4-bit trace for one coin flip plus one 6-sided die, checked
#: row for row by the verification suite. Columns: word, 2*word, first
#: digit, first remainder, 6*remainder, second digit, final remainder,
#: rejected. Exactly the 4 words with final remainder below 16 mod 12 = 4
#: are rejected; the other 12 produce each (coin, die) pair exactly once.
COIN_DIE_TRACE = (
    (0, 0, 0, 0, 0, 0, 0, True),
    (1, 2, 0, 2, 12, 0, 12, False),
    (2, 4, 0, 4, 24, 1, 8, False),
    (3, 6, 0, 6, 36, 2, 4, False),
    (4, 8, 0, 8, 48, 3, 0, True),
    (5, 10, 0, 10, 60, 3, 12, False),
    (6, 12, 0, 12, 72, 4, 8, False),
    (7, 14, 0, 14, 84, 5, 4, False),
    (8, 16, 1, 0, 0, 0, 0, True),
    (9, 18, 1, 2, 12, 0, 12, False),
    (10, 20, 1, 4, 24, 1, 8, False),
    (11, 22, 1, 6, 36, 2, 4, False),
    (12, 24, 1, 8, 48, 3, 0, True),
    (13, 26, 1, 10, 60, 3, 12, False),
    (14, 28, 1, 12, 72, 4, 8, False),
    (15, 30, 1, 14, 84, 5, 4, False),
)


@dataclass
class TupleCensus:
    """Exact occurrence counts of digit tuples over every word of a width."""

    counts: dict
    rejected: int
    total_words: int

    def accepted(self) -> int:
        return self.total_words - self.rejected


@dataclass(frozen=True)
class ChiSquareReport:
    """Pearson chi-square against the uniform permutation distribution."""

    statistic: float
    degrees_of_freedom: int
    critical_value: float
    passed: bool


def coin_die_trace():
    """Recompute the 4-bit coin+die trace from the arithmetic primitives."""
    bases = RadixBases.of((2, 6), bits=4)
    t = threshold(bases.product)
    rows = []
    for r0 in range(16):
        a1, r1 = mul_full(2, r0, 4)
        a2, r2 = mul_full(6, r1, 4)
        rows.append((r0, 2 * r0, a1, r1, 6 * r1, a2, r2, r2 < t))
    return tuple(rows)


def census_batched(bases: RadixBases) -> TupleCensus:
    """Run the digit pass on every word and tally first-pass outcomes.

    Requires a small word width (enumeration of 2**bits words).
    """
    if bases.bits > 16:
        raise ValueError(f"exhaustive census needs bits <= 16, got {bases.bits}")
    t = threshold(bases.product)
    counts = Counter()
    rejected = 0
    total = 1 << bases.bits
    for word in range(total):
        digits, rk = digit_pass(word, bases)
        if rk >= t:
            counts[digits] += 1
        else:
            rejected += 1
    return TupleCensus(dict(counts), rejected, total)


def census_naive(bases: RadixBases) -> TupleCensus:
    """Tally the division-based route: accept on the product, then decode."""
    if bases.bits > 16:
        raise ValueError(f"exhaustive census needs bits <= 16, got {bases.bits}")
    b = bases.product
    t = threshold(b)
    counts = Counter()
    rejected = 0
    total = 1 << bases.bits
    for word in range(total):
        hi, lo = mul_full(b.value, word, bases.bits)
        if lo >= t:
            counts[decode(hi, bases)] += 1
        else:
            rejected += 1
    return TupleCensus(dict(counts), rejected, total)


def census_equivalence(bases: RadixBases) -> bool:
    """Check, word by word, that the digit chain equals one big multiply.

    True iff for every word the encoded digits and final remainder coincide
    with the (hi, lo) of product*word, and the digits are exactly the
    mixed-radix decomposition of hi.
    """
    if bases.bits > 16:
        raise ValueError(f"exhaustive check needs bits <= 16, got {bases.bits}")
    b = bases.product.value
    for word in range(1 << bases.bits):
        digits, rk = digit_pass(word, bases)
        hi, lo = mul_full(b, word, bases.bits)
        if encode(digits, bases) != hi or rk != lo or digits != decode(hi, bases):
            return False
    return True


def chi_square_shuffle(
    algorithm: Callable[[WordSource, list], list],
    n: int,
    trials: int,
    source: WordSource,
) -> ChiSquareReport:
    """Shuffle the identity ``trials`` times and test permutation uniformity.

    Requires n <= 6 (the critical values are embedded for those degrees of
    freedom) and at least 100 * n! trials.
    """
    if n < 1 or n > 6:
        raise ValueError(f"need 1 <= n <= 6, got {n}")
    perms = math.factorial(n)
    if trials < 100 * perms:
        raise InsufficientTrials(f"need at least {100 * perms} trials, got {trials}")
    counts = Counter()
    base = list(range(n))
    for _ in range(trials):
        counts[tuple(algorithm(source, base[:]))] += 1
    expected = trials / perms
    statistic = sum((c - expected) ** 2 for c in counts.values()) / expected
    statistic += (perms - len(counts)) * expected  # never-seen permutations
    dof = perms - 1
    critical = CHI2_CRITICAL_001[dof]
    return ChiSquareReport(statistic, dof, critical, statistic < critical)
