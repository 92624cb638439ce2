"""Fisher-Yates shuffles: unbatched, division-batched, and multiply-batched.

The batched form walks the array from the top, drawing k swap indices per
random word with bases (n, n-1, ..., n-k+1). A schedule maps the remaining
length to the batch size; each regime carries an upper bound on the base
product so the exact product (and its threshold) is almost never computed.

All shuffles permute the list in place and return it. The inner loops are
deliberately flat and run a whole regime per call: these functions are the
subject of the benchmark harness, so per-batch call overhead matters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounded import falling_factorial
from .errors import BoundOverflow
from .wordsource import WordSource


@dataclass(frozen=True)
class ShuffleSchedule:
    """Ordered (max_length, batch_size) pairs, longest regime first.

    Batch sizes strictly increase as lengths decrease, and every regime's
    entry product (the falling factorial at its max length) must fit in the
    word width.
    """

    entries: tuple[tuple[int, int], ...]
    max_batch: int
    word_bits: int = 64

    def __post_init__(self):
        if not self.entries:
            raise ValueError("schedule needs at least one regime")
        lengths = [n for n, _ in self.entries]
        sizes = [k for _, k in self.entries]
        if any(a <= b for a, b in zip(lengths, lengths[1:])):
            raise ValueError(f"regime lengths must strictly decrease: {lengths}")
        if any(a >= b for a, b in zip(sizes, sizes[1:])):
            raise ValueError(f"batch sizes must strictly increase: {sizes}")
        if sizes[-1] != self.max_batch:
            raise ValueError(f"last batch size {sizes[-1]} != max_batch {self.max_batch}")
        for n, k in self.entries:
            if k > n:
                raise ValueError(f"batch size {k} exceeds regime length {n}")
            falling_factorial(n, k, self.word_bits)  # BoundOverflow if too big


# 64-bit regime list: batches of two up to 2**30 elements, then three up
# to 2**19, four up to 2**14, five up to 2**11, six up to 2**9. These are
# the cost-model crossovers floored to powers of two; cost_model.build_schedule
# regenerates them from first principles.
DEFAULT_SCHEDULE = ShuffleSchedule(
    entries=(
        (1 << 30, 2),
        (1 << 19, 3),
        (1 << 14, 4),
        (1 << 11, 5),
        (1 << 9, 6),
    ),
    max_batch=6,
    word_bits=64,
)

PAIR_SCHEDULE = ShuffleSchedule(entries=((1 << 30, 2),), max_batch=2, word_bits=64)


def default_schedule(max_batch: int = 6) -> ShuffleSchedule:
    """Prefix of the default 64-bit schedule up to the given batch size."""
    if not 2 <= max_batch <= DEFAULT_SCHEDULE.max_batch:
        raise ValueError(f"max_batch must be in [2, {DEFAULT_SCHEDULE.max_batch}]")
    return ShuffleSchedule(
        DEFAULT_SCHEDULE.entries[: max_batch - 1], max_batch, DEFAULT_SCHEDULE.word_bits
    )


def shuffle_unbatched(source: WordSource, z: list) -> list:
    """Plain Fisher-Yates: one random word per index, divisions almost never."""
    bits = source.word_bits
    mask = (1 << bits) - 1
    top = mask + 1
    next_word = source.next_word
    for i in range(len(z) - 1, 0, -1):
        b = i + 1
        p = b * next_word()
        lo = p & mask
        if lo < b:
            t = (top - b) % b
            while lo < t:
                p = b * next_word()
                lo = p & mask
        j = p >> bits
        z[i], z[j] = z[j], z[i]
    return z


def _run_batches(next_word, z, n: int, k: int, u: int, count: int, bits: int) -> int:
    """Run ``count`` consecutive batches of k dice, the first at length n.

    The single implementation of the batched partial shuffle: one word per
    batch, k chained multiplies, a rejection loop entered only when the
    final remainder undercuts the carried bound u, then the k swaps.
    Returns the bound for the next batch of this size.
    """
    mask = (1 << bits) - 1
    js = [0] * k
    for _ in range(count):
        r = next_word()
        b = n
        for i in range(k):
            p = b * r
            js[i] = p >> bits
            r = p & mask
            b -= 1
        if r < u:
            u = falling_factorial(n, k, bits)
            t = ((mask + 1) - u) % u
            while r < t:
                r = next_word()
                b = n
                for i in range(k):
                    p = b * r
                    js[i] = p >> bits
                    r = p & mask
                    b -= 1
        i = n - 1
        for j in js:
            z[i], z[j] = z[j], z[i]
            i -= 1
        n -= k
    return u


def partial_shuffle_batch(source: WordSource, z: list, n: int, k: int, u: int) -> int:
    """Shuffle the top k of the first n elements with one batch of dice.

    Requires k <= n, the product n*(n-1)*...*(n-k+1) to fit the word width,
    and u at least that product. Returns the upper bound to carry into the
    next batch of the same size: unchanged on the fast path, or the exact
    product when the incoming bound was breached and the threshold had to
    be derived.
    """
    return _run_batches(source.next_word, z, n, k, u, 1, source.word_bits)


def shuffle_batched(
    source: WordSource,
    z: list,
    schedule: ShuffleSchedule = DEFAULT_SCHEDULE,
    check_bounds: bool = False,
) -> list:
    """Fisher-Yates in batches, sized by the schedule for the remaining length.

    Each regime starts with the bound for its maximum length and lets the
    batch runner tighten it. Lengths above the first regime fall back to
    single rolls; a tail shorter than the batch size is finished with one
    final batch of size remaining-1. With check_bounds the carried bound is
    re-validated before every batch (testing hook; off by default).
    """
    if source.word_bits != schedule.word_bits:
        raise ValueError(
            f"source emits {source.word_bits}-bit words but schedule expects "
            f"{schedule.word_bits}"
        )
    remaining = len(z)
    if remaining < 2:
        return z
    entries = schedule.entries
    bits = schedule.word_bits
    next_word = source.next_word
    top_length = entries[0][0]
    if remaining > top_length:
        # no regime covers lengths this large: single rolls down to the first
        mask = (1 << bits) - 1
        topw = mask + 1
        for i in range(remaining - 1, top_length - 1, -1):
            b = i + 1
            p = b * next_word()
            lo = p & mask
            if lo < b:
                t = (topw - b) % b
                while lo < t:
                    p = b * next_word()
                    lo = p & mask
            j = p >> bits
            z[i], z[j] = z[j], z[i]
        remaining = top_length
    idx = 0
    for pos, (length, _) in enumerate(entries):
        if length >= remaining:
            idx = pos
        else:
            break
    k = entries[idx][1]
    u = falling_factorial(entries[idx][0], k, bits)
    while remaining > 1:
        if remaining < k:
            k = remaining - 1
            _run_batches(next_word, z, remaining, k, falling_factorial(remaining, k, bits), 1, bits)
            break
        if idx + 1 < len(entries) and remaining <= entries[idx + 1][0]:
            idx += 1
            k = entries[idx][1]
            u = falling_factorial(entries[idx][0], k, bits)
            continue
        if idx + 1 < len(entries):
            # run down to the next regime's length, staying above it
            count = -((entries[idx + 1][0] - remaining) // k)  # ceil division
        else:
            count = remaining // k
        if check_bounds:
            for _ in range(count):
                if u < falling_factorial(remaining, k, bits):
                    raise AssertionError(
                        f"carried bound {u} below product at remaining={remaining} k={k}"
                    )
                u = _run_batches(next_word, z, remaining, k, u, 1, bits)
                remaining -= k
        else:
            u = _run_batches(next_word, z, remaining, k, u, count, bits)
            remaining -= count * k
    return z


def shuffle_naive_batched(source: WordSource, z: list) -> list:
    """Fisher-Yates two indices at a time, splitting one draw by division.

    For each index pair (i, i-1) a single uniform value on [0, i*(i+1)) is
    drawn, then divided: the quotient serves index i and the remainder
    index i-1. An odd leftover index gets its own draw.
    """
    bits = source.word_bits
    mask = (1 << bits) - 1
    top = mask + 1
    next_word = source.next_word
    i = len(z) - 1
    if i >= 2 and (i + 1) * i > top:
        raise BoundOverflow(f"pair product {(i + 1) * i} exceeds 2**{bits}")
    while i >= 2:
        b = (i + 1) * i
        p = b * next_word()
        lo = p & mask
        if lo < b:
            t = (top - b) % b
            while lo < t:
                p = b * next_word()
                lo = p & mask
        j1, j2 = divmod(p >> bits, i)
        z[i], z[j1] = z[j1], z[i]
        i -= 1
        z[i], z[j2] = z[j2], z[i]
        i -= 1
    if i == 1:
        p = 2 * next_word()
        lo = p & mask
        if lo < 2:
            t = (top - 2) % 2
            while lo < t:
                p = 2 * next_word()
                lo = p & mask
        j = p >> bits
        z[1], z[j] = z[j], z[1]
    return z
