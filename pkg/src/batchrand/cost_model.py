"""Expected-cost model for batch sizing, and schedule derivation from it.

Costs are measured in multiplication units. One die roll out of a batch of
k at array length n costs, in expectation,

    ((rng_cost + k) / (1 - p_reroll) + (div_cost + k - 1) * p_fail) / k

where the base product b = n*(n-1)*...*(n-k+1) gives p_fail = b / 2**L
(the chance the final remainder lands under the bound, forcing the exact
product and one division) and p_reroll = (2**L mod b) / 2**L (the chance
the whole batch is rejected).

The crossover n_k is the largest length at which batches of k are still no
more expensive than batches of k-1 for every length up to it. Because
p_reroll jumps whenever 2**L // b steps down, the cost difference is a slow
rise overlaid with a sawtooth; the first sign change therefore sits at a
quotient boundary. The search brackets the region where a sign change is
possible with a smooth pessimistic bound, then walks quotient boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounded import falling_factorial
from .errors import BoundOverflow, NoCrossover
from .shuffle import ShuffleSchedule


@dataclass(frozen=True)
class CostParams:
    """Generator-call and division costs, in multiplication units."""

    rng_cost: float = 2.0
    div_cost: float = 16.0
    word_bits: int = 64

    def __post_init__(self):
        if self.rng_cost <= 0 or self.div_cost <= 0:
            raise ValueError("costs must be positive")


def cost_per_roll(n: int, k: int, params: CostParams = CostParams()) -> float:
    """Expected cost of one die roll from batches of k at array length n."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n} k={k}")
    b = falling_factorial(n, k, params.word_bits)
    top = 1 << params.word_bits
    p_fail = b / top
    p_reroll = (top % b) / top
    return ((params.rng_cost + k) / (1.0 - p_reroll) + (params.div_cost + k - 1) * p_fail) / k


def _max_length(k: int, bits: int) -> int:
    """Largest n whose falling factorial over k terms fits in 2**bits."""
    top = 1 << bits

    def fits(n):
        try:
            falling_factorial(n, k, bits)
        except BoundOverflow:
            return False
        return True

    lo = k
    if not fits(lo):
        raise BoundOverflow(f"even n={k} overflows {bits}-bit words for k={k}")
    hi = lo
    while fits(hi) and hi <= top:
        lo_known = hi
        hi *= 2
    lo, hi = lo_known, min(hi, top + 1)
    # invariant: fits(lo), not fits(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if fits(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _first_n_with_quotient_below(k: int, bits: int, limit: int, lo: int, hi: int):
    """Smallest n in (lo, hi] whose falling factorial exceeds ``limit``."""
    if falling_factorial(hi, k, bits) <= limit:
        return None
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if falling_factorial(mid, k, bits) > limit:
            hi = mid
        else:
            lo = mid
    return hi


def find_nk(k: int, params: CostParams = CostParams()) -> int:
    """Largest n at which batches of k cost no more per roll than k-1.

    Honors the strict reading: every length up to the returned value favors
    k (ties included), and the very next length does not. Raises NoCrossover
    when k never wins even at the smallest usable length.
    """
    if k < 2:
        raise ValueError(f"crossovers are defined for k >= 2, got {k}")
    bits = params.word_bits
    top = 1 << bits

    def diff(n: int) -> float:
        return cost_per_roll(n, k, params) - cost_per_roll(n, k - 1, params)

    n_lo = k
    if diff(n_lo) > 0:
        raise NoCrossover(f"batches of {k} never beat {k - 1} under {params}")
    n_cap = _max_length(k, bits)

    # Pessimistic smooth difference: charge k the worst reroll rate
    # (p_reroll -> p_fail) and credit k-1 with none. Monotone in n, and an
    # upper bound on diff, so everything at or below its sign change is safe.
    floor_cost = (params.rng_cost + k - 1) / (k - 1)

    def diff_upper(n: int) -> float:
        b = falling_factorial(n, k, bits)
        p = b / top
        if p >= 1.0:
            return math.inf
        return ((params.rng_cost + k) / (1.0 - p) + (params.div_cost + k - 1) * p) / k - floor_cost

    if diff_upper(n_lo) > 0:
        n_safe = n_lo
    else:
        lo, hi = n_lo, n_cap
        if diff_upper(hi) <= 0:
            n_safe = n_cap
        else:
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if diff_upper(mid) <= 0:
                    lo = mid
                else:
                    hi = mid
            n_safe = lo
    if n_safe >= n_cap:
        return n_cap

    # Walk the quotient boundaries upward; the cost difference peaks just
    # after each one, so checking those points finds the first sign change.
    n = n_safe + 1
    while n <= n_cap:
        if diff(n) > 0:
            m = n - 1
            while m > n_lo and diff(m) > 0:
                m -= 1
            if m == n_lo and diff(m) > 0:
                raise NoCrossover(f"batches of {k} never beat {k - 1} under {params}")
            return m
        q = top // falling_factorial(n, k, bits)
        if q <= 1:
            break
        nxt = _first_n_with_quotient_below(k, bits, top // q, n, n_cap)
        if nxt is None:
            break
        n = nxt
    return n_cap


def build_schedule(params: CostParams = CostParams(), max_batch: int = 6) -> ShuffleSchedule:
    """Schedule from the model: each crossover floored to a power of two."""
    if max_batch < 2:
        raise ValueError(f"max_batch must be at least 2, got {max_batch}")
    entries = []
    for k in range(2, max_batch + 1):
        nk = find_nk(k, params)
        entries.append((1 << (nk.bit_length() - 1), k))
    return ShuffleSchedule(tuple(entries), max_batch, params.word_bits)
