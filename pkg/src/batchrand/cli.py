"""Command-line entry point: benchmarks, verification, cost tables, shuffling.

The bench subcommand emits CSV with one row per (algorithm, generator,
size); timings are wall-clock nanoseconds per element from a monotonic
clock, with each cell repeated until 100 microseconds of cumulative work.
"""

from __future__ import annotations

import argparse
import sys
import time
import warnings
from dataclasses import dataclass

from . import cost_model, verify
from .errors import UnknownAlgorithm
from .mixed_radix import RadixBases
from .shuffle import (
    default_schedule,
    shuffle_batched,
    shuffle_naive_batched,
    shuffle_unbatched,
)
from .wordsource import GENERATORS, make_source

CSV_HEADER = "algorithm,generator,n,avg_ns_per_element,min_ns_per_element"

DEFAULT_SIZES = tuple(1 << p for p in range(6, 17))

DEFAULT_BUDGET_NS = 100_000  # repeat each cell until 100 us of shuffling

_TABLE_BATCH_RANGE = {64: range(2, 9), 32: range(2, 5)}


def _shuffle_2(source, z):
    return shuffle_batched(source, z, default_schedule(2))


def _shuffle_6(source, z):
    return shuffle_batched(source, z, default_schedule(6))


ALGORITHMS = {
    "shuffle": shuffle_unbatched,
    "naive_shuffle_2": shuffle_naive_batched,
    "shuffle_2": _shuffle_2,
    "shuffle_6": _shuffle_6,
}


@dataclass(frozen=True)
class BenchRecord:
    """One benchmark observation, normalized per element."""

    algorithm: str
    generator: str
    n: int
    avg_ns_per_element: float
    min_ns_per_element: float

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"benchmark sizes start at 2, got {self.n}")
        if self.min_ns_per_element > self.avg_ns_per_element:
            raise ValueError("minimum above average")

    def csv_row(self) -> str:
        return (
            f"{self.algorithm},{self.generator},{self.n},"
            f"{self.avg_ns_per_element:.3f},{self.min_ns_per_element:.3f}"
        )


def bench(
    generator: str = "pcg64",
    sizes=DEFAULT_SIZES,
    algorithms=tuple(ALGORITHMS),
    seed: int = 1,
    budget_ns: int = DEFAULT_BUDGET_NS,
) -> list[BenchRecord]:
    """Time each (algorithm, size) cell and return one record per cell.

    The same array is shuffled repeatedly until the cumulative time reaches
    the budget; only the shuffle call sits between the timer reads. A
    warning is emitted when the minimum falls below 90% of the average,
    which signals an unstable clock or a contended machine.
    """
    for name in algorithms:
        if name not in ALGORITHMS:
            raise UnknownAlgorithm(
                f"unknown algorithm {name!r}; expected one of {sorted(ALGORITHMS)}"
            )
    records = []
    clock = time.perf_counter_ns
    for name in algorithms:
        fn = ALGORITHMS[name]
        for n in sizes:
            source = make_source(generator, seed)
            data = list(range(n))
            total = 0
            best = None
            reps = 0
            while total < budget_ns:
                t0 = clock()
                fn(source, data)
                dt = clock() - t0
                total += dt
                reps += 1
                if best is None or dt < best:
                    best = dt
            avg = total / reps / n
            low = best / n
            if low < 0.9 * avg:
                warnings.warn(
                    f"unstable timing for {name} at n={n}: "
                    f"min {low:.1f} < 90% of avg {avg:.1f} ns/element",
                    stacklevel=2,
                )
            records.append(BenchRecord(name, generator, n, avg, low))
    return records


def write_csv(records, stream) -> None:
    stream.write(CSV_HEADER + "\n")
    for record in records:
        stream.write(record.csv_row() + "\n")


def _cmd_bench(args) -> int:
    records = bench(
        generator=args.generator,
        sizes=args.sizes,
        algorithms=args.algorithms,
        seed=args.seed,
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            write_csv(records, fh)
    else:
        write_csv(records, sys.stdout)
    return 0


def _check(ok: bool, label: str, out) -> bool:
    out.write(f"[{'ok' if ok else 'FAIL'}] {label}\n")
    return ok


def _cmd_verify(args, out=None) -> int:
    """Exhaustive suites: trace, censuses, route equivalence, single rolls."""
    out = out or sys.stdout
    trace = verify.coin_die_trace()
    out.write("coin + 6-sided die with 4-bit words:\n")
    out.write(" r0  2r0  a1  r1  6r1  a2  r2  reject\n")
    for row in trace:
        r0, d1, a1, r1, d2, a2, r2, rejected = row
        out.write(
            f"{r0:3d} {d1:4d} {a1:3d} {r1:3d} {d2:4d} {a2:3d} {r2:3d}"
            f"   {'X' if rejected else ''}\n"
        )
    accepted = sum(1 for row in trace if not row[-1])
    out.write(f"{accepted} accepted / {len(trace) - accepted} rejected\n")

    ok = _check(trace == verify.COIN_DIE_TRACE, "exhaustive 4-bit trace matches", out)

    census = verify.census_batched(RadixBases.of((2, 6), bits=4))
    ok &= _check(
        census.rejected == 4 and sorted(census.counts.values()) == [1] * 12,
        "4-bit coin+die census: every pair once, 4 rejections",
        out,
    )
    census = verify.census_batched(RadixBases.of((4, 3, 2), bits=16))
    ok &= _check(
        census.rejected == 16 and set(census.counts.values()) == {2730},
        "16-bit (4,3,2) census: 24 tuples x 2730, 16 rejections",
        out,
    )
    for bases, bits in (((2, 6), 4), ((5, 3), 8), ((6, 5), 8), ((4, 3, 2), 16), ((16, 16, 16), 16)):
        rb = RadixBases.of(bases, bits=bits)
        ok &= _check(
            verify.census_equivalence(rb),
            f"digit chain equals single multiply for bases {bases} at {bits} bits",
            out,
        )
        ok &= _check(
            verify.census_batched(rb).counts == verify.census_naive(rb).counts,
            f"multiplicative and division censuses agree for bases {bases}",
            out,
        )
    from .bounded import BoundEncoding, roll_single_traced, threshold
    from .errors import SourceExhausted
    from .wordsource import FixedSequenceSource

    uniform = True
    for b in range(1, 17):
        enc = BoundEncoding.of(b, 4)
        t = threshold(enc)
        hits = [0] * b
        for word in range(16):
            try:
                hits[roll_single_traced(FixedSequenceSource([word], 4), enc).value] += 1
            except SourceExhausted:
                pass
        uniform &= hits == [(16 - t) // b] * b
    ok &= _check(uniform, "single rolls exactly uniform for every bound at 4 bits", out)
    return 0 if ok else 1


def _cmd_table(args) -> int:
    params = cost_model.CostParams(word_bits=args.bits)
    print(f"{'k':>2} {'n_k':>12} {'power floor':>12}")
    for k in _TABLE_BATCH_RANGE[args.bits]:
        nk = cost_model.find_nk(k, params)
        print(f"{k:>2} {nk:>12} {1 << (nk.bit_length() - 1):>12}")
    return 0


def _cmd_shuffle(args) -> int:
    if args.input and args.input != "-":
        with open(args.input, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    else:
        lines = sys.stdin.read().splitlines()
    seed = args.seed if args.seed is not None else int.from_bytes(__import__("os").urandom(8), "little")
    source = make_source(args.generator, seed)
    if args.max_batch <= 6:
        schedule = default_schedule(args.max_batch)
    else:
        schedule = cost_model.build_schedule(max_batch=args.max_batch)
    shuffle_batched(source, lines, schedule)
    out = open(args.output, "w", encoding="utf-8", newline="\n") if args.output else sys.stdout
    try:
        for line in lines:
            out.write(line + "\n")
    finally:
        if args.output:
            out.close()
    return 0


def _sizes_arg(text: str):
    try:
        sizes = tuple(int(part) for part in text.split(",") if part)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not sizes or any(n < 2 for n in sizes):
        raise argparse.ArgumentTypeError("sizes must be integers >= 2")
    return sizes


def _algorithms_arg(text: str):
    return tuple(part for part in text.split(",") if part)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="batchrand",
        description="Batched unbiased bounded random integers and fast shuffles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bench", help="time the shuffle algorithms, emit CSV")
    p.add_argument("--generator", choices=sorted(GENERATORS), default="pcg64")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--sizes", type=_sizes_arg, default=DEFAULT_SIZES,
                   help="comma-separated element counts (default powers of two 64..65536)")
    p.add_argument("--algorithms", type=_algorithms_arg, default=tuple(ALGORITHMS),
                   help=f"comma-separated subset of {','.join(ALGORITHMS)}")
    p.add_argument("--output", help="CSV path (default stdout)")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("verify", help="run the exhaustive correctness suites")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table", help="print batch-size crossovers from the cost model")
    p.add_argument("--bits", type=int, choices=(32, 64), default=64)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("shuffle", help="shuffle input lines")
    p.add_argument("input", nargs="?", help="input file (default stdin)")
    p.add_argument("--generator", choices=sorted(GENERATORS), default="pcg64")
    p.add_argument("--seed", type=int, default=None,
                   help="seed for a reproducible permutation (default random)")
    p.add_argument("--output", help="output file (default stdout)")
    p.add_argument("--max-batch", type=int, default=6)
    p.set_defaults(func=_cmd_shuffle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
