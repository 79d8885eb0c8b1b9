"""Timing harness for Lucas-number evaluation strategies and kernel backends.

Times are taken with a monotonic clock and reported as the minimum over
repetitions.  Values are cross-checked; times are never asserted.
"""
from __future__ import annotations

import csv
import enum
import io
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import kernels
from .errors import DomainError
from .lacunary import lucas_expand
from .seqcore import fast_double_lucas

__all__ = [
    "Strategy", "BenchRecord", "run_bench", "records_to_csv", "format_table",
    "KernelRecord", "compare_kernels", "CSV_HEADER",
]

CSV_HEADER = ("strategy", "n", "N", "wall_time_ns", "result_digest")
_MASK64 = (1 << 64) - 1


class Strategy(enum.Enum):
    ITERATIVE = "iterative"
    FAST_DOUBLING = "fast-doubling"
    LACUNARY_RECOMBINE = "lacunary"

    @classmethod
    def parse(cls, text: str) -> list["Strategy"]:
        names = [t.strip().lower() for t in text.split(",") if t.strip()]
        if names == ["all"]:
            return list(cls)
        out = []
        for name in names:
            for s in cls:
                if name in (s.value, s.name.lower()):
                    out.append(s)
                    break
            else:
                raise DomainError(f"unknown strategy {name!r}")
        return out


@dataclass(frozen=True)
class BenchRecord:
    strategy: Strategy
    n: int
    N: int
    wall_time_ns: int
    result_digest: str
    value: int = field(repr=False, compare=False)

    def row(self) -> tuple:
        return (self.strategy.value, self.n, self.N, self.wall_time_ns, self.result_digest)


def _lucas_iterative(n: int) -> int:
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _recombine(outer: int, signed_terms: Sequence[tuple[int, int]], res_sign: int, res_val: int) -> int:
    acc = 0
    for s, v in signed_terms:
        acc = acc + v if s > 0 else acc - v
    return outer * acc + (res_val if res_sign > 0 else -res_val)


def _time_min(fn: Callable[[], int], repetitions: int) -> tuple[int, int]:
    best, value = None, None
    for _ in range(repetitions):
        t0 = time.perf_counter_ns()
        value = fn()
        dt = time.perf_counter_ns() - t0
        best = dt if best is None else min(best, dt)
    return best, value


def run_bench(strategies: Iterable[Strategy], n_values: Iterable[int], N: int = 0,
              repetitions: int = 1) -> list[BenchRecord]:
    """Time each strategy at each ``n``; raises if any two strategies disagree."""
    strategies = list(strategies)
    n_values = [int(n) for n in n_values]
    if repetitions < 1:
        raise DomainError(f"repetitions must be >= 1, got {repetitions}")
    if any(n < 0 for n in n_values):
        raise DomainError("n values must be >= 0")
    if Strategy.LACUNARY_RECOMBINE in strategies:
        if N < 1:
            raise DomainError("lacunary strategy needs a gap N >= 1")
        bad = [n for n in n_values if n < 2 * N]
        if bad:
            raise DomainError(f"lacunary strategy needs n >= 2N; offending n: {bad}")

    records = []
    for n in n_values:
        values = {}
        for strat in strategies:
            if strat is Strategy.ITERATIVE:
                dt, v = _time_min(lambda: _lucas_iterative(n), repetitions)
                gap = 0
            elif strat is Strategy.FAST_DOUBLING:
                dt, v = _time_min(lambda: fast_double_lucas(n), repetitions)
                gap = 0
            else:
                e = lucas_expand(n, N)
                cached = [(s, fast_double_lucas(i)) for s, i in e.terms]
                rs, ri = e.residual
                rv, outer = fast_double_lucas(ri), fast_double_lucas(N)
                dt, v = _time_min(lambda: _recombine(outer, cached, rs, rv), repetitions)
                gap = N
            values[strat] = v
            records.append(BenchRecord(strat, n, gap, dt, str(v & _MASK64), v))
        if len(set(values.values())) > 1:
            raise RuntimeError(f"strategies disagree at n={n}")
    return records


def records_to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()


def format_table(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines)


@dataclass(frozen=True)
class KernelRecord:
    backend: str
    task: str
    n: int
    wall_time_ns: int
    result: tuple


def compare_kernels(sizes: Iterable[int] = (16, 20, 24), repetitions: int = 3,
                    backends: Sequence[str] | None = None) -> list[KernelRecord]:
    """Time the enumeration kernels of each available backend on identical inputs.

    Tasks: full bracelet enumeration (materialized masks) and the partition
    count with ``N = n // 2``.  Raises if backends return different results.
    """
    backends = list(backends or kernels.available_backends())
    out = []
    for n in sizes:
        seen: dict[str, set] = {}
        for name in backends:
            k = kernels.load_backend(name)
            tasks = {
                "bracelet_masks": lambda: k.bracelet_masks(n),
                "partition_counts": lambda: k.partition_counts(n, n // 2),
            }
            for task, fn in tasks.items():
                dt, v = _time_min(fn, repetitions)
                summary = (len(v), sum(v) & _MASK64) if task == "bracelet_masks" else tuple(v)
                seen.setdefault(task, set()).add(summary)
                out.append(KernelRecord(name, task, n, dt, summary))
        if any(len(v) > 1 for v in seen.values()):
            raise RuntimeError(f"kernel backends disagree at n={n}")
    return out
