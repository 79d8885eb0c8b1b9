"""Exact evaluation of second-order linear recurrences.

Every sequence here follows the convention that terms at negative indices
are zero; the sign-alternating negative extension is deliberately not used.
"""
from __future__ import annotations

import enum
import threading
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "NegativeConvention", "SequenceSpec", "FIBONACCI", "LUCAS", "PELL",
    "PELL_AS_PRINTED", "gibonacci", "term", "fib", "lucas", "pell",
    "fast_double_fib", "fast_double_lucas", "board_count", "bracelet_count",
]


class NegativeConvention(enum.Enum):
    ZERO = "zero"


@dataclass(frozen=True)
class SequenceSpec:
    """A recurrence ``t(n) = coeff1*t(n-1) + coeff2*t(n-2)`` with seeds ``t(0), t(1)``."""

    name: str
    coeff1: int
    coeff2: int
    init0: int
    init1: int
    negative_convention: NegativeConvention = NegativeConvention.ZERO


FIBONACCI = SequenceSpec("fibonacci", 1, 1, 0, 1)
LUCAS = SequenceSpec("lucas", 1, 1, 2, 1)
PELL = SequenceSpec("pell", 2, 1, 0, 1)
# Seeds P_0 = P_1 = 1; kept only to demonstrate that the Pell recurrence
# identity fails under them.
PELL_AS_PRINTED = SequenceSpec("pell-as-printed", 2, 1, 1, 1)


def gibonacci(g0: int, g1: int) -> SequenceSpec:
    return SequenceSpec(f"gibonacci({g0},{g1})", 1, 1, int(g0), int(g1))


class _TermCache:
    """Append-only prefix tables, one per spec, guarded by a single lock.

    Tables stop growing at ``limit`` entries; larger indices are iterated from
    the stored tail without being kept.
    """

    def __init__(self, limit: int = 4096) -> None:
        self.limit = limit
        self._tables: dict[SequenceSpec, list[int]] = {}
        self._lock = threading.Lock()

    def get(self, spec: SequenceSpec, n: int) -> int:
        table = self._tables.get(spec)
        if table is not None and n < len(table):
            return table[n]
        with self._lock:
            table = self._tables.setdefault(spec, [spec.init0, spec.init1])
            a, b = table[-2], table[-1]
            c1, c2 = spec.coeff1, spec.coeff2
            while len(table) <= min(n, self.limit):
                a, b = b, c1 * b + c2 * a
                table.append(b)
            if n < len(table):
                return table[n]
        for _ in range(n - len(table) + 1):
            a, b = b, c1 * b + c2 * a
        return b


_cache = _TermCache()


def term(spec: SequenceSpec, n: int) -> int:
    """Return the ``n``-th term of ``spec``; zero for ``n < 0``."""
    n = int(n)
    if n < 0:
        return 0
    return _cache.get(spec, n)


def fib(n: int) -> int:
    return term(FIBONACCI, n)


def lucas(n: int) -> int:
    return term(LUCAS, n)


def pell(n: int) -> int:
    return term(PELL, n)


def fast_double_fib(n: int) -> tuple[int, int]:
    """Return ``(F_n, F_{n+1})`` by fast doubling, independently of :func:`term`.

    Uses ``F_2k = F_k (2F_{k+1} - F_k)`` and ``F_{2k+1} = F_k^2 + F_{k+1}^2``.
    """
    n = int(n)
    if n < 0:
        raise DomainError(f"fast doubling needs n >= 0, got {n}")
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * ((b << 1) - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fast_double_lucas(n: int) -> int:
    """``L_n = 2F_{n+1} - F_n`` on top of :func:`fast_double_fib`."""
    f, g = fast_double_fib(n)
    return (g << 1) - f


def board_count(n: int) -> int:
    """Number of square/domino tilings of a linear ``n``-board (``f_n = F_{n+1}``)."""
    return fib(int(n) + 1)


def bracelet_count(n: int) -> int:
    """Number of square/domino tilings of a circular board of ``n`` labelled cells."""
    n = int(n)
    if n < 1:
        raise DomainError(f"bracelets are defined here for n >= 1, got {n}")
    return lucas(n)
