"""Concrete-instance checks of the classical Fibonacci/Lucas identities.

Each check evaluates the two sides separately and returns a
:class:`VerificationReport`.  Domains are restricted to the region where the
identity holds under the zero convention for negative indices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DomainError
from .seqcore import board_count as f
from .seqcore import fib, lucas

__all__ = [
    "VerificationReport", "check_addition", "check_docagne",
    "check_lucas_bridge", "check_tiling_addition", "check_tiling_docagne",
    "check_gap_identity",
]


@dataclass(frozen=True)
class VerificationReport:
    identity_name: str
    parameters: tuple[tuple[str, int], ...]
    lhs: int
    rhs: int
    passed: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "passed", self.lhs == self.rhs)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity_name,
            "params": {k: str(v) for k, v in self.parameters},
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def check_addition(m: int, n: int) -> VerificationReport:
    """``F_{m+n} = F_m F_{n+1} + F_{m-1} F_n`` for ``m >= 1, n >= 0``."""
    if m < 1 or n < 0:
        raise DomainError(f"addition identity needs m >= 1, n >= 0; got m={m}, n={n}")
    return VerificationReport(
        "addition", (("m", m), ("n", n)),
        fib(m + n),
        fib(m) * fib(n + 1) + fib(m - 1) * fib(n),
    )


def check_docagne(m: int, n: int) -> VerificationReport:
    """d'Ocagne: ``(-1)^n F_{m-n} = F_m F_{n+1} - F_{m+1} F_n`` for ``m >= n >= 0``."""
    if not m >= n >= 0:
        raise DomainError(f"d'Ocagne identity needs m >= n >= 0; got m={m}, n={n}")
    return VerificationReport(
        "docagne", (("m", m), ("n", n)),
        _sign(n) * fib(m - n),
        fib(m) * fib(n + 1) - fib(m + 1) * fib(n),
    )


def check_lucas_bridge(n: int) -> VerificationReport:
    """``L_n = F_{n-1} + F_{n+1}`` for ``n >= 1``."""
    if n < 1:
        raise DomainError(f"Lucas bridge needs n >= 1 (fails at n=0 under the zero convention); got {n}")
    return VerificationReport(
        "lucas-bridge", (("n", n),), lucas(n), fib(n - 1) + fib(n + 1))


def check_tiling_addition(m: int, n: int) -> VerificationReport:
    """``f_m f_n + f_{m-1} f_{n-1} = f_{m+n}`` in board-count form."""
    if m < 0 or n < 0:
        raise DomainError(f"tiling addition needs m, n >= 0; got m={m}, n={n}")
    return VerificationReport(
        "tiling-addition", (("m", m), ("n", n)),
        f(m) * f(n) + f(m - 1) * f(n - 1),
        f(m + n),
    )


def check_tiling_docagne(m: int, n: int) -> VerificationReport:
    """``f_{m-1} f_n - f_m f_{n-1} = (-1)^n f_{m-n-1}`` for ``m >= n >= 0``."""
    if not m >= n >= 0:
        raise DomainError(f"tiling d'Ocagne needs m >= n >= 0; got m={m}, n={n}")
    return VerificationReport(
        "tiling-docagne", (("m", m), ("n", n)),
        f(m - 1) * f(n) - f(m) * f(n - 1),
        _sign(n) * f(m - n - 1),
    )


def check_gap_identity(n: int, N: int) -> VerificationReport:
    """One-step gap identity ``L_n = L_N L_{n-N} + (-1)^{N+1} L_{n-2N}``."""
    if N < 1 or n < 2 * N:
        raise DomainError(f"gap identity needs n >= 2N >= 2; got n={n}, N={N}")
    return VerificationReport(
        "gap", (("n", n), ("N", N)),
        lucas(n),
        lucas(N) * lucas(n - N) + _sign(N + 1) * lucas(n - 2 * N),
    )
