"""Lacunary recurrences for the Lucas, Fibonacci and Pell numbers.

The Lucas expansion with gap ``N`` reads::

    L_n = L_N * sum_{i=1..d} s_i * L_{n-(2i-1)N}  +  r * L_{n-2dN}

with ``d = floor(floor(n/N)/2)``, ``s_i = (-1)^((N+1)(i+1))`` and
``r = (-1)^((N+1)(d+2))``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DomainError
from .seqcore import FIBONACCI, PELL, SequenceSpec, lucas, term

__all__ = [
    "LacunaryExpansion", "gap_depth", "lucas_expand", "lucas_eval",
    "substitute_gap_identity", "gap_recurrence_rhs", "fib_lacunary", "pell_lacunary",
    "congruence",
]


def _parity_sign(exponent: int) -> int:
    return -1 if exponent & 1 else 1


def _check_gap(n: int, N: int) -> None:
    if N < 1:
        raise DomainError(f"gap N must be >= 1, got {N}")
    if n < 2 * N:
        raise DomainError(f"need n >= 2N, got n={n}, N={N}")


def gap_depth(n: int, N: int) -> int:
    _check_gap(n, N)
    return (n // N) // 2


@dataclass(frozen=True)
class LacunaryExpansion:
    n: int
    N: int
    d: int
    outer_coefficient: int
    terms: tuple[tuple[int, int], ...]
    residual: tuple[int, int]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "N": self.N,
            "d": self.d,
            "outer": str(self.outer_coefficient),
            "terms": [{"sign": s, "index": i} for s, i in self.terms],
            "residual": {"sign": self.residual[0], "index": self.residual[1]},
            "value": str(lucas_eval(self)),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def format(self) -> str:
        """Render as e.g. ``L_10 = 3·(+L_8 −L_4) + L_2 = 123``."""
        inner = " ".join(f"{'+' if s > 0 else '−'}L_{i}" for s, i in self.terms)
        rs, ri = self.residual
        tail = f"+ L_{ri}" if rs > 0 else f"− L_{ri}"
        return f"L_{self.n} = {self.outer_coefficient}·({inner}) {tail} = {lucas_eval(self)}"


def lucas_expand(n: int, N: int) -> LacunaryExpansion:
    d = gap_depth(n, N)
    terms = tuple(
        (_parity_sign((N + 1) * (i + 1)), n - (2 * i - 1) * N)
        for i in range(1, d + 1)
    )
    residual = (_parity_sign((N + 1) * (d + 2)), n - 2 * d * N)
    return LacunaryExpansion(n, N, d, lucas(N), terms, residual)


def lucas_eval(e: LacunaryExpansion) -> int:
    total = sum(s * lucas(i) for s, i in e.terms)
    rs, ri = e.residual
    return e.outer_coefficient * total + rs * lucas(ri)


def substitute_gap_identity(n: int, N: int) -> tuple[list[tuple[int, int]], tuple[int, int], int]:
    """Expand ``L_n`` by repeatedly applying the one-step gap identity.

    Starting from ``L_n = L_N L_{n-N} + (-1)^(N+1) L_{n-2N}``, the trailing
    term is rewritten the same way while its index stays ``>= 2N``.  Returns the accumulated
    ``(coefficient, index)`` pairs multiplying ``L_N``, the trailing
    ``(coefficient, index)`` and the evaluated value.  Shares no code with
    :func:`lucas_expand`.
    """
    _check_gap(n, N)
    step = -1 if (N + 1) % 2 else 1
    collected: list[tuple[int, int]] = []
    coeff, idx = 1, n
    while idx >= 2 * N:
        collected.append((coeff, idx - N))
        coeff, idx = coeff * step, idx - 2 * N
    value = lucas(N) * sum(c * lucas(i) for c, i in collected) + coeff * lucas(idx)
    return collected, (coeff, idx), value


def gap_recurrence_rhs(spec: SequenceSpec, n: int, N: int, *, as_printed: bool = False) -> int:
    """Right-hand side of the gap-``N`` recurrence for Fibonacci-like ``spec``.

    ``t_n = t_N t_{N-1}^(U-1) t_{(n-1) mod N} + t_{N+1} t_{n-N}
    + t_N^2 sum_{k=2..U} t_{N-1}^(k-2) t_{n-kN}`` with ``U = floor((n-1)/N)``.
    For ``U = 0`` (only ``n = N``) the leading term reduces to ``t_N``.

    ``as_printed=True`` uses the exponent ``U+1`` on the leading term instead,
    which only agrees with ``t_n`` when ``t_{N-1} = 1``.
    """
    if N < 2 or n < N:
        raise DomainError(f"need N >= 2 and n >= N, got n={n}, N={N}")
    t = lambda k: term(spec, k)  # noqa: E731
    U = (n - 1) // N
    tN, tN1 = t(N), t(N - 1)
    if as_printed:
        lead = tN * tN1 ** (U + 1) * t((n - 1) % N)
    elif U == 0:
        lead = tN
    else:
        lead = tN * tN1 ** (U - 1) * t((n - 1) % N)
    tail = sum(tN1 ** (k - 2) * t(n - k * N) for k in range(2, U + 1))
    return lead + t(N + 1) * t(n - N) + tN * tN * tail


def fib_lacunary(n: int, N: int) -> int:
    return gap_recurrence_rhs(FIBONACCI, n, N)


def pell_lacunary(n: int, N: int) -> int:
    return gap_recurrence_rhs(PELL, n, N)


def congruence(n: int, N: int) -> tuple[int, int]:
    """Return ``(residue, quotient)`` of ``L_n - r L_{n-2dN}`` modulo ``L_N``."""
    d = gap_depth(n, N)
    diff = lucas(n) - _parity_sign((N + 1) * (d + 2)) * lucas(n - 2 * d * N)
    quotient, residue = divmod(diff, lucas(N))
    return residue, quotient
