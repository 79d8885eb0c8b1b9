"""Exhaustive parameter sweeps over the identities and recurrences."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import identities as ids
from .lacunary import (congruence, fib_lacunary, lucas_eval, lucas_expand,
                       gap_recurrence_rhs, pell_lacunary, substitute_gap_identity)
from .seqcore import PELL_AS_PRINTED, fib, lucas, pell, term
from .tilings import MAX_BRACELET, partition_bracelets

__all__ = ["SweepResult", "SUITES", "run_suite", "pell_as_printed_discrepancy"]


@dataclass
class SweepResult:
    suite: str
    passed: int = 0
    total: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total

    def record(self, ok: bool, **params) -> None:
        self.total += 1
        if ok:
            self.passed += 1
        elif len(self.failures) < 20:
            self.failures.append({k: str(v) for k, v in params.items()})

    def to_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "total": self.total,
                "ok": self.ok, "failures": self.failures}

    def summary(self) -> str:
        status = "ok" if self.ok else "FAIL"
        return f"{self.suite}: passed {self.passed}/{self.total} [{status}]"


def _reports(name: str, checks: Iterable) -> SweepResult:
    res = SweepResult(name)
    for rep in checks:
        res.record(rep.passed, **dict(rep.parameters))
    return res


def _pairs_gap(max_n: int, max_gap: int, lo_gap: int = 1) -> Iterator[tuple[int, int]]:
    for N in range(lo_gap, max_gap + 1):
        for n in range(2 * N, max_n + 1):
            yield n, N


def suite_addition(max_n=None, max_gap=None) -> SweepResult:
    top = max_n or 60
    return _reports("addition", (ids.check_addition(m, n)
                                 for m in range(1, top + 1) for n in range(top + 1)))


def suite_docagne(max_n=None, max_gap=None) -> SweepResult:
    top = max_n or 60
    return _reports("docagne", (ids.check_docagne(m, n)
                                for m in range(top + 1) for n in range(m + 1)))


def suite_bridge(max_n=None, max_gap=None) -> SweepResult:
    return _reports("bridge", (ids.check_lucas_bridge(n) for n in range(1, (max_n or 200) + 1)))


def suite_tiling_addition(max_n=None, max_gap=None) -> SweepResult:
    top = max_n or 60
    return _reports("tiling-addition", (ids.check_tiling_addition(m, n)
                                        for m in range(top + 1) for n in range(top + 1)))


def suite_tiling_docagne(max_n=None, max_gap=None) -> SweepResult:
    top = max_n or 60
    return _reports("tiling-docagne", (ids.check_tiling_docagne(m, n)
                                       for m in range(top + 1) for n in range(m + 1)))


def suite_gap(max_n=None, max_gap=None) -> SweepResult:
    return _reports("gap", (ids.check_gap_identity(n, N)
                            for n, N in _pairs_gap(max_n or 200, max_gap or 15)))


def suite_thm1(max_n=None, max_gap=None) -> SweepResult:
    res = SweepResult("thm1")
    for N in range(2, (max_gap or 12) + 1):
        for n in range(N, (max_n or 400) + 1):
            res.record(fib_lacunary(n, N) == fib(n), n=n, N=N)
    return res


def suite_thm2(max_n=None, max_gap=None) -> SweepResult:
    """Expansion value equals ``L_n`` and matches the substitution oracle term by term."""
    res = SweepResult("thm2")
    for n, N in _pairs_gap(max_n or 400, max_gap or 12):
        e = lucas_expand(n, N)
        collected, trailing, value = substitute_gap_identity(n, N)
        same_shape = (list(e.terms) == collected and e.residual == trailing
                      and e.d == len(collected))
        res.record(lucas_eval(e) == lucas(n) == value and same_shape, n=n, N=N)
    return res


def suite_corollary(max_n=None, max_gap=None) -> SweepResult:
    res = SweepResult("corollary")
    for n, N in _pairs_gap(max_n or 400, max_gap or 12):
        residue, _ = congruence(n, N)
        res.record(residue == 0, n=n, N=N)
    return res


def suite_pell(max_n=None, max_gap=None) -> SweepResult:
    res = SweepResult("pell")
    for N in range(2, (max_gap or 12) + 1):
        for n in range(N, (max_n or 400) + 1):
            res.record(pell_lacunary(n, N) == pell(n), n=n, N=N)
    return res


def pell_as_printed_discrepancy(n: int = 5, N: int = 2) -> tuple[int, int]:
    """Formula value and true term under the seeds ``P_0 = P_1 = 1``."""
    return gap_recurrence_rhs(PELL_AS_PRINTED, n, N), term(PELL_AS_PRINTED, n)


def suite_partition(max_n=None, max_gap=None) -> SweepResult:
    res = SweepResult("partition")
    top = max_n or 20
    if top > MAX_BRACELET:
        raise ValueError(f"partition sweep limited to n <= {MAX_BRACELET}")
    for n in range(6, top + 1):
        for N in range(2, min(n // 2, max_gap or n) + 1):
            rep = partition_bracelets(n, N)
            checks = rep.checks()
            res.record(all(checks.values()), n=n, N=N,
                       failed=",".join(k for k, v in checks.items() if not v))
    return res


SUITES: dict[str, Callable[..., SweepResult]] = {
    "addition": suite_addition,
    "docagne": suite_docagne,
    "bridge": suite_bridge,
    "tiling-addition": suite_tiling_addition,
    "tiling-docagne": suite_tiling_docagne,
    "gap": suite_gap,
    "thm1": suite_thm1,
    "thm2": suite_thm2,
    "corollary": suite_corollary,
    "pell": suite_pell,
    "partition": suite_partition,
}


def run_suite(name: str, max_n: int | None = None, max_gap: int | None = None) -> list[SweepResult]:
    if name == "all":
        # bounds apply per suite defaults; an explicit max_n is not shared
        # across suites with different scales
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(name)
    return [SUITES[name](max_n, max_gap)]
