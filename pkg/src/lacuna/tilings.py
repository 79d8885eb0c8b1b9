"""Square/domino tilings of linear boards and circular bracelets.

Cells of an ``n``-bracelet are labelled ``a_0 .. a_{n-1}``.  A tiling is
stored as the set of cells where its dominoes start; a domino starting at
``a_s`` covers ``a_s`` and ``a_{(s+1) mod n}``.  A bracelet is out-of-phase
when a domino covers the boundary pair ``(a_{n-1}, a_0)``.

The proof decomposition works with two collections: all ``n``-bracelets, and
all pairs of an ``N``-bracelet with an ``(n-N)``-bracelet.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable

from . import kernels
from .errors import BoundError, DomainError
from .seqcore import board_count as f
from .seqcore import lucas

__all__ = [
    "Piece", "Phase", "Set2Class", "BoardTiling", "Bracelet", "PartitionReport",
    "MAX_BOARD", "MAX_BRACELET", "enumerate_boards", "enumerate_bracelets",
    "classify_phase", "set2_classify", "partition_bracelets", "compute_A",
    "embed_pair", "export_text",
]

MAX_BOARD = 30
MAX_BRACELET = 26


class Piece(enum.Enum):
    SQUARE = 1
    DOMINO = 2

    @property
    def length(self) -> int:
        return self.value


class Phase(enum.Enum):
    IN_PHASE = "in-phase"
    OUT_OF_PHASE = "out-of-phase"


class Set2Class(enum.Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"


def _starts_text(starts: Iterable[int]) -> str:
    starts = sorted(starts)
    return "D:" + ",".join(map(str, starts)) if starts else "-"


def _mask_starts(mask: int) -> tuple[int, ...]:
    out = []
    s = 0
    while mask:
        if mask & 1:
            out.append(s)
        mask >>= 1
        s += 1
    return tuple(out)


@dataclass(frozen=True)
class BoardTiling:
    n: int
    pieces: tuple[Piece, ...]

    def __post_init__(self) -> None:
        if sum(p.length for p in self.pieces) != self.n:
            raise DomainError(f"pieces do not cover a {self.n}-board exactly")

    @classmethod
    def from_starts(cls, n: int, starts: Iterable[int]) -> "BoardTiling":
        starts = set(starts)
        pieces, cell = [], 0
        while cell < n:
            if cell in starts:
                pieces.append(Piece.DOMINO)
                cell += 2
            else:
                pieces.append(Piece.SQUARE)
                cell += 1
        tiling = cls(n, tuple(pieces))
        if set(tiling.domino_starts) != starts:
            raise DomainError(f"domino starts {sorted(starts)} are not a tiling of a {n}-board")
        return tiling

    @property
    def domino_starts(self) -> tuple[int, ...]:
        out, cell = [], 0
        for p in self.pieces:
            if p is Piece.DOMINO:
                out.append(cell)
            cell += p.length
        return tuple(out)

    def to_text(self) -> str:
        return _starts_text(self.domino_starts)


@dataclass(frozen=True)
class Bracelet:
    """A tiling of the circular board on cells ``a_0 .. a_{n-1}``."""

    n: int
    dominoes: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        n = self.n
        if n < 1:
            raise DomainError(f"bracelet size must be >= 1, got {n}")
        object.__setattr__(self, "dominoes", frozenset(self.dominoes))
        covered: set[int] = set()
        for s in self.dominoes:
            if not 0 <= s < n or n < 2:
                raise DomainError(f"domino start {s} invalid on a {n}-bracelet")
            cells = {s, (s + 1) % n}
            if covered & cells:
                raise DomainError(f"overlapping dominoes at {sorted(self.dominoes)}")
            covered |= cells

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Bracelet":
        return cls(n, frozenset(_mask_starts(mask)))

    @classmethod
    def from_text(cls, n: int, text: str) -> "Bracelet":
        text = text.strip()
        if text == "-":
            return cls(n)
        if not text.startswith("D:"):
            raise DomainError(f"cannot parse bracelet {text!r}")
        return cls(n, frozenset(int(s) for s in text[2:].split(",")))

    @property
    def mask(self) -> int:
        return sum(1 << s for s in self.dominoes)

    @property
    def phase(self) -> Phase:
        return classify_phase(self)

    def covering(self) -> list[tuple[int, ...]]:
        """Cells of each piece, in order of the first cell they cover."""
        dom = {s: (s, (s + 1) % self.n) for s in self.dominoes}
        inside = {c for cells in dom.values() for c in cells}
        pieces = list(dom.values()) + [(c,) for c in range(self.n) if c not in inside]
        return sorted(pieces, key=lambda p: p[0])

    def sort_key(self) -> tuple[int, ...]:
        return tuple(sorted(self.dominoes))

    def to_text(self) -> str:
        return _starts_text(self.dominoes)


def enumerate_boards(n: int) -> list[BoardTiling]:
    if n < 0:
        raise DomainError(f"board length must be >= 0, got {n}")
    if n > MAX_BOARD:
        raise BoundError(f"board enumeration limited to n <= {MAX_BOARD}, got {n}")
    return [BoardTiling.from_starts(n, _mask_starts(m)) for m in kernels.active.board_masks(n)]


def enumerate_bracelets(n: int) -> list[Bracelet]:
    if n < 1:
        raise DomainError(f"bracelet size must be >= 1, got {n}")
    if n > MAX_BRACELET:
        raise BoundError(f"bracelet enumeration limited to n <= {MAX_BRACELET}, got {n}")
    return [Bracelet.from_mask(n, m) for m in kernels.active.bracelet_masks(n)]


def classify_phase(b: Bracelet) -> Phase:
    return Phase.OUT_OF_PHASE if b.n >= 2 and (b.n - 1) in b.dominoes else Phase.IN_PHASE


def set2_classify(bN: Bracelet, bM: Bracelet) -> Set2Class:
    out_n = classify_phase(bN) is Phase.OUT_OF_PHASE
    out_m = classify_phase(bM) is Phase.OUT_OF_PHASE
    return [[Set2Class.A, Set2Class.C], [Set2Class.B, Set2Class.D]][out_n][out_m]


def _check_partition_args(n: int, N: int, limit: int) -> None:
    if N < 2 or n < 2 * N:
        raise DomainError(f"partition needs N >= 2 and n >= 2N, got n={n}, N={N}")
    if n > limit:
        raise BoundError(f"n must be <= {limit}, got {n}")


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


@dataclass(frozen=True)
class PartitionReport:
    """Class sizes from enumerating all ``n``-bracelets and all Set-2 pairs.

    ``count_a``/``count_b`` are the image classes among ``n``-bracelets;
    ``set2_a``/``set2_b`` are the corresponding pair counts.  ``total_n`` and
    ``set2_total`` are raw enumeration sizes and ``misplaced`` counts
    ``n``-bracelets falling in zero or several of the four classes.
    """

    n: int
    N: int
    count_a: int
    count_b: int
    count_c: int
    count_d: int
    count_r1: int
    count_r2: int
    A: int
    set2_a: int
    set2_b: int
    total_n: int
    set2_total: int
    misplaced: int

    def checks(self) -> dict[str, bool]:
        n, N = self.n, self.N
        return {
            "disjoint-exhaustive": self.misplaced == 0
            and self.count_a + self.count_b + self.count_r1 + self.count_r2 == self.total_n,
            "a=f_N*f_{n-N}": self.count_a == f(N) * f(n - N),
            "b=f_{N-2}*f_{n-N}": self.count_b == f(N - 2) * f(n - N),
            "r1=f_{N-3}*f_{n-N-1}": self.count_r1 == f(N - 3) * f(n - N - 1),
            "r2=f_{n-2}-f_{N-2}*f_{n-N-2}": self.count_r2 == f(n - 2) - f(N - 2) * f(n - N - 2),
            "r2=f_{N-1}*f_{n-N-1}": self.count_r2 == f(N - 1) * f(n - N - 1),
            "c=f_N*f_{n-N-2}": self.count_c == f(N) * f(n - N - 2),
            "d=f_{N-2}*f_{n-N-2}": self.count_d == f(N - 2) * f(n - N - 2),
            "set2 a,b match images": (self.set2_a, self.set2_b) == (self.count_a, self.count_b),
            "total=L_n": self.total_n == lucas(n),
            "set2=L_N*L_{n-N}": self.set2_total == lucas(N) * lucas(n - N),
            "A=(-1)^(N+1)L_{n-2N}": self.A == _sign(N + 1) * lucas(n - 2 * N),
            "gap identity from counts": self.total_n == self.set2_total + self.A,
        }

    @property
    def ok(self) -> bool:
        return all(self.checks().values())

    def to_dict(self) -> dict:
        keys = ("count_a", "count_b", "count_c", "count_d", "count_r1", "count_r2",
                "A", "set2_a", "set2_b", "total_n", "set2_total", "misplaced")
        out = {"n": str(self.n), "N": str(self.N)}
        out.update({k: str(getattr(self, k)) for k in keys})
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def format(self) -> str:
        return (f"n={self.n} N={self.N} a={self.count_a} b={self.count_b} "
                f"r1={self.count_r1} r2={self.count_r2} c={self.count_c} "
                f"d={self.count_d} A={self.A}")


def partition_bracelets(n: int, N: int) -> PartitionReport:
    _check_partition_args(n, N, MAX_BRACELET)
    k = kernels.active
    a, b, r1, r2, misplaced = k.partition_counts(n, N)
    inph, outph = k.bracelet_phase_counts(n)
    sa, sb, sc, sd = k.set2_counts(N, n - N)
    return PartitionReport(
        n=n, N=N, count_a=a, count_b=b, count_c=sc, count_d=sd,
        count_r1=r1, count_r2=r2, A=(r1 + r2) - (sc + sd),
        set2_a=sa, set2_b=sb, total_n=inph + outph,
        set2_total=sa + sb + sc + sd, misplaced=misplaced,
    )


def compute_A(n: int, N: int, *, enumerate: bool = False) -> int:
    """Signed difference between residual classes and Set-2 classes (c), (d).

    By formula this is ``(-1)^(N+1) L_{n-2N}`` (``n <= 400``); with
    ``enumerate=True`` it is read off :func:`partition_bracelets`.
    """
    if enumerate:
        return partition_bracelets(n, N).A
    _check_partition_args(n, N, 400)
    return _sign(N + 1) * lucas(n - 2 * N)


def embed_pair(bN: Bracelet, bM: Bracelet, cls: Set2Class) -> Bracelet:
    """Glue a class-(a) or class-(b) pair into one ``(N+M)``-bracelet.

    Class (a): the ``N``-tiling occupies ``a_1 .. a_N`` and the ``M``-tiling
    ``a_{N+1} .. a_{n-1}, a_0``.  Class (b): the ``N``-tiling is rotated one
    cell so its wrapping domino lands on ``(a_0, a_1)`` and occupies
    ``a_0 .. a_{N-1}``; the ``M``-tiling occupies ``a_N .. a_{n-1}``.
    """
    if cls not in (Set2Class.A, Set2Class.B):
        raise DomainError(f"only class (a) and (b) pairs are embedded, got {cls.value}")
    if set2_classify(bN, bM) is not cls:
        raise DomainError(f"pair is in class {set2_classify(bN, bM).value}, not {cls.value}")
    N, M = bN.n, bM.n
    n = N + M
    if cls is Set2Class.A:
        starts = {s + 1 for s in bN.dominoes} | {(N + 1 + s) % n for s in bM.dominoes}
    else:
        starts = {(s + 1) % N for s in bN.dominoes} | {N + s for s in bM.dominoes}
    return Bracelet(n, frozenset(starts))


def export_text(tilings: Iterable[BoardTiling | Bracelet]) -> str:
    return "\n".join(t.to_text() for t in tilings)
