import itertools
import json

import pytest

from conftest import brute_tilings
from lacuna.errors import BoundError, DomainError
from lacuna.seqcore import board_count as f
from lacuna.seqcore import lucas
from lacuna.tilings import (Bracelet, BoardTiling, Phase, Piece, Set2Class,
                            classify_phase, compute_A, embed_pair,
                            enumerate_boards, enumerate_bracelets, export_text,
                            partition_bracelets, set2_classify)

S, D = Piece.SQUARE, Piece.DOMINO


def test_boards_small(backend):
    assert [b.pieces for b in enumerate_boards(2)] == [(S, S), (D,)]
    assert [b.pieces for b in enumerate_boards(0)] == [()]
    assert len(enumerate_boards(4)) == 5


@pytest.mark.parametrize("n", range(0, 15))
def test_boards_match_brute_force(backend, n):
    assert [b.domino_starts for b in enumerate_boards(n)] == brute_tilings(n, cyclic=False)


@pytest.mark.parametrize("n", range(1, 15))
def test_bracelets_match_brute_force(backend, n):
    got = [tuple(sorted(b.dominoes)) for b in enumerate_bracelets(n)]
    assert got == brute_tilings(n, cyclic=True)
    assert len(set(got)) == len(got)


def test_bracelets_small(backend):
    four = enumerate_bracelets(4)
    assert len(four) == 7
    assert sum(b.phase is Phase.IN_PHASE for b in four) == 5
    assert sum(b.phase is Phase.OUT_OF_PHASE for b in four) == 2
    one = enumerate_bracelets(1)
    assert len(one) == 1 and one[0].dominoes == frozenset() and one[0].phase is Phase.IN_PHASE
    assert export_text(enumerate_bracelets(2)).splitlines() == ["-", "D:0", "D:1"]


def test_enumeration_bounds():
    with pytest.raises(BoundError):
        enumerate_boards(31)
    with pytest.raises(BoundError):
        enumerate_bracelets(27)
    with pytest.raises(DomainError):
        enumerate_boards(-1)
    with pytest.raises(DomainError):
        enumerate_bracelets(0)


def test_board_tiling_invariants():
    with pytest.raises(DomainError):
        BoardTiling(3, (D, D))
    with pytest.raises(DomainError):
        BoardTiling.from_starts(4, [0, 1])
    assert BoardTiling.from_starts(5, [1, 3]).pieces == (S, D, D)
    assert BoardTiling.from_starts(5, [1, 3]).to_text() == "D:1,3"


def test_bracelet_invariants():
    with pytest.raises(DomainError):
        Bracelet(4, frozenset({0, 1}))
    with pytest.raises(DomainError):
        Bracelet(4, frozenset({3, 0}))
    with pytest.raises(DomainError):
        Bracelet(1, frozenset({0}))
    with pytest.raises(DomainError):
        Bracelet(4, frozenset({4}))
    b = Bracelet(6, frozenset({5, 2}))
    assert b.covering() == [(1,), (2, 3), (4,), (5, 0)]
    assert Bracelet.from_text(6, b.to_text()) == b
    assert b.to_text() == "D:2,5"
    assert Bracelet.from_text(3, "-") == Bracelet(3)


@pytest.mark.parametrize("b,phase", [
    (Bracelet(2, frozenset({1})), Phase.OUT_OF_PHASE),
    (Bracelet(7), Phase.IN_PHASE),
    (Bracelet(4, frozenset({0, 2})), Phase.IN_PHASE),
    (Bracelet(4, frozenset({1, 3})), Phase.OUT_OF_PHASE),
])
def test_classify_phase(b, phase):
    assert classify_phase(b) is phase


def test_set2_classify():
    inn, out = Bracelet(3), Bracelet(3, frozenset({2}))
    assert set2_classify(inn, inn) is Set2Class.A
    assert set2_classify(out, inn) is Set2Class.B
    assert set2_classify(inn, out) is Set2Class.C
    assert set2_classify(out, out) is Set2Class.D


@pytest.mark.parametrize("n,N,counts", [
    (8, 3, dict(count_a=24, count_b=8, count_r1=5, count_r2=10, count_c=9, count_d=3, A=3)),
    (8, 2, dict(count_a=26, count_b=13, count_r1=0, count_r2=8, count_c=10, count_d=5, A=-7)),
    (6, 3, dict(A=2)),
])
def test_partition_examples(backend, n, N, counts):
    rep = partition_bracelets(n, N)
    for k, v in counts.items():
        assert getattr(rep, k) == v, k
    assert rep.ok, rep.checks()


def test_partition_report_sums():
    rep = partition_bracelets(8, 3)
    assert rep.count_a + rep.count_b + rep.count_r1 + rep.count_r2 == 47
    assert rep.set2_total == 44
    data = json.loads(rep.to_json())
    assert data["count_a"] == "24" and data["A"] == "3"
    assert all(isinstance(v, str) for v in data.values())


def partition_oracle(n, N):
    """Class sizes computed from brute-force start sets, keyed on the boundary pairs."""
    counts = {"a": 0, "b": 0, "1": 0, "2": 0}
    for starts in brute_tilings(n, cyclic=True):
        s = set(starts)
        if 0 not in s and N not in s:
            counts["a"] += 1
        elif 0 in s and N - 1 not in s:
            counts["b"] += 1
        elif 0 in s:
            counts["1"] += 1
        else:
            counts["2"] += 1
    return counts


@pytest.mark.parametrize("n,N", [(n, N) for n in range(4, 13) for N in range(2, n // 2 + 1)])
def test_partition_matches_oracle(backend, n, N):
    rep = partition_bracelets(n, N)
    o = partition_oracle(n, N)
    assert (rep.count_a, rep.count_b, rep.count_r1, rep.count_r2) == (o["a"], o["b"], o["1"], o["2"])
    assert rep.misplaced == 0


@pytest.mark.parametrize("n,N", [(5, 3), (26 + 2, 2), (8, 1)])
def test_partition_domain(n, N):
    with pytest.raises(DomainError):
        partition_bracelets(n, N)


def test_compute_A():
    assert compute_A(8, 3) == 3
    assert compute_A(8, 2) == -7
    for N in range(2, 12):
        assert compute_A(2 * N, N) == (-1) ** (N + 1) * 2
    for n in range(6, 21):
        for N in range(2, n // 2 + 1):
            assert compute_A(n, N, enumerate=True) == compute_A(n, N)
    assert compute_A(400, 7) == lucas(386)
    with pytest.raises(BoundError):
        compute_A(401, 2)


def test_embed_examples():
    assert embed_pair(Bracelet(3), Bracelet(5), Set2Class.A) == Bracelet(8)
    out2 = Bracelet(2, frozenset({1}))
    img = embed_pair(out2, Bracelet(6), Set2Class.B)
    assert img == Bracelet(8, frozenset({0}))


def test_embed_rejects_c_and_d():
    out3 = Bracelet(3, frozenset({2}))
    with pytest.raises(DomainError):
        embed_pair(Bracelet(3), out3, Set2Class.C)
    with pytest.raises(DomainError):
        embed_pair(out3, out3, Set2Class.D)
    with pytest.raises(DomainError):
        embed_pair(Bracelet(3), Bracelet(3), Set2Class.B)


def embedding_images(n, N):
    images = {Set2Class.A: [], Set2Class.B: []}
    for bN, bM in itertools.product(enumerate_bracelets(N), enumerate_bracelets(n - N)):
        cls = set2_classify(bN, bM)
        if cls in images:
            images[cls].append(embed_pair(bN, bM, cls))
    return images


def test_embed_image_count_8_3():
    images = embedding_images(8, 3)
    assert len(set(images[Set2Class.A]) | set(images[Set2Class.B])) == 32


@pytest.mark.parametrize("n,N", [(n, N) for n in range(4, 17) for N in range(2, n // 2 + 1)])
def test_embed_is_bijection_onto_image_classes(n, N):
    images = embedding_images(n, N)
    a_img, b_img = images[Set2Class.A], images[Set2Class.B]
    assert len(set(a_img)) == len(a_img)
    assert len(set(b_img)) == len(b_img)
    assert not set(a_img) & set(b_img)
    expected_a = {b for b in enumerate_bracelets(n) if 0 not in b.dominoes and N not in b.dominoes}
    expected_b = {b for b in enumerate_bracelets(n) if 0 in b.dominoes and N - 1 not in b.dominoes}
    assert set(a_img) == expected_a
    assert set(b_img) == expected_b
    assert len(a_img) == f(N) * f(n - N)
    assert len(b_img) == f(N - 2) * f(n - N)
