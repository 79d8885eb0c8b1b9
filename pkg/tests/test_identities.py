import json

import pytest

from lacuna import identities as ids
from lacuna.errors import DomainError


@pytest.mark.parametrize("m,n,lhs,rhs", [(4, 3, 13, 13), (1, 0, 1, 1), (10, 5, 610, 610)])
def test_addition(m, n, lhs, rhs):
    rep = ids.check_addition(m, n)
    assert (rep.lhs, rep.rhs, rep.passed) == (lhs, rhs, True)


@pytest.mark.parametrize("m,n,lhs", [(5, 3, -1), (3, 3, 0), (10, 4, 8)])
def test_docagne(m, n, lhs):
    rep = ids.check_docagne(m, n)
    assert rep.lhs == rep.rhs == lhs
    assert rep.passed


@pytest.mark.parametrize("n,lhs", [(5, 11), (1, 1), (12, 322)])
def test_lucas_bridge(n, lhs):
    rep = ids.check_lucas_bridge(n)
    assert rep.lhs == rep.rhs == lhs


@pytest.mark.parametrize("m,n,value", [(4, 3, 21), (0, 6, 13), (5, 5, 89)])
def test_tiling_addition(m, n, value):
    rep = ids.check_tiling_addition(m, n)
    assert rep.lhs == rep.rhs == value


@pytest.mark.parametrize("m,n,value", [(5, 3, -1), (4, 4, 0), (7, 2, 5)])
def test_tiling_docagne(m, n, value):
    rep = ids.check_tiling_docagne(m, n)
    assert rep.lhs == rep.rhs == value


@pytest.mark.parametrize("n,N,value", [(8, 3, 47), (8, 2, 47), (6, 3, 18)])
def test_gap_identity(n, N, value):
    rep = ids.check_gap_identity(n, N)
    assert rep.lhs == rep.rhs == value


@pytest.mark.parametrize("call", [
    lambda: ids.check_addition(0, 3),
    lambda: ids.check_addition(2, -1),
    lambda: ids.check_docagne(2, 3),
    lambda: ids.check_lucas_bridge(0),
    lambda: ids.check_tiling_addition(-1, 2),
    lambda: ids.check_tiling_docagne(1, 2),
    lambda: ids.check_gap_identity(5, 3),
    lambda: ids.check_gap_identity(5, 0),
])
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


def test_zero_convention_breaks_bridge_at_zero():
    # the reason n = 0 is excluded: F_{-1} + F_1 = 1 while L_0 = 2
    from lacuna.seqcore import fib, lucas
    assert fib(-1) + fib(1) != lucas(0)


def test_report_passed_tracks_equality():
    rep = ids.VerificationReport("x", (("n", 1),), 3, 4)
    assert not rep.passed
    assert ids.VerificationReport("x", (), 5, 5).passed


def test_report_json():
    rep = ids.check_addition(100, 100)
    data = json.loads(rep.to_json())
    assert set(data) == {"identity", "params", "lhs", "rhs", "passed"}
    assert data["params"] == {"m": "100", "n": "100"}
    assert int(data["lhs"]) == rep.lhs and isinstance(data["lhs"], str)
    assert data["passed"] is True
