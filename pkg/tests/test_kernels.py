import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lacuna import _pykernels, kernels

compiled = pytest.mark.skipif("cython" not in kernels.available_backends(),
                              reason="compiled kernels not built")


def test_python_backend_always_available():
    assert "python" in kernels.available_backends()
    assert kernels.load_backend("python") is _pykernels


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.load_backend("fortran")


def test_env_var_forces_fallback():
    out = subprocess.run(
        [sys.executable, "-c", "from lacuna import kernels; print(kernels.active.BACKEND)"],
        env={"LACUNA_PURE_PYTHON": "1", "PATH": ""}, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@compiled
@settings(max_examples=60, deadline=None)
@given(st.integers(0, 18))
def test_backends_agree_on_enumeration(n):
    c = kernels.load_backend("cython")
    assert c.board_masks(n) == _pykernels.board_masks(n)
    if n >= 1:
        assert c.bracelet_masks(n) == _pykernels.bracelet_masks(n)
        assert c.bracelet_phase_counts(n) == _pykernels.bracelet_phase_counts(n)


@compiled
@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9).flatmap(lambda N: st.tuples(st.integers(2 * N, 19), st.just(N))))
def test_backends_agree_on_partition(args):
    n, N = args
    c = kernels.load_backend("cython")
    assert c.partition_counts(n, N) == _pykernels.partition_counts(n, N)
    assert c.set2_counts(N, n - N) == _pykernels.set2_counts(N, n - N)


@compiled
def test_compiled_kernel_rejects_oversized():
    c = kernels.load_backend("cython")
    with pytest.raises(ValueError):
        c.bracelet_masks(70)
