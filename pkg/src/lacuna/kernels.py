"""Kernel backend selection.

The compiled ``_ckernels`` module is used when it was built; otherwise the
pure-Python ``_pykernels`` module is loaded.  Setting ``LACUNA_PURE_PYTHON=1``
forces the fallback.
"""
from __future__ import annotations

import importlib
import os
from types import ModuleType

from . import _pykernels

__all__ = ["active", "available_backends", "load_backend"]


def load_backend(name: str) -> ModuleType:
    if name == "python":
        return _pykernels
    if name == "cython":
        return importlib.import_module("lacuna._ckernels")
    raise ValueError(f"unknown kernel backend {name!r}")


def available_backends() -> list[str]:
    names = ["python"]
    try:
        load_backend("cython")
    except ImportError:
        pass
    else:
        names.insert(0, "cython")
    return names


def _select() -> ModuleType:
    if os.environ.get("LACUNA_PURE_PYTHON", "") not in ("", "0"):
        return _pykernels
    try:
        return load_backend("cython")
    except ImportError:
        return _pykernels


active = _select()
