"""Kernel backend selection.

The hot search loops have two interchangeable implementations: numba
JIT-compiled kernels (default when numba is importable) and a pure-numpy
fallback.  ``STARINV_BACKEND=numpy`` or ``=numba`` forces one at process
start; :func:`set_backend` switches in-process (used by tests and the
benchmark).
"""

from __future__ import annotations

import os

from ..errors import InvalidParameterError
from . import numpy_backend

_active = None


def _load(name):
    if name == "numpy":
        return numpy_backend
    if name == "numba":
        from . import numba_backend
        return numba_backend
    raise InvalidParameterError(
        f"unknown backend {name!r}; expected 'numba' or 'numpy'")


def get():
    """The active backend module (resolving the env flag on first use)."""
    global _active
    if _active is None:
        name = os.environ.get("STARINV_BACKEND", "").strip().lower()
        if name:
            _active = _load(name)
        else:
            try:
                _active = _load("numba")
            except ImportError:
                _active = numpy_backend
    return _active


def set_backend(name):
    """Force a backend for the rest of the process; returns the module."""
    global _active
    _active = _load(name)
    return _active
