"""Numerical kernel backends.

Two interchangeable implementations of the min-slack SDP kernel exist: a
compiled Cython extension (`_speedups`) and a pure numpy reference
(`reference`).  Selection happens once at import time:

* ``GAUSSBOUND_BACKEND=compiled`` requires the extension and raises if it
  is missing;
* ``GAUSSBOUND_BACKEND=python`` forces the reference implementation;
* unset or ``auto`` picks the extension when available.

Both expose identical semantics; the test suite checks their agreement.
"""

from __future__ import annotations

import os
from typing import Callable

from . import reference

__all__ = [
    "active_backend",
    "available_backends",
    "solve_min_slack_kernel",
    "STATUS_OPTIMAL",
    "STATUS_MAX_ITER",
    "STATUS_NUMERICAL_FAILURE",
]

STATUS_OPTIMAL = reference.STATUS_OPTIMAL
STATUS_MAX_ITER = reference.STATUS_MAX_ITER
STATUS_NUMERICAL_FAILURE = reference.STATUS_NUMERICAL_FAILURE

try:
    from . import _speedups
except ImportError:
    _speedups = None


def _select() -> tuple[str, Callable]:
    choice = os.environ.get("GAUSSBOUND_BACKEND", "auto").strip().lower()
    if choice not in ("auto", "compiled", "python"):
        raise ValueError(
            f"GAUSSBOUND_BACKEND must be auto, compiled or python, got {choice!r}"
        )
    if choice == "python":
        return "python", reference.solve_min_slack_kernel
    if _speedups is not None and hasattr(_speedups, "solve_min_slack_kernel"):
        return "compiled", _speedups.solve_min_slack_kernel
    if choice == "compiled":
        raise ImportError(
            "GAUSSBOUND_BACKEND=compiled but the _speedups extension is not built"
        )
    return "python", reference.solve_min_slack_kernel


_ACTIVE_NAME, solve_min_slack_kernel = _select()


def active_backend() -> str:
    """Name of the kernel backend selected at import time."""
    return _ACTIVE_NAME


def available_backends() -> tuple[str, ...]:
    """Backends usable in this installation."""
    if _speedups is not None and hasattr(_speedups, "solve_min_slack_kernel"):
        return ("compiled", "python")
    return ("python",)


def get_kernel(name: str) -> Callable:
    """Kernel implementation by backend name, independent of selection."""
    if name == "python":
        return reference.solve_min_slack_kernel
    if name == "compiled":
        if _speedups is None or not hasattr(_speedups, "solve_min_slack_kernel"):
            raise ImportError("the _speedups extension is not built")
        return _speedups.solve_min_slack_kernel
    raise ValueError(f"unknown backend {name!r}")
