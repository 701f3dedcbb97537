"""Selects the elimination kernels: compiled extension or pure Python.

The compiled lane is used when `hochcap._speedups` built successfully and
the environment variable HOCHCAP_PURE is unset.  Both lanes implement the
same two functions with bit-identical output (the reduced row echelon form
is canonical), so switching lanes is purely a performance decision.
"""

import os

from . import _elim_py

try:
    from . import _speedups
except ImportError:
    _speedups = None

_COMPILED_OK = _speedups is not None
_active = "pure" if (os.environ.get("HOCHCAP_PURE") or not _COMPILED_OK) else "compiled"


def compiled_available():
    return _COMPILED_OK


def active_lane():
    return _active


def set_lane(name):
    """Force a lane ("pure" | "compiled" | "auto").  Returns the old name."""
    global _active
    old = _active
    if name == "auto":
        name = "compiled" if _COMPILED_OK else "pure"
    if name == "compiled" and not _COMPILED_OK:
        raise RuntimeError("compiled kernels are not available")
    if name not in ("pure", "compiled"):
        raise ValueError(f"unknown lane {name!r}")
    _active = name
    return old


def _impl():
    return _speedups if _active == "compiled" else _elim_py


def build_rref(field, rows, ncols, pivot_limit=None, stop_on_defect=False):
    """Dispatch to the active lane, picking the kernel from the field."""
    impl = _impl()
    if field.kind == "Q":
        return impl.build_rref_rational(rows, ncols, pivot_limit, stop_on_defect)
    return impl.build_rref_mod_p(rows, ncols, field.p, pivot_limit, stop_on_defect)
