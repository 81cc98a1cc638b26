"""Counting-kernel backend selection.

The hot per-node kernels exist twice with identical signatures: a compiled
Cython extension (``_ckern``) and a pure-Python fallback (``_pure``).  The
compiled backend is preferred when importable; ``HYPERCC_KERNELS`` forces
the choice (``compiled``, ``pure`` or ``auto``).
"""

from __future__ import annotations

import os

_choice = os.environ.get("HYPERCC_KERNELS", "auto")
if _choice not in ("auto", "compiled", "pure"):
    raise ImportError(f"HYPERCC_KERNELS must be auto|compiled|pure, got {_choice!r}")

active = None
if _choice in ("auto", "compiled"):
    try:
        from . import _ckern as active
        BACKEND = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise
if active is None:
    from . import _pure as active
    BACKEND = "pure"


def get_backend(name: str):
    """Return a specific kernel module (used by benchmarks and tests)."""
    if name == "pure":
        from . import _pure
        return _pure
    if name == "compiled":
        from . import _ckern
        return _ckern
    if name in ("auto", None):
        return active
    raise ValueError(f"unknown kernel backend: {name!r}")


def available_backends() -> list[str]:
    out = ["pure"]
    try:
        from . import _ckern  # noqa: F401
        out.insert(0, "compiled")
    except ImportError:
        pass
    return out
