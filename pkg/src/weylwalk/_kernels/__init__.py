"""Kernel backend selection.

The compiled Cython kernels are preferred when the extension was built;
otherwise the NumPy implementation is used.  Set ``WEYLWALK_KERNELS=python``
(or ``cython``) to force a backend, e.g. for benchmarking.
"""

from __future__ import annotations

import os

from . import _walk_py

_FORCED = os.environ.get("WEYLWALK_KERNELS", "").strip().lower()

try:
    from . import _walk_cy
except ImportError:
    _walk_cy = None

if _FORCED == "python":
    _impl = _walk_py
elif _FORCED == "cython":
    if _walk_cy is None:
        raise ImportError(
            "WEYLWALK_KERNELS=cython but the compiled extension is not available"
        )
    _impl = _walk_cy
else:
    _impl = _walk_cy if _walk_cy is not None else _walk_py

BACKEND = "cython" if _impl is _walk_cy else "python"

position_evolve = _impl.position_evolve
kspace_evolve = _impl.kspace_evolve


def available_backends() -> tuple[str, ...]:
    """Names of the kernel backends importable in this environment."""
    return ("python", "cython") if _walk_cy is not None else ("python",)


__all__ = ["position_evolve", "kspace_evolve", "BACKEND", "available_backends"]
