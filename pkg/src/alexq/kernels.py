"""Kernel backend selection.

The compiled extension `alexq._kernels_cy` is preferred when importable;
otherwise the pure-Python fallback `alexq._kernels_py` is used. Setting
ALEXQ_PURE=1 in the environment forces the fallback (useful for timing
comparisons and for debugging). Both backends implement the same interface
and produce identical results; `tests/test_kernels.py` checks the parity.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("ALEXQ_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

compose_perm = _impl.compose_perm
invert_perm = _impl.invert_perm
enumerate_linear_bijections = _impl.enumerate_linear_bijections
conjugacy_partition = _impl.conjugacy_partition


def available_backends() -> dict[str, object]:
    """Name -> module for every importable backend (for benchmarks/tests)."""
    backends: dict[str, object] = {"python": _kernels_py}
    try:
        from . import _kernels_cy

        backends["cython"] = _kernels_cy
    except ImportError:
        pass
    return backends
