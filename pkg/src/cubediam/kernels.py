"""Hot-loop kernels: the compiled extension when importable, numpy otherwise.

Set ``CUBEDIAM_PURE=1`` to force the numpy fallback.
"""

from __future__ import annotations

import os

from . import _fallback

UNSEEN = _fallback.UNSEEN

try:
    if os.environ.get("CUBEDIAM_PURE"):
        raise ImportError("numpy fallback requested")
    from . import _kernels as _impl

    BACKEND = "compiled"
except ImportError:
    _impl = _fallback
    BACKEND = "numpy"

build_table = _impl.build_table
collect_unseen = _impl.collect_unseen
claim = _impl.claim


def implementation(name: str):
    """Kernel module by name (``"compiled"`` or ``"numpy"``), for benchmarks and tests."""
    if name == "numpy":
        return _fallback
    if name == "compiled":
        from . import _kernels

        return _kernels
    raise ValueError(name)
