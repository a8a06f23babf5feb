"""Kernel backend selection.

The compiled extension is preferred when present; set ``CMVKIT_PURE=1`` to
force the numpy fallback (useful for benchmarking and debugging).
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("CMVKIT_PURE"):
    _impl = pure
else:
    try:
        from . import _fastcore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND: str = _impl.BACKEND
matpow_entry_table = _impl.matpow_entry_table
toeplitz_inner = _impl.toeplitz_inner
cauchy_product = _impl.cauchy_product


def available_backends():
    """Names of the importable backends on this installation."""
    names = [pure.BACKEND]
    try:
        from . import _fastcore

        names.append(_fastcore.BACKEND)
    except ImportError:
        pass
    return names
