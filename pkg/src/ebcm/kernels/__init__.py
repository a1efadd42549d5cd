"""Event-loop kernels with a compiled fast path and a pure-Python fallback.

The compiled extension is used when it imports cleanly; set EBCM_FORCE_PURE=1
to force the fallback.  Both backends consume pre-drawn uniform arrays and
produce bit-identical results (enforced by the parity tests).
"""
from __future__ import annotations

import os

from . import _pure

_KERNEL_NAMES = [
    "scalar_dlm_run",
    "vector_dlm_run",
    "unit_stream",
    "plate_stream",
    "mzi_stream",
    "wheeler_stream",
    "eraser_stream",
    "two_beam_stream",
    "hbt_stream",
]

if os.environ.get("EBCM_FORCE_PURE"):
    _impl = _pure
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND

unit_step = _pure.unit_step
detector_step = _pure.detector_step

for _name in _KERNEL_NAMES:
    globals()[_name] = getattr(_impl, _name)
del _name


def get_backend(name: str):
    """Return a specific backend module: 'pure' or 'fast' (None if unbuilt)."""
    if name == "pure":
        return _pure
    if name == "fast":
        try:
            from . import _fast

            return _fast
        except ImportError:
            return None
    raise ValueError(f"unknown backend {name!r}")
