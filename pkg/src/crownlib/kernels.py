"""Select the compiled kernels when built, else the pure-Python fallback.

Set ``CROWNLIB_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("CROWNLIB_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

IMPLEMENTATION: str = _impl.IMPLEMENTATION
admissible = _impl.admissible
crown_with_edge = _impl.crown_with_edge
find_crown = _impl.find_crown
refine = _impl.refine
