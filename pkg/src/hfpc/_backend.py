"""Scan backend selection: compiled extension if built, pure Python otherwise.

Set HFP_PURE=1 to force the pure backend (used by the benchmark and by the
backend-equality tests).
"""

from __future__ import annotations

import os

from . import _scan_py

if os.environ.get("HFP_PURE") == "1":
    _impl = _scan_py
    COMPILED = False
else:
    try:
        from . import _scan as _impl  # type: ignore[no-redef]

        COMPILED = True
    except ImportError:
        _impl = _scan_py
        COMPILED = False

scan_two_generator = _impl.scan_two_generator
scan_quaternion = _impl.scan_quaternion
gosper_next = _impl.gosper_next
least_geq_with_weight = _impl.least_geq_with_weight

BACKEND_NAME = "compiled" if COMPILED else "pure-python"
