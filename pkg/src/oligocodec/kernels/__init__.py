"""Kernel backend selection: compiled extension if present, NumPy otherwise.

Set ``OLIGOCODEC_PURE=1`` to force the NumPy fallback (used by the
benchmark and the backend-equivalence tests).
"""

from __future__ import annotations

import os

if os.environ.get("OLIGOCODEC_PURE"):
    from . import _fallback as _impl

    BACKEND = "fallback"
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]

        BACKEND = "native"
    except ImportError:
        from . import _fallback as _impl  # type: ignore[no-redef]

        BACKEND = "fallback"

analyze_rows = _impl.analyze_rows
synthesize_rows = _impl.synthesize_rows
apply_read_edits = _impl.apply_read_edits

__all__ = ["BACKEND", "analyze_rows", "synthesize_rows", "apply_read_edits"]
