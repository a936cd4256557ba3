"""Backend selection for the packed GF(2) kernels.

The compiled extension is preferred when it imported cleanly; otherwise the
numpy fallback is used.  Both produce bit-identical results, so the choice
only affects speed.  Set SPINSPREAD_KERNELS=py to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

_impl = _kernels_py
BACKEND = "python"

if os.environ.get("SPINSPREAD_KERNELS", "").lower() not in ("py", "python"):
    try:
        from . import _kernels_cy as _impl_cy
    except ImportError:
        pass
    else:
        _impl = _impl_cy
        BACKEND = "compiled"

words_for = _impl.words_for
echelonize = _impl.echelonize
mul = _impl.mul
mul_bt = _impl.mul_bt
transpose = _impl.transpose
gather_columns = _impl.gather_columns


def backend() -> str:
    """Name of the kernel backend in use ("compiled" or "python")."""
    return BACKEND
