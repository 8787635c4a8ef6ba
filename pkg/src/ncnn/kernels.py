"""Backend selection for the hot loops.

The compiled extension is used when it was built; set ``NCNN_PURE=1`` to force
the pure-Python implementation.
"""

import os

from . import _pykernels

BACKEND = "python"
if os.environ.get("NCNN_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
else:
    _impl = _pykernels

reflection_length = _impl.reflection_length
has_crossing = _impl.has_crossing
has_nesting = _impl.has_nesting

__all__ = ["BACKEND", "reflection_length", "has_crossing", "has_nesting"]
