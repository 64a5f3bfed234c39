"""Pick the kernel implementation at import time.

The compiled module is used when it imports; setting ``TOUGHORE_PURE=1``
forces the pure-Python fallback.
"""

import os

from toughore import _pykernels

python_kernels = _pykernels

try:
    if os.environ.get("TOUGHORE_PURE"):
        raise ImportError("pure-Python kernels requested")
    from toughore import _ckernels as kernels
    BACKEND = "compiled"
except ImportError:
    kernels = _pykernels
    BACKEND = "python"

__all__ = ["BACKEND", "kernels", "python_kernels"]
