"""Select the kernel backend at import time.

The compiled ``_ckernels`` extension is preferred; ``_pykernels`` is the
fallback.  Set ``KUMMERBESSEL_BACKEND=python`` to force the fallback.
"""
import os

if os.environ.get("KUMMERBESSEL_BACKEND", "").lower() == "python":
    from . import _pykernels as kernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as kernels
        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as kernels
        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
