"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``ITALDOM_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("ITALDOM_PURE_PYTHON"):
    kernels = _pykernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        kernels = _pykernels

COMPILED = kernels is not _pykernels
