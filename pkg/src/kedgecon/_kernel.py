"""Select the flow kernel backend at import.

The compiled extension is used when it was built; set
``KEDGECON_PURE_PYTHON=1`` to force the pure-Python twin.
"""

import os

from . import _kernel_py

if os.environ.get("KEDGECON_PURE_PYTHON", "") not in ("", "0"):
    FlowGraph = _kernel_py.FlowGraph
    BACKEND = "python"
else:
    try:
        from ._kernel_ext import FlowGraph
        BACKEND = "cython"
    except ImportError:  # extension not built
        FlowGraph = _kernel_py.FlowGraph
        BACKEND = "python"

MAX_MASK_VERTICES = _kernel_py.MAX_MASK_VERTICES

__all__ = ["FlowGraph", "BACKEND", "MAX_MASK_VERTICES"]
