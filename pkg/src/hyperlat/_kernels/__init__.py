"""Hot loops with a compiled implementation and a pure-Python fallback.

The compiled module is used when it imports; set ``HYPERLAT_PURE_PYTHON=1``
to force the fallback.
"""

import os

from hyperlat._kernels import _pykernels

BACKEND = "python"
simple_cycles = _pykernels.simple_cycles
line_graph_pairs = _pykernels.line_graph_pairs

if os.environ.get("HYPERLAT_PURE_PYTHON") != "1":
    try:
        from hyperlat._kernels import _ckernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        simple_cycles = _ckernels.simple_cycles
        line_graph_pairs = _ckernels.line_graph_pairs

__all__ = ["BACKEND", "simple_cycles", "line_graph_pairs"]
