"""Backend selection for the field kernels.

The compiled extension is used when it was built; set ``GRAVITON_PURE_PYTHON=1``
to force the numpy fallback.
"""

import os

if os.environ.get("GRAVITON_PURE_PYTHON", "") not in ("", "0"):
    from . import _ghkernel_py as backend

    BACKEND = "python"
else:
    try:
        from . import _ghkernel as backend

        BACKEND = "cython"
    except ImportError:
        from . import _ghkernel_py as backend

        BACKEND = "python"

potential_terms = backend.potential_terms
center_terms = backend.center_terms
gauge_terms = backend.gauge_terms
