"""Select the kernel implementation at import time.

The compiled ``_speedups`` extension is preferred; set ``SLPGRAM_PURE=1`` to
force the pure-Python fallback.
"""

import os

from . import _purepy

if os.environ.get("SLPGRAM_PURE", "") not in ("", "0"):
    kernels = _purepy
else:
    try:
        from . import _speedups as kernels
    except ImportError:  # extension not built
        kernels = _purepy

NAME = "compiled" if kernels is not _purepy else "python"

BACKENDS = {"python": _purepy}
if kernels is not _purepy:
    BACKENDS["compiled"] = kernels
else:
    try:
        from . import _speedups

        BACKENDS["compiled"] = _speedups
    except ImportError:
        pass
