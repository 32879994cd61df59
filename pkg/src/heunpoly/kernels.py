"""Selects the RK4 integration kernel at import time.

Prefers the compiled extension (heunpoly._rk4); falls back to the
pure-Python twin when it is missing or when HEUNPOLY_PURE is set in the
environment.  Both implementations are kept in operation-for-operation
lockstep and must agree on their output doubles.
"""

from __future__ import annotations

import os

if os.environ.get("HEUNPOLY_PURE"):
    from . import _rk4_fallback as _impl

    COMPILED = False
else:
    try:
        from . import _rk4 as _impl  # type: ignore[attr-defined]

        COMPILED = True
    except ImportError:
        from . import _rk4_fallback as _impl

        COMPILED = False

rk4_max_deviation = _impl.rk4_max_deviation
