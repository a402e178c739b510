"""JIT switch for the bitmask kernels.

Set ``VCBLOCK_DISABLE_NUMBA=1`` to run every kernel as plain Python. Results
are identical either way; only speed differs.
"""

import os

DISABLED = os.environ.get("VCBLOCK_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    if DISABLED:
        raise ImportError
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False
    _njit = None


def njit(fn):
    """Compile ``fn`` with numba when available; keep ``fn.py_func`` either way."""
    if HAVE_NUMBA:
        return _njit(cache=True)(fn)
    fn.py_func = fn
    return fn


# int64 masks leave the sign bit alone
MAX_JIT_VERTICES = 62
