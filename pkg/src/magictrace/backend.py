"""Kernel backend selection.

The compiled Cython extension is preferred when it imported cleanly; the
pure-numpy module is the drop-in fallback. Set MAGICTRACE_KERNELS to
"compiled" or "python" to force one side (used by tests and the benchmark).
"""

import os

_requested = os.environ.get("MAGICTRACE_KERNELS", "auto").strip().lower()

if _requested in ("auto", ""):
    try:
        from . import _kernels as kernels
    except ImportError:
        from . import _kernels_py as kernels
elif _requested in ("compiled", "c", "cython"):
    from . import _kernels as kernels
elif _requested in ("python", "py", "pure"):
    from . import _kernels_py as kernels
else:
    raise RuntimeError(
        f"MAGICTRACE_KERNELS={_requested!r} not understood "
        "(expected 'auto', 'compiled' or 'python')"
    )


def backend_name():
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return kernels.BACKEND_NAME
