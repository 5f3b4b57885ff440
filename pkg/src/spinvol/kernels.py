"""Hot-kernel backend selection.

The compiled extension is preferred when it was built; the pure
Python/numpy module is a drop-in replacement.  Set SPINVOL_PURE=1 to force
the fallback (used by the benchmark and the backend-equivalence tests).
"""

import os

from . import _kernels_py

if os.environ.get("SPINVOL_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels_c as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND

cm_v2_grid = _impl.cm_v2_grid
cm_dv2_du12_grid = _impl.cm_dv2_du12_grid
cm_v2_point = _impl.cm_v2_point
cm_dv2_du12_point = _impl.cm_dv2_du12_point
sweep_recurrence = _impl.sweep_recurrence
marching_squares = _impl.marching_squares


def available_backends() -> dict:
    """Importable kernel implementations keyed by name."""
    impls = {"python": _kernels_py}
    try:
        from . import _kernels_c
        impls["compiled"] = _kernels_c
    except ImportError:
        pass
    return impls
