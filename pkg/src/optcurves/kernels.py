"""Kernel backend selection: compiled extension if built, numpy otherwise.

Set OPTCURVES_PURE=1 to force the pure-Python backend (used by the tests
and the benchmark to compare the two).
"""

from __future__ import annotations

import os

if os.environ.get("OPTCURVES_PURE") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND

chi_table = _impl.chi_table
poly_char_sum = _impl.poly_char_sum
ec_trace = _impl.ec_trace
branch_sweep = _impl.branch_sweep
fifth_power_table = _impl.fifth_power_table
