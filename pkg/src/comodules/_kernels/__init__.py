"""Kernel backend selection.

The compiled extension (_fast, Cython) and the pure-Python module (pure)
implement the same two primitives:

    matmul_mod(a, b, n)        -> list of lists
    row_canonical_mod(a, n)    -> (H, U) with H = U*A mod n, U invertible

Selection happens once at import time: the compiled backend when present,
unless COMODULES_PURE_KERNELS is set in the environment.  Higher layers only
ever see list-of-lists of canonical residues.
"""

from __future__ import annotations

import os

if os.environ.get("COMODULES_PURE_KERNELS"):
    from . import pure as _backend
else:
    try:
        from . import _fast as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _backend

matmul_mod = _backend.matmul_mod
row_canonical_mod = _backend.row_canonical_mod


def backend_name() -> str:
    return _backend.NAME
