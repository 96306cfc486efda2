"""Backend selection for the hot kernels.

The compiled extension is used when it imports and the graph fits its fixed
limits; otherwise calls fall through to the pure-Python implementation.
Setting ``TRIEDGE_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

_c = None
if os.environ.get("TRIEDGE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _c  # type: ignore[no-redef]
    except ImportError:
        _c = None

BACKEND = _c.BACKEND if _c is not None else _pykernels.BACKEND

_C_MAX_N = 64
_C_MAX_CANON = 11


def nontriangular_masks(adj: list[int]) -> list[int]:
    if _c is not None and len(adj) <= _C_MAX_N:
        return _c.nontriangular_masks(adj)
    return _pykernels.nontriangular_masks(adj)


def count_nontriangular(adj: list[int]) -> tuple[int, int]:
    if _c is not None and len(adj) <= _C_MAX_N:
        return _c.count_nontriangular(adj)
    return _pykernels.count_nontriangular(adj)


def canonical_label(adj: list[int]) -> tuple[int, list[int]]:
    if _c is not None and len(adj) <= _C_MAX_CANON:
        return _c.canonical_label(adj)
    return _pykernels.canonical_label(adj)
