"""Kernel backend selection.

The compiled extension is used when it imports and the graph fits in 64
bits; everything else goes through the pure-Python implementation.  Set
``LIARSDOM_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType
from typing import Sequence

from liarsdom import _pykernels

DS = _pykernels.DS
LDS = _pykernels.LDS
MAX_COMPILED_VERTICES = 64

_compiled: ModuleType | None
if os.environ.get("LIARSDOM_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from liarsdom import _ckernels as _compiled  # type: ignore[attr-defined,no-redef]
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def backend_for(n: int, prefer: str | None = None) -> ModuleType:
    """Return the kernel module to use for a graph on ``n`` vertices."""
    if prefer == "python" or _compiled is None or n > MAX_COMPILED_VERTICES:
        return _pykernels
    return _compiled


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _compiled is not None else [])


def popcount(x: int) -> int:
    return _pykernels.popcount(x)


def ds_ok(nb: Sequence[int], mask: int, prefer: str | None = None) -> bool:
    return backend_for(len(nb), prefer).ds_ok(nb, mask)


def lds_ok(nb: Sequence[int], pair_unions: Sequence[int], mask: int, prefer: str | None = None) -> bool:
    return backend_for(len(nb), prefer).lds_ok(nb, pair_unions, mask)


def search_size(
    problem: int,
    nb: Sequence[int],
    pair_unions: Sequence[int],
    free: Sequence[int],
    base: int,
    k: int,
    limit: int,
    budget: int,
    prefer: str | None = None,
) -> tuple[list[int], int, bool]:
    return backend_for(len(nb), prefer).search_size(
        problem, nb, pair_unions, list(free), base, k, limit, budget
    )


def deficiency(nb: Sequence[int], mask: int, prefer: str | None = None) -> int:
    return backend_for(len(nb), prefer).deficiency(nb, mask)
