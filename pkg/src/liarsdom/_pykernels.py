"""Pure-Python bitmask kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors these
signatures exactly.  Vertex sets are ints used as bitsets, ``nb[v]`` is the
closed neighbourhood of ``v`` and ``pair_unions`` holds ``nb[u] | nb[v]`` for
the pairs whose closed neighbourhoods intersect (the only pairs that can
violate the pair condition once every single-vertex condition holds).
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

DS, LDS = 0, 1


def popcount(x: int) -> int:
    return x.bit_count() if hasattr(x, "bit_count") else bin(x).count("1")


def ds_ok(nb: Sequence[int], mask: int) -> bool:
    for m in nb:
        if not m & mask:
            return False
    return True


def lds_ok(nb: Sequence[int], pair_unions: Sequence[int], mask: int) -> bool:
    for m in nb:
        if popcount(m & mask) < 2:
            return False
    for m in pair_unions:
        if popcount(m & mask) < 3:
            return False
    return True


def search_size(
    problem: int,
    nb: Sequence[int],
    pair_unions: Sequence[int],
    free: Sequence[int],
    base: int,
    k: int,
    limit: int,
    budget: int,
) -> tuple[list[int], int, bool]:
    """Scan ``base | S`` for size-``k`` subsets ``S`` of ``free`` in lexicographic order.

    Collects feasible masks until ``limit`` are found (``limit <= 0`` means
    all).  Returns ``(solutions, examined, budget_hit)``.
    """
    bits = [1 << v for v in free]
    solutions: list[int] = []
    examined = 0
    for combo in combinations(bits, k):
        if examined >= budget:
            return solutions, examined, True
        examined += 1
        mask = base
        for b in combo:
            mask |= b
        ok = ds_ok(nb, mask) if problem == DS else lds_ok(nb, pair_unions, mask)
        if ok:
            solutions.append(mask)
            if 0 < limit <= len(solutions):
                break
    return solutions, examined, False


def deficiency(nb: Sequence[int], mask: int) -> int:
    """Total unmet liar's-domination demand over all vertices and all pairs."""
    counts = [popcount(m & mask) for m in nb]
    total = 0
    for c in counts:
        if c < 2:
            total += 2 - c
    n = len(nb)
    for u in range(n):
        nu = nb[u]
        for v in range(u + 1, n):
            c = popcount((nu | nb[v]) & mask)
            if c < 3:
                total += 3 - c
    return total
