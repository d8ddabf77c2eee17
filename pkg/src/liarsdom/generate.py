"""Seeded random inputs: planar max-degree-3 graphs and point sets."""

from __future__ import annotations

import math
import random

from liarsdom.embedding import GRID, GridEmbedding
from liarsdom.geometry import Coord, PointKind, PointRecord, UdgInstance, build_udg
from liarsdom.graphs import SimpleGraph


def random_planar_graph(n: int, seed: int, density: float = 0.5) -> tuple[SimpleGraph, GridEmbedding]:
    """A connected subgraph of the square grid with ``n`` vertices and max degree 3.

    Grows a random region cell by cell (a spanning tree capped at degree 3),
    then adds a random share of the remaining grid edges inside the region
    while degrees stay at most 3.  The grid drawing doubles as a valid
    embedding with unit steps.
    """
    if n < 2:
        raise ValueError("need at least two vertices")
    rng = random.Random(seed)
    side = 2 * math.isqrt(n) + 3
    start = (side // 2, side // 2)
    cells = [start]
    member = {start}
    deg = {start: 0}
    tree: list[tuple[tuple[int, int], tuple[int, int]]] = []
    while len(cells) < n:
        frontier = []
        for c in cells:
            if deg[c] >= 3:
                continue
            for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                nxt = (c[0] + dx, c[1] + dy)
                if nxt not in member and 0 <= nxt[0] < side and 0 <= nxt[1] < side:
                    frontier.append((c, nxt))
        if not frontier:
            raise RuntimeError("grid region cannot grow; increase side")
        c, nxt = rng.choice(sorted(frontier))
        cells.append(nxt)
        member.add(nxt)
        deg[nxt] = 1
        deg[c] += 1
        tree.append((c, nxt))

    edges = {tuple(sorted(e)) for e in tree}
    extra = []
    for c in sorted(member):
        for dx, dy in ((1, 0), (0, 1)):
            nxt = (c[0] + dx, c[1] + dy)
            if nxt in member and (c, nxt) not in edges:
                extra.append((c, nxt))
    rng.shuffle(extra)
    for a, b in extra:
        if deg[a] < 3 and deg[b] < 3 and rng.random() < density:
            edges.add((a, b))
            deg[a] += 1
            deg[b] += 1

    order = sorted(member, key=lambda c: (c[1], c[0]))
    label = {c: i for i, c in enumerate(order)}
    x0 = min(c[0] for c in order)
    y0 = min(c[1] for c in order)
    pos = {label[c]: Coord((c[0] - x0) * GRID, (c[1] - y0) * GRID) for c in order}
    g_edges = []
    paths = {}
    for a, b in edges:
        u, v = sorted((label[a], label[b]))
        g_edges.append((u, v))
        paths[(u, v)] = (pos[u], pos[v])
    return SimpleGraph(n, g_edges), GridEmbedding(pos, paths)


def random_points(n: int, seed: int, extent: int = 100) -> UdgInstance:
    """``n`` distinct points with integer deci-unit coordinates in ``[0, extent]^2``."""
    if n > (extent + 1) ** 2:
        raise ValueError("extent too small for that many distinct points")
    rng = random.Random(seed)
    seen: set[Coord] = set()
    pts = []
    while len(pts) < n:
        c = Coord(rng.randint(0, extent), rng.randint(0, extent))
        if c in seen:
            continue
        seen.add(c)
        pts.append(PointRecord(len(pts), PointKind.NODE, c))
    return build_udg(pts)


def random_graph(n: int, p: float, rng: random.Random) -> SimpleGraph:
    """Erdos-Renyi G(n, p); used by the solver cross-checks."""
    return SimpleGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
