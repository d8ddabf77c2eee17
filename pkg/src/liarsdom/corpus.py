"""The three hand-built reference instances and their embeddings.

Instance A is K2 on a straight step, B is the path P3 bent at its middle
vertex, C is the star K1,3 with the centre as vertex 0.
"""

from __future__ import annotations

from liarsdom.embedding import GridEmbedding
from liarsdom.geometry import Coord
from liarsdom.graphs import SimpleGraph


def instance_a() -> tuple[SimpleGraph, GridEmbedding]:
    g = SimpleGraph(2, [(0, 1)])
    emb = GridEmbedding({0: Coord(0, 0), 1: Coord(40, 0)}, {(0, 1): (Coord(0, 0), Coord(40, 0))})
    return g, emb


def instance_b() -> tuple[SimpleGraph, GridEmbedding]:
    g = SimpleGraph(3, [(0, 1), (1, 2)])
    emb = GridEmbedding(
        {0: Coord(0, 0), 1: Coord(40, 0), 2: Coord(40, 40)},
        {(0, 1): (Coord(0, 0), Coord(40, 0)), (1, 2): (Coord(40, 0), Coord(40, 40))},
    )
    return g, emb


def instance_c() -> tuple[SimpleGraph, GridEmbedding]:
    g = SimpleGraph(4, [(0, 1), (0, 2), (0, 3)])
    emb = GridEmbedding(
        {0: Coord(0, 0), 1: Coord(40, 0), 2: Coord(-40, 0), 3: Coord(0, 40)},
        {
            (0, 1): (Coord(0, 0), Coord(40, 0)),
            (0, 2): (Coord(0, 0), Coord(-40, 0)),
            (0, 3): (Coord(0, 0), Coord(0, 40)),
        },
    )
    return g, emb


INSTANCES = {"A": instance_a, "B": instance_b, "C": instance_c}
