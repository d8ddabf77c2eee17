"""Exact fixed-point plane geometry and unit disk graph construction.

Coordinates are integers in deci-units (10 deci-units = 1 disk diameter), so
two disk centres are adjacent exactly when their squared distance is at most
``UNIT_SQ = 100``.  No floating point is involved anywhere on this path.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, NamedTuple

from liarsdom.errors import (
    CoordinateOutOfRange,
    DuplicateId,
    DuplicatePosition,
    EmptyInstance,
    ParseError,
    UnknownId,
)

SCALE = 10
UNIT_SQ = SCALE * SCALE
COORD_LIMIT = 10**9


class Coord(NamedTuple):
    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return Coord(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Coord(self.x - other[0], self.y - other[1])

    def scaled(self, k: int) -> "Coord":
        return Coord(self.x * k, self.y * k)


def check_coord(c: Coord) -> Coord:
    if not (isinstance(c.x, int) and isinstance(c.y, int)):
        raise CoordinateOutOfRange(f"non-integer coordinate {c!r}")
    if abs(c.x) > COORD_LIMIT or abs(c.y) > COORD_LIMIT:
        raise CoordinateOutOfRange(f"coordinate {tuple(c)} exceeds +/-{COORD_LIMIT}")
    return c


class PointKind(enum.Enum):
    NODE = "node"
    JOINT = "joint"
    SUPPORT_X = "sx"
    SUPPORT_Y = "sy"
    SUPPORT_Z = "sz"

    @property
    def is_support(self) -> bool:
        return self in (PointKind.SUPPORT_X, PointKind.SUPPORT_Y, PointKind.SUPPORT_Z)


@dataclass(frozen=True, order=True)
class PointRecord:
    id: int
    kind: PointKind = field(compare=False)
    pos: Coord = field(compare=False)


def sq_dist(a: Coord, b: Coord) -> int:
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return dx * dx + dy * dy


def are_adjacent(a: Coord, b: Coord) -> bool:
    return sq_dist(a, b) <= UNIT_SQ


@dataclass(frozen=True)
class UdgInstance:
    """Points ordered by id, with adjacency derived by exact pairwise test."""

    points: tuple[PointRecord, ...]
    unit_threshold_sq: int = UNIT_SQ

    def __len__(self) -> int:
        return len(self.points)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        pts = self.points
        nbrs: list[set[int]] = [set() for _ in pts]
        for i in range(len(pts)):
            pi = pts[i].pos
            for j in range(i + 1, len(pts)):
                if sq_dist(pi, pts[j].pos) <= self.unit_threshold_sq:
                    nbrs[i].add(j)
                    nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, ns in enumerate(self.adjacency) for v in ns if u < v)

    def to_graph(self):
        from liarsdom.graphs import SimpleGraph

        return SimpleGraph(len(self.points), self.edges)

    def ids_of_kind(self, *kinds: PointKind) -> list[int]:
        return [p.id for p in self.points if p.kind in kinds]


def build_udg(points: Iterable[PointRecord]) -> UdgInstance:
    pts = sorted(points, key=lambda p: p.id)
    seen_pos: dict[Coord, int] = {}
    for i, p in enumerate(pts):
        if i > 0 and pts[i - 1].id == p.id:
            raise DuplicateId(f"point id {p.id} appears twice")
        if p.id != i:
            raise DuplicateId(f"point ids must be dense 0..{len(pts) - 1}; missing {i}")
        check_coord(p.pos)
        if p.pos in seen_pos:
            raise DuplicatePosition(f"points {seen_pos[p.pos]} and {p.id} share position {tuple(p.pos)}")
        seen_pos[p.pos] = p.id
    return UdgInstance(tuple(pts))


def closed_neighborhood(inst: UdgInstance, pid: int) -> frozenset[int]:
    if not 0 <= pid < len(inst.points):
        raise UnknownId(pid)
    return inst.adjacency[pid] | {pid}


def max_closed_degree(inst: UdgInstance) -> int:
    """Largest closed neighbourhood size (the instance's Delta)."""
    if not inst.points:
        raise EmptyInstance("max_closed_degree of an empty instance")
    return 1 + max(len(ns) for ns in inst.adjacency)


# -- points file ------------------------------------------------------------

def format_points(inst: UdgInstance) -> str:
    lines = [f"{p.id} {p.kind.value} {p.pos.x} {p.pos.y}" for p in inst.points]
    return "".join(line + "\n" for line in lines)


def parse_points(text: str, path: str | None = None) -> UdgInstance:
    records = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ParseError(f"expected '<id> <kind> <x> <y>', got {line!r}", path=path, line=lineno)
        try:
            pid, x, y = int(parts[0]), int(parts[2]), int(parts[3])
            kind = PointKind(parts[1])
        except ValueError as exc:
            raise ParseError(str(exc), path=path, line=lineno) from None
        if pid < 0:
            raise ParseError(f"negative id {pid}", path=path, line=lineno)
        try:
            pos = check_coord(Coord(x, y))
        except CoordinateOutOfRange as exc:
            raise ParseError(str(exc), path=path, line=lineno) from None
        records.append(PointRecord(pid, kind, pos))
    try:
        return build_udg(records)
    except (DuplicateId, DuplicatePosition) as exc:
        raise ParseError(str(exc), path=path) from None


def read_points(path: str | Path) -> UdgInstance:
    return parse_points(Path(path).read_text(encoding="utf-8"), str(path))


def write_points(inst: UdgInstance, path: str | Path) -> None:
    Path(path).write_text(format_points(inst), encoding="utf-8")
