"""Gadget construction: from a grid embedding to a unit disk graph.

Each vertex becomes a node point; each 40-unit step of an edge path carries
four joint points; each vertex also gets a pendant chain of three support
points on a lattice direction that no incident edge leaves along.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import NamedTuple, Sequence, Union

from liarsdom.embedding import (
    DIRECTION_NAMES,
    DIRECTIONS,
    GRID,
    GridEmbedding,
    StepDecomposition,
    decompose_steps,
    total_segments,
)
from liarsdom.errors import (
    DegreeTooHigh,
    InvalidDecomposition,
    InvalidEmbedding,
    NoFreeDirection,
    ParseError,
    SeparationViolation,
)
from liarsdom.geometry import Coord, PointKind, PointRecord, UdgInstance, build_udg, sq_dist
from liarsdom.graphs import Edge, SimpleGraph

# path offsets, in deci-units, measured from the node end of an improper step
SINGLE_STEP_OFFSETS = (10, 15, 25, 30)
IMPROPER_OFFSETS = (10, 15, 25, 35)
PROPER_OFFSETS = (5, 15, 25, 35)
SUPPORT_OFFSETS = (2, 12, 14)
SUPPORT_ROLES = ("x", "y", "z")
_SUPPORT_KIND = {"x": PointKind.SUPPORT_X, "y": PointKind.SUPPORT_Y, "z": PointKind.SUPPORT_Z}


class NodeOrigin(NamedTuple):
    vertex: int

    def describe(self, edge_ids: dict[Edge, int]) -> str:
        return f"node {self.vertex}"


class JointOrigin(NamedTuple):
    edge: Edge
    offset: int

    def describe(self, edge_ids: dict[Edge, int]) -> str:
        return f"joint {edge_ids[self.edge]} {self.offset}"


class SupportOrigin(NamedTuple):
    vertex: int
    role: str

    def describe(self, edge_ids: dict[Edge, int]) -> str:
        return f"support {self.vertex} {self.role}"


Origin = Union[NodeOrigin, JointOrigin, SupportOrigin]


@dataclass(frozen=True)
class ReductionMap:
    origin: tuple[Origin, ...]
    n: int
    l: int
    j_count: int
    s_count: int
    graph: SimpleGraph = field(repr=False)
    embedding: GridEmbedding = field(repr=False)
    instance: UdgInstance = field(repr=False)

    @cached_property
    def node_point(self) -> dict[int, int]:
        return {o.vertex: pid for pid, o in enumerate(self.origin) if isinstance(o, NodeOrigin)}

    @cached_property
    def joint_ids(self) -> list[int]:
        return [pid for pid, o in enumerate(self.origin) if isinstance(o, JointOrigin)]

    @cached_property
    def support_ids(self) -> list[int]:
        return [pid for pid, o in enumerate(self.origin) if isinstance(o, SupportOrigin)]

    @cached_property
    def _chains(self) -> dict[int, dict[str, int]]:
        out: dict[int, dict[str, int]] = {}
        for pid, o in enumerate(self.origin):
            if isinstance(o, SupportOrigin):
                out.setdefault(o.vertex, {})[o.role] = pid
        return out

    def support_chain(self, v: int) -> tuple[int, int, int]:
        ids = self._chains[v]
        return ids["x"], ids["y"], ids["z"]

    def edge_chain(self, e: Edge) -> list[int]:
        """Point ids along an edge's gadget: node u, joints in offset order, node v."""
        joints = sorted((o.offset, pid) for pid, o in enumerate(self.origin) if isinstance(o, JointOrigin) and o.edge == e)
        nodes = self.node_point
        return [nodes[e[0]]] + [pid for _, pid in joints] + [nodes[e[1]]]


def joint_offsets(step_count: int) -> list[int]:
    """Joint offsets along a path of ``step_count`` steps, from its first endpoint."""
    if step_count < 1:
        raise InvalidDecomposition("an edge needs at least one step")
    if step_count == 1:
        return list(SINGLE_STEP_OFFSETS)
    length = step_count * GRID
    out = list(IMPROPER_OFFSETS)
    for i in range(1, step_count - 1):
        out += [i * GRID + o for o in PROPER_OFFSETS]
    out += [length - o for o in reversed(IMPROPER_OFFSETS)]
    return out


def place_joints(dec: StepDecomposition) -> list[tuple[Edge, int]]:
    out = []
    for e, steps in dec.steps.items():
        if not steps or steps[0].index != 0:
            raise InvalidDecomposition(f"edge {e}: malformed step list")
        if steps[0].proper or steps[-1].proper or any(not s.proper for s in steps[1:-1]):
            raise InvalidDecomposition(f"edge {e}: wrong proper/improper classification")
        out += [(e, off) for off in joint_offsets(len(steps))]
    return out


def point_along(path: Sequence[Coord], offset: int) -> Coord:
    remaining = offset
    for a, b in zip(path, path[1:]):
        seg = abs(b.x - a.x) + abs(b.y - a.y)
        if remaining <= seg:
            dx = (b.x > a.x) - (b.x < a.x)
            dy = (b.y > a.y) - (b.y < a.y)
            return Coord(a.x + dx * remaining, a.y + dy * remaining)
        remaining -= seg
    raise ValueError(f"offset {offset} beyond path end")


class SupportPlacement(NamedTuple):
    direction: tuple[int, int]
    points: tuple[Coord, Coord, Coord]

    @property
    def direction_name(self) -> str:
        return DIRECTION_NAMES[self.direction]


def _leaving_directions(emb: GridEmbedding) -> dict[int, set[tuple[int, int]]]:
    used: dict[int, set[tuple[int, int]]] = {v: set() for v in emb.vertex_pos}
    for (u, v), path in emb.edge_paths.items():
        a, b = path[0], path[1]
        used[u].add(((b.x > a.x) - (b.x < a.x), (b.y > a.y) - (b.y < a.y)))
        a, b = path[-1], path[-2]
        used[v].add(((b.x > a.x) - (b.x < a.x), (b.y > a.y) - (b.y < a.y)))
    return used


def place_supports(g: SimpleGraph, emb: GridEmbedding) -> dict[int, SupportPlacement]:
    """First free direction in the order +x, -x, +y, -y; supports at 2, 12, 14 deci-units."""
    used = _leaving_directions(emb)
    out = {}
    for v in range(g.vertex_count):
        free = [d for d in DIRECTIONS if d not in used[v]]
        if not free:
            raise NoFreeDirection(f"vertex {v}: all four directions carry edges")
        d = free[0]
        p = emb.vertex_pos[v]
        pts = tuple(Coord(p.x + d[0] * o, p.y + d[1] * o) for o in SUPPORT_OFFSETS)
        out[v] = SupportPlacement(d, pts)  # type: ignore[arg-type]
    return out


class SeparationReport(NamedTuple):
    ok: bool
    pair: tuple[int, int] | None = None
    sq_dist: int | None = None
    reason: str | None = None


def intended_edges(rmap: ReductionMap) -> set[tuple[int, int]]:
    out = set()
    for e in rmap.graph.sorted_edges:
        chain = rmap.edge_chain(e)
        out.update((min(a, b), max(a, b)) for a, b in zip(chain, chain[1:]))
    for v, p in rmap.node_point.items():
        x, y, z = rmap.support_chain(v)
        for a, b in ((p, x), (x, y), (y, z)):
            out.add((min(a, b), max(a, b)))
    return out


def check_separation(inst: UdgInstance, rmap: ReductionMap) -> SeparationReport:
    """Compare the instance's edge set with the gadget chains; report the smallest offending pair."""
    intended = intended_edges(rmap)
    actual = inst.edges
    bad = sorted(intended ^ actual)
    if not bad:
        return SeparationReport(True)
    a, b = bad[0]
    d = sq_dist(inst.points[a].pos, inst.points[b].pos)
    reason = "unintended adjacency" if (a, b) in actual else "chain gap exceeds unit distance"
    return SeparationReport(False, (a, b), d, reason)


def reduce(g: SimpleGraph, emb: GridEmbedding, *, check: bool = True) -> tuple[UdgInstance, ReductionMap]:
    """Build the gadget instance and its provenance map."""
    dec = decompose_steps(emb)
    if emb.graph() != g:
        raise InvalidEmbedding("embedding does not match the graph")
    if g.max_degree() > 3:
        raise DegreeTooHigh("reduction needs maximum degree 3")
    joints = place_joints(dec)
    supports = place_supports(g, emb)

    records: list[PointRecord] = []
    origin: list[Origin] = []
    for v in range(g.vertex_count):
        records.append(PointRecord(len(records), PointKind.NODE, emb.vertex_pos[v]))
        origin.append(NodeOrigin(v))
    for e, off in sorted(joints):
        records.append(PointRecord(len(records), PointKind.JOINT, point_along(emb.edge_paths[e], off)))
        origin.append(JointOrigin(e, off))
    for v in range(g.vertex_count):
        for role, pos in zip(SUPPORT_ROLES, supports[v].points):
            records.append(PointRecord(len(records), _SUPPORT_KIND[role], pos))
            origin.append(SupportOrigin(v, role))

    inst = build_udg(records)
    l = total_segments(dec)
    rmap = ReductionMap(
        origin=tuple(origin),
        n=g.vertex_count,
        l=l,
        j_count=len(joints),
        s_count=3 * g.vertex_count,
        graph=g,
        embedding=emb,
        instance=inst,
    )
    if check:
        rep = check_separation(inst, rmap)
        if not rep.ok:
            raise SeparationViolation(f"points {rep.pair} at squared distance {rep.sq_dist}: {rep.reason}")
    return inst, rmap


# -- provenance sidecar ---------------------------------------------------------


def format_provenance(rmap: ReductionMap) -> str:
    edge_ids = {e: i for i, e in enumerate(rmap.graph.sorted_edges)}
    return "".join(f"{pid} {o.describe(edge_ids)}\n" for pid, o in enumerate(rmap.origin))


def parse_provenance(text: str, edges: Sequence[Edge], path: str | None = None) -> tuple[Origin, ...]:
    out: dict[int, Origin] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            pid = int(parts[0])
            tag = parts[1]
            if tag == "node" and len(parts) == 3:
                o: Origin = NodeOrigin(int(parts[2]))
            elif tag == "joint" and len(parts) == 4:
                o = JointOrigin(edges[int(parts[2])], int(parts[3]))
            elif tag == "support" and len(parts) == 4 and parts[3] in SUPPORT_ROLES:
                o = SupportOrigin(int(parts[2]), parts[3])
            else:
                raise ValueError(f"bad descriptor {line!r}")
        except (ValueError, IndexError) as exc:
            raise ParseError(str(exc), path=path, line=lineno) from None
        if pid in out:
            raise ParseError(f"point {pid} described twice", path=path, line=lineno)
        out[pid] = o
    if set(out) != set(range(len(out))):
        raise ParseError("provenance ids must be dense", path=path)
    return tuple(out[i] for i in range(len(out)))


def write_provenance(rmap: ReductionMap, path: str | Path) -> None:
    Path(path).write_text(format_provenance(rmap), encoding="utf-8")
