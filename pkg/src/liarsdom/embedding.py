"""Orthogonal grid embeddings of planar graphs with maximum degree 3.

Vertices sit on the lattice of multiples of ``GRID`` deci-units and every
edge is a rectilinear polyline whose bends are lattice points.  The
validator is the ground truth; :func:`embed_graph` is a small deterministic
router meant for desk-scale inputs (a dozen vertices or so).
"""

from __future__ import annotations

import heapq
import math
import random
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Mapping, NamedTuple, Sequence

import networkx as nx
from networkx.algorithms.planar_drawing import combinatorial_embedding_to_pos

from liarsdom.errors import (
    DegreeTooHigh,
    InvalidEmbedding,
    IsolatedVertex,
    MissingEdgePath,
    MissingVertex,
    ParseError,
    RoutingFailed,
)
from liarsdom.geometry import COORD_LIMIT, Coord
from liarsdom.graphs import Edge, SimpleGraph

GRID = 40
DIRECTIONS: tuple[tuple[int, int], ...] = ((1, 0), (-1, 0), (0, 1), (0, -1))
DIRECTION_NAMES = {(1, 0): "+x", (-1, 0): "-x", (0, 1): "+y", (0, -1): "-y"}


@dataclass(frozen=True)
class GridEmbedding:
    vertex_pos: Mapping[int, Coord]
    edge_paths: Mapping[Edge, tuple[Coord, ...]]

    def __post_init__(self):
        object.__setattr__(self, "vertex_pos", {v: Coord(*p) for v, p in sorted(self.vertex_pos.items())})
        object.__setattr__(
            self,
            "edge_paths",
            {e: tuple(Coord(*p) for p in path) for e, path in sorted(self.edge_paths.items())},
        )

    def graph(self) -> SimpleGraph:
        return SimpleGraph(len(self.vertex_pos), self.edge_paths.keys())

    def path_length(self, e: Edge) -> int:
        path = self.edge_paths[e]
        return sum(abs(b.x - a.x) + abs(b.y - a.y) for a, b in zip(path, path[1:]))


class Violation(NamedTuple):
    rule: int
    code: str
    subject: tuple
    message: str


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def explode_path(path: Sequence[Coord], step: int = GRID) -> list[Coord]:
    """All lattice points visited by a well-formed rectilinear path, in order."""
    out = [Coord(*path[0])]
    for a, b in zip(path, path[1:]):
        dx, dy = _sign(b[0] - a[0]), _sign(b[1] - a[1])
        length = abs(b[0] - a[0]) + abs(b[1] - a[1])
        for t in range(1, length // step + 1):
            out.append(Coord(a[0] + dx * step * t, a[1] + dy * step * t))
    return out


def _check_cover(g: SimpleGraph, emb: GridEmbedding) -> None:
    for v in range(g.vertex_count):
        if v not in emb.vertex_pos:
            raise MissingVertex(f"vertex {v} has no position")
    for e in g.sorted_edges:
        if e not in emb.edge_paths:
            raise MissingEdgePath(f"edge {e} has no path")
    extra_v = set(emb.vertex_pos) - set(range(g.vertex_count))
    extra_e = set(emb.edge_paths) - set(g.edges)
    if extra_v or extra_e:
        raise InvalidEmbedding(f"embedding has vertices {sorted(extra_v)} / edges {sorted(extra_e)} not in the graph")


def _path_violations(e: Edge, path: Sequence[Coord], emb: GridEmbedding) -> list[Violation]:
    u, v = e
    if len(path) < 2:
        return [Violation(3, "PathTooShort", (e,), f"edge {e}: path needs at least two points")]
    out = []
    if path[0] != emb.vertex_pos[u] or path[-1] != emb.vertex_pos[v]:
        out.append(Violation(3, "PathEndpoints", (e,), f"edge {e}: path must run from vertex {u} to vertex {v}"))
    for p in path:
        if p.x % GRID or p.y % GRID:
            out.append(Violation(3, "BendOffGrid", (e,), f"edge {e}: point {tuple(p)} is not a lattice point"))
    for a, b in zip(path, path[1:]):
        if a == b:
            out.append(Violation(3, "ZeroPiece", (e,), f"edge {e}: repeated point {tuple(a)}"))
        elif a.x != b.x and a.y != b.y:
            out.append(Violation(3, "NotAxisParallel", (e,), f"edge {e}: piece {tuple(a)}->{tuple(b)} is diagonal"))
    if not out:
        pts = explode_path(path)
        if len(set(pts)) != len(pts):
            out.append(Violation(3, "SelfIntersecting", (e,), f"edge {e}: path revisits a point"))
    return out


def validate_embedding(g: SimpleGraph, emb: GridEmbedding) -> list[Violation]:
    """Return every rule violation; an empty list means the embedding is valid.

    Rule numbers: 1 one distinct point per vertex, 2 vertices on the 40-lattice,
    3 edges are rectilinear lattice paths between their endpoints, 4 no two
    edge paths meet except at a shared endpoint and no path runs through
    another vertex.
    """
    _check_cover(g, emb)
    out: list[Violation] = []
    at: dict[Coord, int] = {}
    for v, p in emb.vertex_pos.items():
        if abs(p.x) > COORD_LIMIT or abs(p.y) > COORD_LIMIT:
            out.append(Violation(2, "VertexOutOfRange", (v,), f"vertex {v} at {tuple(p)} is out of range"))
        if p in at:
            out.append(Violation(1, "VertexCollision", (at[p], v), f"vertices {at[p]} and {v} share {tuple(p)}"))
        else:
            at[p] = v
        if p.x % GRID or p.y % GRID:
            out.append(Violation(2, "VertexOffGrid", (v,), f"vertex {v} at {tuple(p)} is not a multiple of {GRID}"))

    points: dict[Edge, set[Coord]] = {}
    for e, path in emb.edge_paths.items():
        bad = _path_violations(e, path, emb)
        out.extend(bad)
        if bad:
            continue
        pts = explode_path(path)
        for p in pts[1:-1]:
            if p in at:
                out.append(Violation(4, "PassesThroughVertex", (e, at[p]), f"edge {e} passes through vertex {at[p]}"))
        points[e] = set(pts)

    edges = sorted(points)
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            allowed = {emb.vertex_pos[w] for w in set(e) & set(f)}
            shared = (points[e] & points[f]) - allowed
            if shared:
                p = min(shared)
                out.append(Violation(4, "EdgesIntersect", (e, f), f"edges {e} and {f} meet at {tuple(p)}"))
    return out


# -- step decomposition ---------------------------------------------------------


class Step(NamedTuple):
    edge: Edge
    index: int
    start: Coord
    end: Coord
    proper: bool
    node_end: str | None  # "start", "end", "both" for improper steps


@dataclass(frozen=True)
class StepDecomposition:
    steps: Mapping[Edge, tuple[Step, ...]]

    def step_count(self, e: Edge) -> int:
        return len(self.steps[e])


def decompose_steps(emb: GridEmbedding) -> StepDecomposition:
    try:
        g = emb.graph()
        problems = validate_embedding(g, emb)
    except Exception as exc:
        raise InvalidEmbedding(str(exc)) from exc
    if problems:
        raise InvalidEmbedding("; ".join(v.message for v in problems))
    steps: dict[Edge, tuple[Step, ...]] = {}
    for e, path in emb.edge_paths.items():
        pts = explode_path(path)
        last = len(pts) - 2
        seq = []
        for i, (a, b) in enumerate(zip(pts, pts[1:])):
            if i == 0 and i == last:
                node_end: str | None = "both"
            elif i == 0:
                node_end = "start"
            elif i == last:
                node_end = "end"
            else:
                node_end = None
            seq.append(Step(e, i, a, b, node_end is None, node_end))
        steps[e] = tuple(seq)
    return StepDecomposition(steps)


def total_segments(dec: StepDecomposition) -> int:
    return sum(len(s) for s in dec.steps.values())


# -- router --------------------------------------------------------------------

Cell = tuple[int, int]


def _bfs_layers(g: SimpleGraph, root: int, allowed: set[int]) -> list[list[int]]:
    layers = [[root]]
    seen = {root}
    while True:
        nxt = []
        for v in layers[-1]:
            for u in sorted(g.adjacency[v]):
                if u in allowed and u not in seen:
                    seen.add(u)
                    nxt.append(u)
        if not nxt:
            return layers
        layers.append(nxt)


def _layered(g: SimpleGraph, spacing: int) -> Iterator[dict[int, Cell]]:
    comps = g.components()
    max_roots = max((len(c) for c in comps), default=0)
    for r in range(max_roots):
        for transpose in (False, True):
            cells: dict[int, Cell] = {}
            x0 = 0
            for comp in comps:
                root = comp[r % len(comp)]
                layers = _bfs_layers(g, root, set(comp))
                for li, layer in enumerate(layers):
                    for yi, v in enumerate(layer):
                        a, b = x0 + li * spacing, yi * spacing
                        cells[v] = (b, a) if transpose else (a, b)
                x0 += (len(layers) + 1) * spacing
            yield cells


def _planar_seed(g: SimpleGraph) -> dict[int, Cell] | None:
    """Integer straight-line planar drawing positions, or None if not available."""
    if g.vertex_count < 3:
        return None
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from(g.sorted_edges)
    ok, rotation = nx.check_planarity(G)
    if not ok:
        return None
    pos = combinatorial_embedding_to_pos(rotation)
    return {v: (int(pos[v][0]), int(pos[v][1])) for v in range(g.vertex_count)}


def _placements(g: SimpleGraph, spacings: Sequence[int], extra: int) -> Iterator[dict[int, Cell]]:
    """Candidate vertex placements, cheapest first.

    Tight BFS layering, then a planar straight-line drawing blown up by each
    spacing, then looser layerings, then seeded random lattice placements.
    """
    yield from _layered(g, spacings[0])
    seed = _planar_seed(g)
    if seed is not None:
        for s in spacings:
            yield {v: (x * s, y * s) for v, (x, y) in seed.items()}
    for s in spacings[1:]:
        yield from _layered(g, s)
    rng = random.Random(g.vertex_count * 1_000_003 + len(g.edges))
    side = math.isqrt(max(g.vertex_count - 1, 0)) + 2
    lattice = [(3 * x, 3 * y) for x in range(side) for y in range(side)]
    for _ in range(extra):
        rng.shuffle(lattice)
        yield {v: lattice[v] for v in range(g.vertex_count)}


class _Router:
    def __init__(self, g: SimpleGraph, cells: dict[int, Cell], margin: int):
        self.g = g
        self.cells = cells
        self.at = {c: v for v, c in cells.items()}
        xs = [c[0] for c in cells.values()]
        ys = [c[1] for c in cells.values()]
        self.box = (min(xs) - margin, max(xs) + margin, min(ys) - margin, max(ys) + margin)
        self.port_owner: dict[Cell, list[int]] = {}
        for v, (x, y) in cells.items():
            for dx, dy in DIRECTIONS:
                self.port_owner.setdefault((x + dx, y + dy), []).append(v)

    def route_all(self, order: Sequence[Edge]) -> tuple[dict[Edge, list[Cell]] | None, Edge | None]:
        used: set[Cell] = set()
        pending = {v: self.g.degree(v) for v in self.cells}
        paths: dict[Edge, list[Cell]] = {}
        for e in order:
            path = self._route(e, used, pending)
            if path is None:
                return None, e
            paths[e] = path
            used.update(path[1:-1])
            pending[e[0]] -= 1
            pending[e[1]] -= 1
            if any(self._slack(w, used, pending) < 0 for w in self.cells):
                return None, e
        return paths, None

    def _free_ports(self, v: int, used: set[Cell]) -> int:
        x, y = self.cells[v]
        return sum(1 for dx, dy in DIRECTIONS if (x + dx, y + dy) not in used and (x + dx, y + dy) not in self.at)

    def _slack(self, v: int, used: set[Cell], pending: dict[int, int]) -> int:
        return self._free_ports(v, used) - pending[v]

    def _route(self, e: Edge, used: set[Cell], pending: dict[int, int]) -> list[Cell] | None:
        u, v = e
        src, dst = self.cells[u], self.cells[v]
        x0, x1, y0, y1 = self.box
        slack = {w: self._slack(w, used, pending) for w in self.cells}

        def cost_to_enter(c: Cell) -> int | None:
            if c == dst:
                return 1
            if c in used or c in self.at:
                return None
            if not (x0 <= c[0] <= x1 and y0 <= c[1] <= y1):
                return None
            extra = 0
            for w in self.port_owner.get(c, ()):
                # own endpoints spend one port on this edge anyway
                room = slack[w] + (1 if w in e else 0)
                if room <= 0:
                    return None
                extra += 3
            return 1 + extra

        dist = {src: 0}
        prev: dict[Cell, Cell] = {}
        heap = [(0, src[0], src[1])]
        while heap:
            d, x, y = heapq.heappop(heap)
            c = (x, y)
            if d > dist[c]:
                continue
            if c == dst:
                break
            for dx, dy in sorted(DIRECTIONS):
                nxt = (x + dx, y + dy)
                step = cost_to_enter(nxt)
                if step is None:
                    continue
                nd = d + step
                if nd < dist.get(nxt, nd + 1):
                    dist[nxt] = nd
                    prev[nxt] = c
                    heapq.heappush(heap, (nd, nxt[0], nxt[1]))
        if dst not in prev:
            return None
        path = [dst]
        while path[-1] != src:
            path.append(prev[path[-1]])
        path.reverse()
        return path


def _compress(cells: Sequence[Cell]) -> tuple[Coord, ...]:
    out = [cells[0]]
    for i in range(1, len(cells) - 1):
        a, b, c = cells[i - 1], cells[i], cells[i + 1]
        if (b[0] - a[0], b[1] - a[1]) != (c[0] - b[0], c[1] - b[1]):
            out.append(b)
    out.append(cells[-1])
    return tuple(Coord(x * GRID, y * GRID) for x, y in out)


def embed_graph(g: SimpleGraph, budget: int = 600, spacings: Sequence[int] = (1, 2, 3, 4)) -> GridEmbedding:
    """Place vertices by BFS layering and route edges by shortest lattice paths.

    Edge insertion order is revised by moving the edge that failed to route
    to the front; ``budget`` caps the total number of routing attempts over
    all placements.  Deterministic for a given graph.  Non-planar input is
    rejected up front; for planar input a RoutingFailed only means the
    budget ran out.
    """
    if g.max_degree() > 3:
        v = next(v for v in range(g.vertex_count) if g.degree(v) > 3)
        raise DegreeTooHigh(f"vertex {v} has degree {g.degree(v)} > 3")
    for v in range(g.vertex_count):
        if g.degree(v) == 0:
            raise IsolatedVertex(f"vertex {v} has no incident edge")
    if g.vertex_count == 0:
        return GridEmbedding({}, {})
    planar, _ = nx.check_planarity(nx.Graph(list(g.sorted_edges)))
    if not planar:
        raise RoutingFailed("graph is not planar; no grid embedding exists")

    attempts = 0
    per_placement = 2 * len(g.edges) + 2
    for cells in _placements(g, spacings, extra=budget):
        router = _Router(g, cells, margin=3)
        order = sorted(
            g.sorted_edges,
            key=lambda e: (abs(cells[e[0]][0] - cells[e[1]][0]) + abs(cells[e[0]][1] - cells[e[1]][1]), e),
        )
        tried: set[tuple[Edge, ...]] = set()
        while attempts < budget and len(tried) < per_placement and tuple(order) not in tried:
            tried.add(tuple(order))
            attempts += 1
            paths, failed = router.route_all(order)
            if paths is not None:
                emb = GridEmbedding(
                    {v: Coord(x * GRID, y * GRID) for v, (x, y) in cells.items()},
                    {e: _compress(p) for e, p in paths.items()},
                )
                if not validate_embedding(g, emb):
                    return emb
                break
            assert failed is not None
            order = [failed] + [e for e in order if e != failed]
        if attempts >= budget:
            break
    raise RoutingFailed(f"no embedding found within {budget} routing attempts")


# -- embedding file -------------------------------------------------------------


def format_embedding(emb: GridEmbedding) -> str:
    lines = [f"v {v} {p.x} {p.y}" for v, p in emb.vertex_pos.items()]
    for (u, v), path in emb.edge_paths.items():
        coords = " ".join(f"{p.x} {p.y}" for p in path)
        lines.append(f"e {u} {v} {coords}")
    return "".join(line + "\n" for line in lines)


def parse_embedding(text: str, path: str | None = None) -> GridEmbedding:
    verts: dict[int, Coord] = {}
    paths: dict[Edge, tuple[Coord, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tag, *rest = line.split()
        try:
            nums = [int(t) for t in rest]
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", path=path, line=lineno) from None
        if tag == "v":
            if len(nums) != 3:
                raise ParseError("expected 'v <id> <x> <y>'", path=path, line=lineno)
            vid, x, y = nums
            if vid in verts:
                raise ParseError(f"vertex {vid} defined twice", path=path, line=lineno)
            verts[vid] = Coord(x, y)
        elif tag == "e":
            if len(nums) < 6 or len(nums) % 2:
                raise ParseError("expected 'e <u> <v> <x1> <y1> ... <xk> <yk>' with k >= 2", path=path, line=lineno)
            u, v = nums[0], nums[1]
            pts = [Coord(nums[i], nums[i + 1]) for i in range(2, len(nums), 2)]
            if u == v:
                raise ParseError(f"self-loop {u}", path=path, line=lineno)
            if u > v:
                u, v = v, u
                pts.reverse()
            if (u, v) in paths:
                raise ParseError(f"edge {u} {v} defined twice", path=path, line=lineno)
            paths[(u, v)] = tuple(pts)
        else:
            raise ParseError(f"unknown record type {tag!r}", path=path, line=lineno)
    if set(verts) != set(range(len(verts))):
        raise ParseError("vertex ids must be dense 0..n-1", path=path)
    for u, v in paths:
        if u not in verts or v not in verts:
            raise ParseError(f"edge {u} {v} references an undefined vertex", path=path)
    return GridEmbedding(verts, paths)


def read_embedding(path: str | Path) -> GridEmbedding:
    return parse_embedding(Path(path).read_text(encoding="utf-8"), str(path))


def write_embedding(emb: GridEmbedding, path: str | Path) -> None:
    Path(path).write_text(format_embedding(emb), encoding="utf-8")


def layout_summary(g: SimpleGraph, emb: GridEmbedding) -> dict[str, int]:
    dec = decompose_steps(emb)
    bends = sum(max(0, len(p) - 2) for p in emb.edge_paths.values())
    return {"n": g.vertex_count, "edges": len(g.edges), "steps": total_segments(dec), "bends": bends}
