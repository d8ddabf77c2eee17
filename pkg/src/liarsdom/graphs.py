"""Simple graphs and the dominating / liar's dominating verifiers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, NamedTuple

from liarsdom.errors import InvalidGraph, OutOfRangeMember, ParseError, UnknownVertex
from liarsdom.kernels import popcount

Edge = tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices ``0..vertex_count-1``; edges stored as ``(u, v)`` with ``u < v``."""

    vertex_count: int
    edges: frozenset[Edge]

    def __init__(self, vertex_count: int, edges: Iterable[Edge] = ()):
        if vertex_count < 0:
            raise InvalidGraph("negative vertex count")
        norm = set()
        for u, v in edges:
            if u == v:
                raise InvalidGraph(f"self-loop at {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidGraph(f"edge ({u}, {v}) out of range for n={vertex_count}")
            e = (u, v) if u < v else (v, u)
            if e in norm:
                raise InvalidGraph(f"duplicate edge {e}")
            norm.add(e)
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        """Edges in canonical order; an edge's id is its index here."""
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Closed neighbourhoods as bitsets."""
        out = []
        for v, ns in enumerate(self.adjacency):
            m = 1 << v
            for u in ns:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    @cached_property
    def intersecting_pair_unions(self) -> tuple[int, ...]:
        """``N[u] | N[v]`` for every pair u < v whose closed neighbourhoods meet."""
        nb = self.closed_masks
        out = []
        for u in range(self.vertex_count):
            for v in range(u + 1, self.vertex_count):
                if nb[u] & nb[v]:
                    out.append(nb[u] | nb[v])
        return tuple(out)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def components(self) -> list[list[int]]:
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adjacency[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps


def to_mask(members: Iterable[int]) -> int:
    m = 0
    for v in members:
        m |= 1 << v
    return m


def from_mask(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def closed_nbhd(g: SimpleGraph, v: int) -> frozenset[int]:
    if not 0 <= v < g.vertex_count:
        raise UnknownVertex(v)
    return g.adjacency[v] | {v}


class Failure(NamedTuple):
    condition: int
    witness: tuple[int, ...]
    achieved: int


class VerifyReport(NamedTuple):
    ok: bool
    failure: Failure | None = None

    def describe(self) -> str:
        if self.ok:
            return "ok"
        f = self.failure
        assert f is not None
        who = " ".join(map(str, f.witness))
        need = {1: 2, 2: 3}.get(f.condition, 1)
        return f"fail condition={f.condition} witness={who} achieved={f.achieved} required={need}"


OK = VerifyReport(True)


def _member_mask(g: SimpleGraph, d: Iterable[int]) -> int:
    mask = 0
    for v in d:
        if not (isinstance(v, int) and 0 <= v < g.vertex_count):
            raise OutOfRangeMember(f"{v!r} is not a vertex of a graph with {g.vertex_count} vertices")
        mask |= 1 << v
    return mask


def is_dominating(g: SimpleGraph, d: Iterable[int]) -> VerifyReport:
    mask = _member_mask(g, d)
    for v, m in enumerate(g.closed_masks):
        if not m & mask:
            return VerifyReport(False, Failure(1, (v,), 0))
    return OK


def is_liars_dominating(g: SimpleGraph, d: Iterable[int], *, restricted: bool = True) -> VerifyReport:
    """Check both liar's conditions; the first violation in (i)-then-(ii) order is reported.

    With ``restricted`` the pair scan skips pairs with disjoint closed
    neighbourhoods: once every vertex sees two members, such a pair already
    sees four.  The reports are identical either way.
    """
    mask = _member_mask(g, d)
    nb = g.closed_masks
    for v, m in enumerate(nb):
        c = popcount(m & mask)
        if c < 2:
            return VerifyReport(False, Failure(1, (v,), c))
    n = g.vertex_count
    for u in range(n):
        nu = nb[u]
        for v in range(u + 1, n):
            if restricted and not nu & nb[v]:
                continue
            c = popcount((nu | nb[v]) & mask)
            if c < 3:
                return VerifyReport(False, Failure(2, (u, v), c))
    return OK


class Feasibility(NamedTuple):
    ok: bool
    reason: str | None = None
    component: tuple[int, ...] | None = None


def liars_feasible(g: SimpleGraph) -> Feasibility:
    """A liar's dominating set exists iff every component has at least 3 vertices.

    If so, ``V`` itself works: each vertex of a connected component of size
    >= 3 has a neighbour, and two distinct vertices u, v together see at
    least three vertices (a third one is adjacent to u or v by connectivity
    when N[u] | N[v] = {u, v}).  A component of size 1 or 2 violates
    condition (i) or (ii) for every candidate set.
    """
    for comp in g.components():
        if len(comp) <= 2:
            return Feasibility(
                False,
                f"component {{{', '.join(map(str, comp))}}} has only {len(comp)} vertex(es)",
                tuple(comp),
            )
    return Feasibility(True)


# -- file formats -------------------------------------------------------------

def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_graph(text: str, path: str | None = None) -> SimpleGraph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty graph file", path=path)
    lineno, header = lines[0]
    try:
        n, m = (int(t) for t in header.split())
    except ValueError:
        raise ParseError(f"expected header 'n m', got {header!r}", path=path, line=lineno) from None
    if n < 0 or m < 0:
        raise ParseError("negative counts in header", path=path, line=lineno)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header promises {m} edges, found {len(body)}", path=path)
    seen: set[Edge] = set()
    for lineno, line in body:
        try:
            u, v = (int(t) for t in line.split())
        except ValueError:
            raise ParseError(f"expected 'u v', got {line!r}", path=path, line=lineno) from None
        if not 0 <= u < v < n:
            raise ParseError(f"edge '{line}' violates 0 <= u < v < {n}", path=path, line=lineno)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge {u} {v}", path=path, line=lineno)
        seen.add((u, v))
    return SimpleGraph(n, seen)


def format_graph(g: SimpleGraph) -> str:
    out = [f"{g.vertex_count} {len(g.edges)}"]
    out += [f"{u} {v}" for u, v in g.sorted_edges]
    return "\n".join(out) + "\n"


def read_graph(path: str | Path) -> SimpleGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"), str(path))


def write_graph(g: SimpleGraph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g), encoding="utf-8")


def parse_solution(text: str, path: str | None = None) -> frozenset[int]:
    ids = set()
    for lineno, line in _content_lines(text):
        try:
            v = int(line)
        except ValueError:
            raise ParseError(f"expected a vertex id, got {line!r}", path=path, line=lineno) from None
        if v < 0:
            raise ParseError(f"negative vertex id {v}", path=path, line=lineno)
        ids.add(v)
    return frozenset(ids)


def format_solution(members: Iterable[int]) -> str:
    return "".join(f"{v}\n" for v in sorted(members))


def read_solution(path: str | Path) -> frozenset[int]:
    return parse_solution(Path(path).read_text(encoding="utf-8"), str(path))
