"""Deterministic SVG drawings of embeddings and point sets.

Node points are filled circles, joint points filled squares, support points
open circles; light lines mark the 40-unit lattice.  Output depends only on
the input, so two renders of the same file are byte-identical.
"""

from __future__ import annotations

from liarsdom.embedding import GRID, GridEmbedding
from liarsdom.geometry import PointKind, UdgInstance

PX = 4  # pixels per deci-unit
PAD = 20


class _Canvas:
    def __init__(self, xs: list[int], ys: list[int]):
        self.x0 = min(xs, default=0) - PAD
        self.x1 = max(xs, default=0) + PAD
        self.y0 = min(ys, default=0) - PAD
        self.y1 = max(ys, default=0) + PAD
        self.body: list[str] = []

    def sx(self, x: int) -> int:
        return (x - self.x0) * PX

    def sy(self, y: int) -> int:
        return (self.y1 - y) * PX

    def grid(self) -> None:
        gx = -(-self.x0 // GRID) * GRID
        while gx <= self.x1:
            self.body.append(
                f'<line x1="{self.sx(gx)}" y1="0" x2="{self.sx(gx)}" y2="{self.sy(self.y0)}" class="grid"/>'
            )
            gx += GRID
        gy = -(-self.y0 // GRID) * GRID
        while gy <= self.y1:
            self.body.append(
                f'<line x1="0" y1="{self.sy(gy)}" x2="{self.sx(self.x1)}" y2="{self.sy(gy)}" class="grid"/>'
            )
            gy += GRID

    def document(self) -> str:
        w, h = self.sx(self.x1), self.sy(self.y0)
        head = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
            "<style>.grid{stroke:#ddd;stroke-width:1}.edge{stroke:#888;stroke-width:2;fill:none}"
            ".path{stroke:#222;stroke-width:3;fill:none}.node{fill:#000}.joint{fill:#000}"
            ".support{fill:#fff;stroke:#000;stroke-width:2}</style>",
            f'<rect x="0" y="0" width="{w}" height="{h}" fill="#fff"/>',
        ]
        return "\n".join(head + self.body + ["</svg>"]) + "\n"


def render_points(inst: UdgInstance) -> str:
    c = _Canvas([p.pos.x for p in inst.points], [p.pos.y for p in inst.points])
    c.grid()
    for u, v in sorted(inst.edges):
        a, b = inst.points[u].pos, inst.points[v].pos
        c.body.append(f'<line x1="{c.sx(a.x)}" y1="{c.sy(a.y)}" x2="{c.sx(b.x)}" y2="{c.sy(b.y)}" class="edge"/>')
    for p in inst.points:
        x, y = c.sx(p.pos.x), c.sy(p.pos.y)
        if p.kind is PointKind.NODE:
            c.body.append(f'<circle cx="{x}" cy="{y}" r="{2 * PX}" class="node"><title>{p.id}</title></circle>')
        elif p.kind is PointKind.JOINT:
            s = 3 * PX
            c.body.append(f'<rect x="{x - s // 2}" y="{y - s // 2}" width="{s}" height="{s}" class="joint"><title>{p.id}</title></rect>')
        else:
            c.body.append(f'<circle cx="{x}" cy="{y}" r="{PX + PX // 2}" class="support"><title>{p.id}</title></circle>')
    return c.document()


def render_embedding(emb: GridEmbedding) -> str:
    pts = list(emb.vertex_pos.values()) + [p for path in emb.edge_paths.values() for p in path]
    c = _Canvas([p.x for p in pts], [p.y for p in pts])
    c.grid()
    for (u, v), path in emb.edge_paths.items():
        coords = " ".join(f"{c.sx(p.x)},{c.sy(p.y)}" for p in path)
        c.body.append(f'<polyline points="{coords}" class="path"><title>{u}-{v}</title></polyline>')
    for v, p in emb.vertex_pos.items():
        c.body.append(f'<circle cx="{c.sx(p.x)}" cy="{c.sy(p.y)}" r="{3 * PX}" class="node"><title>{v}</title></circle>')
    return c.document()
