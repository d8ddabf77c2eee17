"""Both directions of the dominating-set correspondence, checked on instances.

The reduction claims that G has a dominating set of size k exactly when the
gadget graph G' has a liar's dominating set of size k + 4l + 3n.  Nothing
here assumes the claim: every step is verified, and any failure is reported
as a :class:`~liarsdom.errors.Certificate` carrying the concrete sets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from liarsdom.embedding import GridEmbedding, embed_graph, validate_embedding
from liarsdom.errors import (
    Certificate,
    FalsificationCertificate,
    InvalidEmbedding,
    NotDominating,
    NotLiarsDominating,
    SizeBoundViolated,
    SupportNotContained,
)
from liarsdom.graphs import SimpleGraph, is_dominating, is_liars_dominating
from liarsdom.reduction import JointOrigin, ReductionMap, reduce
from liarsdom.solvers import (
    DEFAULT_BUDGET,
    Problem,
    branch_and_bound_lds,
    brute_force_minimum,
    prove_no_solution_of_size,
)


def forward_map(rmap: ReductionMap, d: Iterable[int]) -> frozenset[int]:
    """Node points of ``d`` plus every joint and support point, verified on G'."""
    d = frozenset(d)
    rep = is_dominating(rmap.graph, d)
    if not rep.ok:
        raise NotDominating(f"not a dominating set of G: {rep.describe()}")
    nodes = rmap.node_point
    out = frozenset(nodes[v] for v in d) | frozenset(rmap.joint_ids) | frozenset(rmap.support_ids)
    check = is_liars_dominating(rmap.instance.to_graph(), out)
    if not check.ok:
        raise FalsificationCertificate(
            Certificate(
                "forward map yields a liar's dominating set",
                check.describe(),
                {"D": sorted(d), "L": sorted(out)},
            )
        )
    return out


def extract_dominating_set(rmap: ReductionMap, L: Iterable[int]) -> frozenset[int]:
    """Project a liar's dominating set of G' to a dominating set of G.

    Keep the vertices whose node point is in ``L``, then add undominated
    vertices in id order.  Raises a certificate when supports are missing
    from ``L`` or the result exceeds ``|L| - 4l - 3n``.
    """
    L = frozenset(L)
    rep = is_liars_dominating(rmap.instance.to_graph(), L)
    if not rep.ok:
        raise NotLiarsDominating(rep.describe())
    missing = sorted(set(rmap.support_ids) - L)
    if missing:
        raise SupportNotContained(
            Certificate("every liar's dominating set contains all support points", f"missing {missing}", {"L": sorted(L)})
        )
    g = rmap.graph
    point_of = rmap.node_point
    d = {v for v in range(g.vertex_count) if point_of[v] in L}
    for v in range(g.vertex_count):
        if v not in d and not (g.adjacency[v] & d):
            d.add(v)
    bound = len(L) - rmap.j_count - rmap.s_count
    if len(d) > bound:
        raise SizeBoundViolated(
            Certificate(
                "extracted dominating set fits |L| - 4l - 3n",
                f"|D| = {len(d)} > {bound} = {len(L)} - {rmap.j_count} - {rmap.s_count}",
                {"L": sorted(L), "D": sorted(d)},
            )
        )
    return frozenset(d)


def forced_support_audit(rmap: ReductionMap, all_min_lds: Iterable[Iterable[int]]) -> bool:
    s = set(rmap.support_ids)
    return all(s <= set(L) for L in all_min_lds)


@dataclass
class TheoremReport:
    n: int
    l: int
    gamma_ds: int
    gamma_lds: int
    expected: int
    passed: bool
    ds_witness: tuple[int, ...]
    lds_witness: tuple[int, ...]
    method: str
    notes: list[str] = field(default_factory=list)
    certificate: Certificate | None = None

    def record(self) -> str:
        """Single-line machine-readable form."""
        payload = {
            "n": self.n,
            "l": self.l,
            "gamma_ds": self.gamma_ds,
            "gamma_lds": self.gamma_lds,
            "expected": self.expected,
            "pass": self.passed,
            "ds_witness": list(self.ds_witness),
            "lds_witness": list(self.lds_witness),
            "method": self.method,
            "notes": self.notes,
        }
        if self.certificate is not None:
            payload["certificate"] = {"claim": self.certificate.claim, "detail": self.certificate.detail}
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    def table(self) -> str:
        rows = [
            ("n (vertices of G)", self.n),
            ("l (steps)", self.l),
            ("gamma(G)", self.gamma_ds),
            ("gamma_LR(G')", self.gamma_lds),
            ("gamma(G) + 4l + 3n", self.expected),
            ("result", "PASS" if self.passed else "FAIL"),
            ("method", self.method),
        ]
        width = max(len(k) for k, _ in rows)
        lines = [f"{k.ljust(width)}  {v}" for k, v in rows]
        lines += [f"note: {x}" for x in self.notes]
        if self.certificate is not None:
            lines.append(f"certificate: {self.certificate.claim}: {self.certificate.detail}")
        return "\n".join(lines)


def theorem_check(g: SimpleGraph, emb: GridEmbedding | None = None, budget: int = DEFAULT_BUDGET) -> TheoremReport:
    """Compare gamma_LR(G') with gamma(G) + 4l + 3n on one instance.

    gamma(G) comes from the brute-force oracle.  The forward map of a minimum
    dominating set is a witness at the expected size; a descending proof at
    expected - 1 then settles equality.  If that proof finds a smaller set,
    the exact minimum is computed by branch and bound and the report carries
    the smaller set as a certificate.
    """
    if emb is None:
        emb = embed_graph(g)
    else:
        problems = validate_embedding(g, emb)
        if problems:
            raise InvalidEmbedding("; ".join(p.message for p in problems))
    inst, rmap = reduce(g, emb)
    gp = inst.to_graph()
    notes = []
    if len(g.edges) <= 2:
        notes.append(f"|E| = {len(g.edges)} <= 2, too few edges for the general-case argument")

    ds = brute_force_minimum(Problem.DS, g, budget)
    assert ds.solution is not None
    gamma_ds = len(ds.solution)
    expected = gamma_ds + rmap.j_count + rmap.s_count
    witness = forward_map(rmap, ds.solution)

    if prove_no_solution_of_size(Problem.LDS, gp, expected - 1, budget):
        return TheoremReport(
            rmap.n, rmap.l, gamma_ds, expected, expected, True,
            tuple(sorted(ds.solution)), tuple(sorted(witness)),
            "witness at expected + exhaustive refutation at expected-1", notes,
        )

    best = branch_and_bound_lds(gp, budget)
    assert best.solution is not None
    smaller = tuple(sorted(best.solution))
    cert = Certificate(
        "gamma_LR(G') = gamma(G) + 4l + 3n",
        f"liar's dominating set of size {len(smaller)} < {expected}",
        {"L": list(smaller)},
    )
    return TheoremReport(
        rmap.n, rmap.l, gamma_ds, len(smaller), expected, False,
        tuple(sorted(ds.solution)), smaller,
        "witness at expected; refutation at expected-1 failed; minimum by branch and bound", notes, cert,
    )


def joint_profile(rmap: ReductionMap, L: Iterable[int]) -> dict[tuple[int, int], int]:
    """Number of joints of ``L`` on each edge; handy when inspecting certificates."""
    L = set(L)
    out: dict[tuple[int, int], int] = {}
    for pid, o in enumerate(rmap.origin):
        if isinstance(o, JointOrigin) and pid in L:
            out[o.edge] = out.get(o.edge, 0) + 1
    return out

