"""Exact and heuristic solvers for minimum (liar's) dominating sets.

``brute_force_minimum`` is the trusted oracle: plain ascending enumeration
of subsets in lexicographic order.  ``branch_and_bound_lds`` is the fast
exact solver and is cross-checked against it.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from math import comb

from liarsdom import kernels
from liarsdom.errors import BudgetExceeded, Infeasible
from liarsdom.graphs import SimpleGraph, from_mask, liars_feasible, to_mask
from liarsdom.kernels import popcount

DEFAULT_BUDGET = 2**28


class Problem(str, enum.Enum):
    DS = "ds"
    LDS = "lds"

    @property
    def kernel_code(self) -> int:
        return kernels.DS if self is Problem.DS else kernels.LDS


class Status(str, enum.Enum):
    PROVEN_MINIMUM = "proven_minimum"
    FEASIBLE_ONLY = "feasible_only"
    INFEASIBLE = "infeasible"


@dataclass
class SolveStats:
    subsets_examined: int = 0
    nodes_expanded: int = 0
    elapsed: float = 0.0


@dataclass
class SolveResult:
    solution: frozenset[int] | None
    status: Status
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def size(self) -> int | None:
        return None if self.solution is None else len(self.solution)

    @property
    def feasible(self) -> bool:
        return self.solution is not None


def _problem(p: Problem | str) -> Problem:
    return p if isinstance(p, Problem) else Problem(p)


def _scan(problem: Problem, g: SimpleGraph, k: int, limit: int, budget: int, prefer: str | None = None):
    return kernels.search_size(
        problem.kernel_code,
        g.closed_masks,
        g.intersecting_pair_unions,
        range(g.vertex_count),
        0,
        k,
        limit,
        budget,
        prefer=prefer,
    )


def brute_force_minimum(
    problem: Problem | str, g: SimpleGraph, budget: int = DEFAULT_BUDGET, *, prefer: str | None = None
) -> SolveResult:
    """Smallest feasible set by ascending size, lexicographically first at that size."""
    problem = _problem(problem)
    t0 = time.perf_counter()
    stats = SolveStats()
    if problem is Problem.LDS and not liars_feasible(g).ok:
        stats.elapsed = time.perf_counter() - t0
        return SolveResult(None, Status.INFEASIBLE, stats)
    for k in range(g.vertex_count + 1):
        sols, examined, hit = _scan(problem, g, k, 1, budget - stats.subsets_examined, prefer)
        stats.subsets_examined += examined
        if sols:
            stats.elapsed = time.perf_counter() - t0
            return SolveResult(from_mask(sols[0]), Status.PROVEN_MINIMUM, stats)
        if hit:
            raise BudgetExceeded(f"examined {stats.subsets_examined} subsets without finishing size {k}")
    # unreachable for DS (V dominates) and for feasible LDS
    stats.elapsed = time.perf_counter() - t0
    return SolveResult(None, Status.INFEASIBLE, stats)


def prove_no_solution_of_size(
    problem: Problem | str, g: SimpleGraph, k: int, budget: int = DEFAULT_BUDGET, *, prefer: str | None = None
) -> bool:
    """True iff no feasible set has exactly ``k`` members.

    Both problems are monotone under adding vertices, so a True answer also
    rules out every size below ``k``.
    """
    problem = _problem(problem)
    if not 0 <= k <= g.vertex_count:
        raise ValueError(f"k={k} outside 0..{g.vertex_count}")
    sols, _, hit = _scan(problem, g, k, 1, budget, prefer)
    if sols:
        return False
    if hit:
        raise BudgetExceeded(f"{comb(g.vertex_count, k)} subsets of size {k} exceed budget {budget}")
    return True


def all_feasible_of_size(
    problem: Problem | str, g: SimpleGraph, k: int, budget: int = DEFAULT_BUDGET, *, prefer: str | None = None
) -> list[frozenset[int]]:
    """Every feasible set with exactly ``k`` members, in lexicographic order."""
    problem = _problem(problem)
    sols, _, hit = _scan(problem, g, k, 0, budget, prefer)
    if hit:
        raise BudgetExceeded(f"{comb(g.vertex_count, k)} subsets of size {k} exceed budget {budget}")
    return [from_mask(m) for m in sols]


def all_minimum_solutions(problem: Problem | str, g: SimpleGraph, budget: int = DEFAULT_BUDGET) -> list[frozenset[int]]:
    problem = _problem(problem)
    if problem is Problem.LDS:
        best = branch_and_bound_lds(g)
    else:
        best = brute_force_minimum(problem, g, budget)
    if best.size is None:
        return []
    return all_feasible_of_size(problem, g, best.size, budget)


def deficiency(g: SimpleGraph, d) -> int:
    """Unmet liar's-domination demand; zero exactly when ``d`` is a liar's dominating set."""
    return kernels.deficiency(g.closed_masks, to_mask(d))


def greedy_lds(g: SimpleGraph, trace: list[tuple[int, int]] | None = None) -> SolveResult:
    """Repeatedly add the vertex with the largest deficiency decrease (smallest id on ties).

    If ``trace`` is given, ``(vertex, deficiency_after)`` is appended per step.
    """
    feas = liars_feasible(g)
    if not feas.ok:
        raise Infeasible(feas.reason)
    t0 = time.perf_counter()
    nb = g.closed_masks
    mask = 0
    current = kernels.deficiency(nb, mask)
    stats = SolveStats()
    while current > 0:
        best_v, best_val = -1, current
        for v in range(g.vertex_count):
            bit = 1 << v
            if mask & bit:
                continue
            val = kernels.deficiency(nb, mask | bit)
            stats.subsets_examined += 1
            if val < best_val:
                best_v, best_val = v, val
        if best_v < 0:
            raise AssertionError("greedy stalled with positive deficiency on a feasible graph")
        mask |= 1 << best_v
        current = best_val
        if trace is not None:
            trace.append((best_v, current))
        stats.nodes_expanded += 1
    stats.elapsed = time.perf_counter() - t0
    return SolveResult(from_mask(mask), Status.FEASIBLE_ONLY, stats)


# -- branch and bound ---------------------------------------------------------------


def lds_constraints(g: SimpleGraph) -> list[tuple[int, int]]:
    """Covering constraints ``(mask, need)``: need members of ``mask`` in the set.

    One per vertex (need 2) and one per intersecting pair (need 3); pairs
    with disjoint neighbourhoods follow from the vertex constraints.
    Duplicate masks keep their largest demand.
    """
    need: dict[int, int] = {}
    for m in g.closed_masks:
        need[m] = max(need.get(m, 0), 2)
    for m in g.intersecting_pair_unions:
        need[m] = max(need.get(m, 0), 3)
    return sorted(need.items(), key=lambda t: (popcount(t[0]), t[0]))


def forced_vertices(g: SimpleGraph) -> int | None:
    """Vertices every liar's dominating set contains, or None when none exists.

    A constraint whose mask has exactly ``need`` members forces all of them;
    fewer than ``need`` members means no solution at all.
    """
    forced = 0
    for mask, need in lds_constraints(g):
        c = popcount(mask)
        if c < need:
            return None
        if c == need:
            forced |= mask
    return forced


class _Search:
    def __init__(self, g: SimpleGraph, budget: int):
        self.n = g.vertex_count
        self.cons = lds_constraints(g)
        self.budget = budget
        self.nodes = 0
        self.best_mask: int | None = None
        self.best_size = self.n + 1

    def propagate(self, inc: int, exc: int) -> tuple[int, int] | None:
        changed = True
        while changed:
            changed = False
            for mask, need in self.cons:
                have = popcount(mask & inc)
                if have >= need:
                    continue
                open_ = mask & ~inc & ~exc
                deficit = need - have
                room = popcount(open_)
                if room < deficit:
                    return None
                if room == deficit:
                    inc |= open_
                    changed = True
        return inc, exc

    def lower_bound(self, inc: int, exc: int) -> tuple[int, int | None]:
        total = 0
        worst = 0
        branch_mask = None
        branch_key = None
        cover = [0] * self.n
        for mask, need in self.cons:
            deficit = need - popcount(mask & inc)
            if deficit <= 0:
                continue
            total += deficit
            worst = max(worst, deficit)
            open_ = mask & ~inc & ~exc
            slack = popcount(open_) - deficit
            key = (slack, mask)
            if branch_key is None or key < branch_key:
                branch_key, branch_mask = key, open_
            m = open_
            while m:
                low = m & -m
                cover[low.bit_length() - 1] += 1
                m ^= low
        if total == 0:
            return 0, None
        maxcov = max(cover)
        return max(worst, -(-total // maxcov)), branch_mask

    def run(self, inc: int, exc: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"branch and bound expanded more than {self.budget} nodes")
        state = self.propagate(inc, exc)
        if state is None:
            return
        inc, exc = state
        size = popcount(inc)
        lb, branch_mask = self.lower_bound(inc, exc)
        if size + lb >= self.best_size:
            return
        if branch_mask is None:
            self.best_size, self.best_mask = size, inc
            return
        bit = branch_mask & -branch_mask
        self.run(inc | bit, exc)
        self.run(inc, exc | bit)


def branch_and_bound_lds(g: SimpleGraph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Exact minimum liar's dominating set.

    Forcing first (a vertex or pair whose neighbourhood has exactly as many
    members as it needs), then in/out branching on the most constrained
    unmet constraint, pruned by ``max(largest deficit, ceil(total deficit /
    max coverage))``.  The greedy solution seeds the incumbent.
    """
    t0 = time.perf_counter()
    stats = SolveStats()
    forced = forced_vertices(g)
    if forced is None or not liars_feasible(g).ok:
        stats.elapsed = time.perf_counter() - t0
        return SolveResult(None, Status.INFEASIBLE, stats)
    search = _Search(g, budget)
    seed = greedy_lds(g).solution
    assert seed is not None
    search.best_mask, search.best_size = to_mask(seed), len(seed)
    search.run(forced, 0)
    stats.nodes_expanded = search.nodes
    stats.elapsed = time.perf_counter() - t0
    assert search.best_mask is not None
    return SolveResult(from_mask(search.best_mask), Status.PROVEN_MINIMUM, stats)


def solve(problem: Problem | str, g: SimpleGraph, method: str = "bnb", budget: int = DEFAULT_BUDGET) -> SolveResult:
    problem = _problem(problem)
    if method == "brute":
        return brute_force_minimum(problem, g, budget)
    if method == "greedy":
        if problem is not Problem.LDS:
            raise ValueError("greedy is implemented for lds only")
        try:
            return greedy_lds(g)
        except Infeasible:
            return SolveResult(None, Status.INFEASIBLE)
    if method == "bnb":
        if problem is Problem.LDS:
            return branch_and_bound_lds(g, budget)
        return brute_force_minimum(problem, g, budget)
    raise ValueError(f"unknown method {method!r}")
