"""Greedy interdiction on vertex objects, the Poly-Clique decision rule and its maximization loop.

Each vertex is an object whose removal cost is its degree (the number of
source arcs that must be cut to starve its vertex node). Each edge gives a
pair whose joint removal costs ``c_u + c_v - 1`` because the two vertices
share one edge node. The greedy repeatedly removes the cheapest affordable
pair, falling back to the cheapest affordable single object, and reads the
remaining object count as the residual flow.

Costs are fixed at instance build time and never refreshed after removals.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import KOutOfRangeError, TraceGraphMismatchError
from .flow import max_flow
from .graph import Graph, degrees
from .reduction import build_network, interdiction_budget


class BudgetVariant(enum.Enum):
    """How a pair removal is charged against the budget.

    PROSE charges the pair cost ``c_u + c_v - 1``; LITERAL charges
    ``c_u + c_v`` as the printed update rule reads.
    """

    PROSE = "prose"
    LITERAL = "literal"


@dataclass(frozen=True)
class CostItem:
    vertex: int
    cost: int


@dataclass(frozen=True)
class PairItem:
    u: int
    v: int
    cost: int


@dataclass(frozen=True)
class GreedyInstance:
    n: int
    t_set: tuple[CostItem, ...]
    s_set: tuple[PairItem, ...]
    budget: int


@dataclass(frozen=True)
class GreedyStep:
    kind: str  # "pair" or "single"
    removed: tuple[int, ...]
    charged: int
    budget_before: int
    budget_after: int

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "removed": list(self.removed),
            "charged": self.charged,
            "budget_before": self.budget_before,
            "budget_after": self.budget_after,
        }


@dataclass(frozen=True)
class GreedyTrace:
    n: int
    steps: tuple[GreedyStep, ...]
    final_t: tuple[CostItem, ...]
    final_budget: int

    @property
    def removed(self) -> tuple[int, ...]:
        return tuple(v for s in self.steps for v in s.removed)

    def to_json(self) -> dict:
        return {
            "steps": [s.to_json() for s in self.steps],
            "final_t": [[c.vertex, c.cost] for c in self.final_t],
            "final_budget": self.final_budget,
        }


@dataclass(frozen=True)
class DecisionOutcome:
    k: int
    claimed: bool
    final_t_size: int
    initial_budget: int
    trace: GreedyTrace
    short_circuited: bool

    def to_json(self, with_trace: bool = False) -> dict:
        doc = {
            "k": self.k,
            "claimed": "yes" if self.claimed else "no",
            "final_t_size": self.final_t_size,
            "initial_budget": self.initial_budget,
            "short_circuited": self.short_circuited,
        }
        if with_trace:
            doc["trace"] = self.trace.to_json()
        return doc


@dataclass(frozen=True)
class MaximizeResult:
    claimed_size: int
    per_k: tuple[DecisionOutcome, ...] = field(default=())


@dataclass(frozen=True)
class TraceAudit:
    removed: frozenset[int]
    charged_total: int
    true_arc_count: int
    actual_flow: int
    final_t_size: int

    def to_json(self) -> dict:
        return {
            "removed": sorted(self.removed),
            "charged_total": self.charged_total,
            "true_arc_count": self.true_arc_count,
            "actual_flow": self.actual_flow,
            "final_t_size": self.final_t_size,
        }


def _check_k(g: Graph, k: int) -> None:
    if not 2 <= k <= g.n:
        raise KOutOfRangeError(f"K must satisfy 2 <= K <= n = {g.n}, got {k}")


def build_instance(g: Graph, k: int) -> GreedyInstance:
    _check_k(g, k)
    return instance_with_budget(g, interdiction_budget(g.m, k))


def instance_with_budget(g: Graph, budget: int) -> GreedyInstance:
    """Instance with an arbitrary budget, for running the greedy outside the clique setting."""
    cost = degrees(g)
    t_set = tuple(CostItem(v, cost[v - 1]) for v in g.vertices)
    pairs = [PairItem(u, v, cost[u - 1] + cost[v - 1] - 1) for u, v in g.edges]
    # list.sort is stable, so equal costs keep edge input order
    pairs.sort(key=lambda p: p.cost)
    return GreedyInstance(g.n, t_set, tuple(pairs), budget)


def greedy_states(inst: GreedyInstance, variant: BudgetVariant = BudgetVariant.PROSE):
    """Run the greedy, yielding ``(step, t_items, s_items)`` after every removal.

    ``t_items`` and ``s_items`` are the live lists; copy them if they must
    outlive the next iteration.
    """
    t = list(inst.t_set)
    s = list(inst.s_set)
    cost = {c.vertex: c.cost for c in t}
    budget = inst.budget
    while t:
        if s and s[0].cost <= budget:
            pair = s[0]
            gone = {pair.u, pair.v}
            charged = pair.cost if variant is BudgetVariant.PROSE else cost[pair.u] + cost[pair.v]
            kind, removed = "pair", (pair.u, pair.v)
        else:
            best = min(t, key=lambda c: c.cost)  # first occurrence on ties
            if best.cost > budget:
                return
            gone = {best.vertex}
            charged = best.cost
            kind, removed = "single", (best.vertex,)
        t[:] = [c for c in t if c.vertex not in gone]
        s[:] = [p for p in s if p.u not in gone and p.v not in gone]
        step = GreedyStep(kind, removed, charged, budget, budget - charged)
        budget -= charged
        yield step, t, s


def greedy_run(inst: GreedyInstance, variant: BudgetVariant = BudgetVariant.PROSE) -> tuple[int, GreedyTrace]:
    steps = []
    final_t = inst.t_set
    budget = inst.budget
    for step, t, _ in greedy_states(inst, variant):
        steps.append(step)
        final_t = tuple(t)
        budget = step.budget_after
    return len(final_t), GreedyTrace(inst.n, tuple(steps), final_t, budget)


def decide(g: Graph, k: int, variant: BudgetVariant = BudgetVariant.PROSE) -> DecisionOutcome:
    """Poly-Clique: claim a ``k``-clique iff exactly ``k`` objects survive the greedy.

    A negative budget short-circuits to "no" without running the greedy.
    """
    _check_k(g, k)
    budget = interdiction_budget(g.m, k)
    if budget < 0:
        empty = GreedyTrace(g.n, (), tuple(CostItem(v, c) for v, c in zip(g.vertices, degrees(g))), budget)
        return DecisionOutcome(k, False, g.n, budget, empty, True)
    size, trace = greedy_run(build_instance(g, k), variant)
    return DecisionOutcome(k, size == k, size, budget, trace, False)


def maximize(g: Graph, variant: BudgetVariant = BudgetVariant.PROSE) -> MaximizeResult:
    """Try ``K = n, n-1, ..., 2`` with a fresh instance each time; stop at the first yes."""
    outcomes = []
    for k in range(g.n, 1, -1):
        out = decide(g, k, variant)
        outcomes.append(out)
        if out.claimed:
            return MaximizeResult(k, tuple(outcomes))
    return MaximizeResult(1 if g.n >= 1 else 0, tuple(outcomes))


def audit_trace(g: Graph, trace: GreedyTrace) -> TraceAudit:
    """Measure what a greedy trace actually interdicts on the real network.

    The source arcs cut are those of every edge touching a removed vertex;
    ``actual_flow`` is the exact max flow after cutting them.
    """
    removed = trace.removed
    gone = frozenset(removed)
    survivors = {c.vertex for c in trace.final_t}
    if (
        trace.n != g.n
        or len(gone) != len(removed)
        or any(not 1 <= v <= g.n for v in gone)
        or gone & survivors
        or len(gone) + len(survivors) != g.n
    ):
        raise TraceGraphMismatchError("trace does not describe a greedy run on this graph")
    cut = [i for i, (u, v) in enumerate(g.edges) if u in gone or v in gone]
    return TraceAudit(
        removed=gone,
        charged_total=sum(s.charged for s in trace.steps),
        true_arc_count=len(cut),
        actual_flow=max_flow(build_network(g), cut),
        final_t_size=len(survivors),
    )
