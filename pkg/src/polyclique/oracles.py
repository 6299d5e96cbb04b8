"""Exact ground truth for small instances.

* maximum clique via Bron-Kerbosch with pivoting,
* k-clique decision via pruned backtracking,
* optimal source-arc interdiction by exhaustive subset enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import NegativeBudgetError, TooLargeError
from .flow import InterdictionSet, max_flow
from .graph import Graph
from .reduction import LayeredNetwork, build_network, interdiction_budget

DEFAULT_LIMIT = 2_000_000


@dataclass(frozen=True)
class CliqueWitness:
    size: int
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"size": self.size, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class InterdictionOptimum:
    min_flow: int
    witness: InterdictionSet
    budget_used: int

    def to_json(self) -> dict:
        return {"min_flow": self.min_flow, "witness": sorted(self.witness), "budget_used": self.budget_used}


@dataclass(frozen=True)
class WoodCheck:
    clique_exists: bool
    optimal_flow: int
    claim_holds: bool
    budget: int


def maximal_cliques(g: Graph):
    """Yield every maximal clique once (Bron-Kerbosch, Tomita pivot)."""
    adj = g.adjacency

    def expand(r, p, x):
        if not p and not x:
            yield r
            return
        pivot = max(p | x, key=lambda u: (len(p & adj[u]), -u))
        for v in sorted(p - adj[pivot]):
            yield from expand(r + (v,), p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    if g.n:
        yield from expand((), frozenset(g.vertices), frozenset())


def max_clique_exact(g: Graph) -> CliqueWitness:
    """Maximum clique; among maximum cliques the lexicographically smallest vertex set wins."""
    best: tuple[int, ...] = ()
    for c in maximal_cliques(g):
        c = tuple(sorted(c))
        if len(c) > len(best) or (len(c) == len(best) and c < best):
            best = c
    return CliqueWitness(len(best), best)


def has_clique_exact(g: Graph, k: int) -> bool:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k == 0:
        return True
    if k > g.n or k * (k - 1) // 2 > g.m:
        return False
    adj = g.adjacency

    def extend(size, candidates):
        if size == k:
            return True
        cands = sorted(candidates)
        for i, v in enumerate(cands):
            if size + len(cands) - i < k:
                return False
            if extend(size + 1, adj[v].intersection(cands[i + 1:])):
                return True
        return False

    # cheap degree filter: a k-clique member has degree >= k-1
    return extend(0, {v for v in g.vertices if len(adj[v]) >= k - 1})


def exact_min_interdicted_flow(
    net: LayeredNetwork, budget: int, limit: int = DEFAULT_LIMIT
) -> InterdictionOptimum:
    """Least residual max flow over all sets of ``min(budget, |E|)`` source arcs.

    Flow is monotone in the interdiction set, so sets of exactly that size
    dominate smaller ones. The witness is the first optimum in
    lexicographic subset order.

    Raises:
        TooLargeError: more than ``limit`` subsets would be enumerated.
    """
    if budget < 0:
        raise NegativeBudgetError(f"budget must be non-negative, got {budget}")
    m = len(net.source_arcs)
    size = min(budget, m)
    count = comb(m, size)
    if count > limit:
        raise TooLargeError(f"C({m},{size}) = {count} interdiction sets exceed limit {limit}")
    best_flow, best_set = None, ()
    for subset in combinations(range(m), size):
        f = max_flow(net, subset)
        if best_flow is None or f < best_flow:
            best_flow, best_set = f, subset
            if f == 0:
                break
    return InterdictionOptimum(best_flow, frozenset(best_set), size)


def wood_equivalence(g: Graph, k: int, limit: int = DEFAULT_LIMIT) -> WoodCheck:
    """Check "k-clique exists iff interdicting |E| - C(k,2) source arcs leaves flow k"."""
    budget = interdiction_budget(g.m, k)
    if budget < 0:
        raise NegativeBudgetError(
            f"budget {budget} < 0: a {k}-clique needs {k * (k - 1) // 2} edges, graph has {g.m}; clique impossible"
        )
    exists = has_clique_exact(g, k)
    opt = exact_min_interdicted_flow(build_network(g), budget, limit)
    return WoodCheck(exists, opt.min_flow, exists == (opt.min_flow == k), budget)
