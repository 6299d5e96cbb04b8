"""Exact integral max flow on a layered network with interdicted source arcs.

Dinic's algorithm on a residual arc array. Interdiction deletes a source
arc outright; there is no partial interdiction.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .errors import InvalidArcIndexError
from .reduction import LayeredNetwork

InterdictionSet = frozenset[int]


def interdiction_set(net: LayeredNetwork, indices: Iterable[int]) -> InterdictionSet:
    """Validate source-arc indices and return them as a frozen set."""
    out = set()
    m = len(net.source_arcs)
    for i in indices:
        if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < m:
            raise InvalidArcIndexError(f"source arc index {i!r} outside 0..{m - 1}")
        if i in out:
            raise InvalidArcIndexError(f"source arc index {i} repeated")
        out.add(i)
    return frozenset(out)


def max_flow(net: LayeredNetwork, interdicted: Iterable[int] = ()) -> int:
    """Max s-t flow after deleting the given source arcs."""
    cut = interdiction_set(net, interdicted)
    arcs = [a for i, a in enumerate(net.source_arcs) if i not in cut]
    arcs += net.middle_arcs
    arcs += net.sink_arcs
    return dinic(net.num_nodes, [(a.tail, a.head, a.cap) for a in arcs], net.source, net.sink)


def dinic(num_nodes: int, arcs: list[tuple[int, int, int]], s: int, t: int) -> int:
    """Maximum flow value of a directed network given as ``(tail, head, cap)`` triples."""
    if s == t:
        raise ValueError("source and sink coincide")
    # residual arc 2j is arcs[j]; 2j+1 is its reverse
    head = []
    cap = []
    out: list[list[int]] = [[] for _ in range(num_nodes)]
    for u, v, c in arcs:
        out[u].append(len(head))
        head.append(v)
        cap.append(c)
        out[v].append(len(head))
        head.append(u)
        cap.append(0)

    total = 0
    while True:
        level = [-1] * num_nodes
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in out[u]:
                if cap[e] > 0 and level[head[e]] < 0:
                    level[head[e]] = level[u] + 1
                    queue.append(head[e])
        if level[t] < 0:
            return total

        nxt = [0] * num_nodes
        while True:
            # iterative DFS along the level graph; path holds residual arc ids
            path: list[int] = []
            u = s
            while u != t:
                adj = out[u]
                i = nxt[u]
                while i < len(adj):
                    e = adj[i]
                    if cap[e] > 0 and level[head[e]] == level[u] + 1:
                        break
                    i += 1
                nxt[u] = i
                if i == len(adj):
                    if u == s:
                        break
                    level[u] = -1
                    e = path.pop()
                    u = head[e ^ 1]
                    nxt[u] += 1
                    continue
                path.append(adj[i])
                u = head[adj[i]]
            if u != t:
                break
            push = min(cap[e] for e in path)
            for e in path:
                cap[e] -= push
                cap[e ^ 1] += push
            total += push
