"""Four-layer capacitated network built from a graph, plus the interdiction budget.

Layout of node ids for a graph with ``m`` edges and ``n`` vertices::

    0                  source s
    1 .. m             one node per graph edge, in edge order
    m+1 .. m+n         one node per graph vertex
    m+n+1              sink t

Arc ``i`` of ``source_arcs`` feeds the node of ``g.edges[i]``, so
interdicting source arc ``i`` and deleting graph edge ``i`` are the same
operation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, from_edge_list

SOURCE_CAP = 2
MIDDLE_CAP = 1
SINK_CAP = 1


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    cap: int


@dataclass(frozen=True)
class LayeredNetwork:
    graph: Graph
    source: int
    sink: int
    edge_nodes: tuple[int, ...]
    vertex_nodes: tuple[int, ...]
    source_arcs: tuple[Arc, ...]
    middle_arcs: tuple[Arc, ...]
    sink_arcs: tuple[Arc, ...]

    @property
    def num_nodes(self) -> int:
        return len(self.edge_nodes) + len(self.vertex_nodes) + 2

    @property
    def arcs(self) -> tuple[Arc, ...]:
        return self.source_arcs + self.middle_arcs + self.sink_arcs

    def vertex_node(self, v: int) -> int:
        return self.vertex_nodes[v - 1]

    def to_json(self) -> dict:
        layer = {self.source: "source", self.sink: "sink"}
        layer.update((x, "edge") for x in self.edge_nodes)
        layer.update((x, "vertex") for x in self.vertex_nodes)
        return {
            "graph": self.graph.to_json(),
            "layers": {
                "source": self.source,
                "edge_nodes": list(self.edge_nodes),
                "vertex_nodes": list(self.vertex_nodes),
                "sink": self.sink,
            },
            "arcs": [
                {"from": a.tail, "to": a.head, "cap": a.cap, "layer": f"{layer[a.tail]}->{layer[a.head]}"}
                for a in self.arcs
            ],
        }


def build_network(g: Graph) -> LayeredNetwork:
    m, n = g.m, g.n
    source, sink = 0, m + n + 1
    edge_nodes = tuple(range(1, m + 1))
    vertex_nodes = tuple(range(m + 1, m + n + 1))
    source_arcs = tuple(Arc(source, x, SOURCE_CAP) for x in edge_nodes)
    middle_arcs = tuple(
        Arc(edge_nodes[i], vertex_nodes[w - 1], MIDDLE_CAP)
        for i, (u, v) in enumerate(g.edges)
        for w in (u, v)
    )
    sink_arcs = tuple(Arc(x, sink, SINK_CAP) for x in vertex_nodes)
    return LayeredNetwork(g, source, sink, edge_nodes, vertex_nodes, source_arcs, middle_arcs, sink_arcs)


def graph_from_network(net: LayeredNetwork) -> Graph:
    """Recover the graph from the middle arcs alone (inverse of :func:`build_network`)."""
    first_vertex = net.vertex_nodes[0] if net.vertex_nodes else 0
    heads: dict[int, list[int]] = {x: [] for x in net.edge_nodes}
    for arc in net.middle_arcs:
        heads[arc.tail].append(arc.head - first_vertex + 1)
    return from_edge_list(len(net.vertex_nodes), [heads[x] for x in net.edge_nodes])


def interdiction_budget(edge_count: int, k: int) -> int:
    """Arcs to interdict when asking for a ``k``-clique: ``|E| - k(k-1)/2``.

    Negative values are returned as-is; they mean a ``k``-clique needs more
    edges than the graph has.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return edge_count - k * (k - 1) // 2
