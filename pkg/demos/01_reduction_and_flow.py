"""Build the layered network for a small graph and measure flows on it.

Run: python demos/01_reduction_and_flow.py
"""

from polyclique import build_network, from_edge_list, max_flow

# Four vertices, two triangles {1,2,3} and {2,3,4} sharing the edge (2,3).
g = from_edge_list(4, [(1, 2), (2, 3), (3, 4), (1, 3), (2, 4)])
net = build_network(g)

print("nodes:", net.num_nodes, "arcs:", len(net.arcs))
print("source arcs (cap 2):", len(net.source_arcs))
print("edge->vertex arcs (cap 1):", len(net.middle_arcs))
print("vertex->sink arcs (cap 1):", len(net.sink_arcs))

# With nothing interdicted every vertex node can pass one unit.
print("flow, nothing cut:", max_flow(net))

# Source arc i belongs to g.edges[i]. Cutting the two edges at vertex 1
# leaves the triangle {2,3,4}, which still carries three units.
print("flow, cut edges (1,2),(1,3):", max_flow(net, [0, 3]))

# Isolated vertices never receive flow.
lonely = from_edge_list(4, [(1, 2), (2, 3), (1, 3)])
print("triangle plus an isolated vertex:", max_flow(build_network(lonely)), "of", lonely.n)
