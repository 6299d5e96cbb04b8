from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from polyclique.errors import InvalidArcIndexError
from polyclique.flow import dinic, max_flow
from polyclique.graph import Graph, all_labeled_graphs, from_edge_list, gen_gnp
from polyclique.reduction import build_network


def arcs_after(net, cut):
    return [a for i, a in enumerate(net.source_arcs) if i not in cut] + list(net.middle_arcs + net.sink_arcs)


def brute_min_cut(net, cut):
    """Minimum s-t cut capacity by enumerating every source-side node set."""
    arcs = arcs_after(net, cut)
    inner = [x for x in range(net.num_nodes) if x not in (net.source, net.sink)]
    best = None
    for bits in product((0, 1), repeat=len(inner)):
        side = {net.source} | {x for x, b in zip(inner, bits) if b}
        cap = sum(a.cap for a in arcs if a.tail in side and a.head not in side)
        best = cap if best is None else min(best, cap)
    return best


def scipy_flow(net, cut):
    arcs = arcs_after(net, cut)
    if not arcs:
        return 0
    rows = [a.tail for a in arcs]
    cols = [a.head for a in arcs]
    mat = csr_matrix((np.array([a.cap for a in arcs], dtype=np.int32), (rows, cols)),
                     shape=(net.num_nodes, net.num_nodes))
    return maximum_flow(mat, net.source, net.sink).flow_value


def covered_vertices(g, cut):
    return len({w for i, e in enumerate(g.edges) if i not in cut for w in e})


def test_triangle_flows(triangle):
    net = build_network(triangle)
    assert max_flow(net) == 3
    assert max_flow(net, [0, 1, 2]) == 0


def test_desk_outside_triangle(desk_graph):
    # edges (1,2) and (1,3) are indices 0 and 3; {23,34,24} remain
    assert max_flow(build_network(desk_graph), [0, 3]) == 3


def test_isolated_vertex_loses_a_unit():
    g = from_edge_list(4, [(1, 2), (2, 3), (1, 3)])
    assert max_flow(build_network(g)) == g.n - 1


@pytest.mark.parametrize("bad", [[5], [-1], [0, 0], ["0"], [True]])
def test_invalid_arc_index(desk_graph, bad):
    with pytest.raises(InvalidArcIndexError):
        max_flow(build_network(desk_graph), bad)


def test_dinic_textbook():
    # CLRS figure 26.1; max flow 23
    arcs = [(0, 1, 16), (0, 2, 13), (1, 3, 12), (2, 1, 4), (2, 4, 14), (3, 2, 9), (3, 5, 20), (4, 3, 7), (4, 5, 4)]
    assert dinic(6, arcs, 0, 5) == 23


def test_exhaustive_cut_oracle_small_graphs():
    for n in range(1, 5):
        for g in all_labeled_graphs(n):
            if g.m > 8:
                continue
            net = build_network(g)
            for size in range(g.m + 1):
                for cut in combinations(range(g.m), size):
                    expected = brute_min_cut(net, set(cut)) if n <= 3 else covered_vertices(g, set(cut))
                    assert max_flow(net, cut) == expected


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.floats(0, 1), st.integers(0, 2**32), st.data())
def test_cut_oracle_random(n, p, seed, data):
    g = gen_gnp(n, p, seed)
    if g.m > 8:
        return
    cut = set(data.draw(st.lists(st.integers(0, max(g.m - 1, 0)), unique=True, max_size=g.m))) if g.m else set()
    net = build_network(g)
    assert max_flow(net, cut) == brute_min_cut(net, cut)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 40), st.floats(0, 1), st.integers(0, 2**32), st.data())
def test_scipy_and_cover_agree(n, p, seed, data):
    g = gen_gnp(n, p, seed)
    cut = set(data.draw(st.lists(st.integers(0, g.m - 1), unique=True, max_size=g.m))) if g.m else set()
    net = build_network(g)
    f = max_flow(net, cut)
    assert f == scipy_flow(net, cut) == covered_vertices(g, cut)
    assert 0 <= f <= g.n
    assert f <= 2 * (g.m - len(cut))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 15), st.floats(0, 1), st.integers(0, 2**32), st.data())
def test_monotone_in_interdiction(n, p, seed, data):
    g = gen_gnp(n, p, seed)
    if not g.m:
        return
    net = build_network(g)
    order = data.draw(st.permutations(range(g.m)))
    flows = [max_flow(net, order[:i]) for i in range(g.m + 1)]
    assert all(a >= b for a, b in zip(flows, flows[1:]))
    assert flows[-1] == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.floats(0.05, 1), st.integers(0, 2**32))
def test_no_isolated_vertex_law(n, p, seed):
    g = gen_gnp(n, p, seed)
    net = build_network(g)
    isolated = sum(1 for v in g.vertices if not g.adjacency[v])
    assert max_flow(net) == g.n - isolated


def test_empty_graph_flow():
    assert max_flow(build_network(Graph(0, ()))) == 0
    assert max_flow(build_network(Graph(3, ()))) == 0
