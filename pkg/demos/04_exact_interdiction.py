"""Optimal interdiction by enumeration, and the clique/flow equivalence it supports.

Run: python demos/04_exact_interdiction.py
"""

from polyclique import build_network, exact_min_interdicted_flow, gen_gnp, interdiction_budget, wood_equivalence
from polyclique.errors import NegativeBudgetError

g = gen_gnp(6, 0.5, seed=3)
net = build_network(g)
print("graph:", g.edges)

for budget in range(g.m + 1):
    opt = exact_min_interdicted_flow(net, budget)
    print(f"budget {budget}: min flow {opt.min_flow}, cut edges {[g.edges[i] for i in sorted(opt.witness)]}")

for k in range(2, g.n + 1):
    try:
        w = wood_equivalence(g, k)
    except NegativeBudgetError:
        print(f"K={k}: budget {interdiction_budget(g.m, k)} < 0, no clique possible")
        continue
    print(f"K={k}: clique={w.clique_exists}, optimal flow={w.optimal_flow}, equivalence holds={w.claim_holds}")
