"""Step through the greedy interdiction and the clique decision built on it.

Run: python demos/02_greedy_walkthrough.py
"""

from polyclique import BudgetVariant, build_instance, decide, from_edge_list, greedy_run, maximize

g = from_edge_list(4, [(1, 2), (2, 3), (3, 4), (1, 3), (2, 4)])

inst = build_instance(g, 3)
print("objects (vertex/cost):", [f"{c.vertex}/{c.cost}" for c in inst.t_set])
print("pairs sorted by cost:", [f"{p.u}+{p.v}/{p.cost}" for p in inst.s_set])
print("budget |E| - C(3,2):", inst.budget)

size, trace = greedy_run(inst)
for step in trace.steps:
    print(f"  {step.kind:6} remove {step.removed} charge {step.charged}: {step.budget_before} -> {step.budget_after}")
print("objects left:", size)

for k in range(2, g.n + 1):
    out = decide(g, k)
    how = "short-circuit" if out.short_circuited else f"|T|={out.final_t_size}"
    print(f"K={k}: {'yes' if out.claimed else 'no'} ({how})")

print("maximize:", maximize(g).claimed_size)

# The two readings of the pair update differ once a pair is taken.
for variant in BudgetVariant:
    _, t = greedy_run(build_instance(g, 2), variant)
    print(variant.value, "final budget at K=2:", t.final_budget)
