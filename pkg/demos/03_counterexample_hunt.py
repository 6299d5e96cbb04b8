"""Compare the greedy decision with the exact clique oracle on every small graph.

Run: python demos/03_counterexample_hunt.py
"""

from polyclique import ExhaustiveMode, audit_trace, decide, from_edge_list, hunt, max_clique_exact

for n in (4, 5, 6):
    s = hunt(ExhaustiveMode(n)).summary
    print(f"n={n}: {s['agreements']}/{s['total']} agree")
    for tally in s["by_k"].values():
        if tally["disagreements"]:
            print(f"   K={tally['k']}: {tally['false_no']} false no, {tally['false_yes']} false yes")

# The first disagreement on five vertices.
first = hunt(ExhaustiveMode(5)).summary["first_disagreement"]
g = from_edge_list(first["n"], first["edges"])
print("\ngraph:", g.edges, "K =", first["k"])
print("exact maximum clique:", max_clique_exact(g).vertices)

out = decide(g, first["k"])
for step in out.trace.steps:
    print(f"  {step.kind} {step.removed} charged {step.charged}, budget left {step.budget_after}")
print("objects left:", out.final_t_size, "so the greedy answers", "yes" if out.claimed else "no")

# The cheapest pair is taken first; the budget left over cannot pay for any
# remaining object, although the budget of four arcs could cut every edge
# except (2,4) and leave a flow of exactly 2.
audit = audit_trace(g, out.trace)
print("charged", audit.charged_total, "for", audit.true_arc_count, "real arcs; residual flow", audit.actual_flow)
