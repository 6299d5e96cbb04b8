"""Greedy network-interdiction clique procedure, with exact oracles to audit it."""

__version__ = "0.1.0"

from .flow import max_flow  # noqa: E402
from .graph import (  # noqa: E402
    Graph,
    complete_graph,
    degrees,
    empty_graph,
    from_edge_list,
    gen_gnp,
    gen_planted_clique,
    parse_dimacs,
    path_graph,
)
from .greedy import (  # noqa: E402
    BudgetVariant,
    audit_trace,
    build_instance,
    decide,
    greedy_run,
    maximize,
)
from .harness import ExhaustiveMode, RandomMode, emit_report, hunt, verify_graph  # noqa: E402
from .oracles import (  # noqa: E402
    exact_min_interdicted_flow,
    has_clique_exact,
    max_clique_exact,
    wood_equivalence,
)
from .reduction import LayeredNetwork, build_network, interdiction_budget  # noqa: E402

__all__ = [
    "BudgetVariant",
    "ExhaustiveMode",
    "Graph",
    "LayeredNetwork",
    "RandomMode",
    "audit_trace",
    "build_instance",
    "build_network",
    "complete_graph",
    "decide",
    "degrees",
    "emit_report",
    "empty_graph",
    "exact_min_interdicted_flow",
    "from_edge_list",
    "gen_gnp",
    "gen_planted_clique",
    "greedy_run",
    "has_clique_exact",
    "hunt",
    "interdiction_budget",
    "max_clique_exact",
    "max_flow",
    "maximize",
    "parse_dimacs",
    "path_graph",
    "verify_graph",
    "wood_equivalence",
]
