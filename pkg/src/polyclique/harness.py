"""Batch comparison of the greedy decision rule against the exact clique oracle.

Reports are plain data: the same arguments always give the same records in
the same order, and :func:`emit_report` serializes them byte-identically.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from . import __version__
from .errors import InvalidProbabilityError, TooLargeError
from .graph import Graph, all_labeled_graphs, gen_gnp
from .greedy import BudgetVariant, decide
from .oracles import DEFAULT_LIMIT, has_clique_exact

INLINE_MAX_N = 10

CSV_HEADER = ["index", "n", "k", "claimed", "oracle", "agree", "short_circuited", "variant", "edges", "graph_ref"]


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


@dataclass(frozen=True)
class VerificationRecord:
    graph: Graph
    k: int
    claimed: bool
    oracle: bool
    short_circuited: bool
    variant: BudgetVariant
    graph_ref: dict | None = None

    @property
    def agree(self) -> bool:
        return self.claimed == self.oracle

    def to_json(self) -> dict:
        inline = self.graph.n <= INLINE_MAX_N or self.graph_ref is None
        doc = {
            "n": self.graph.n,
            "edges": [[u, v] for u, v in self.graph.edges] if inline else None,
            "k": self.k,
            "claimed": _yes(self.claimed),
            "oracle": _yes(self.oracle),
            "agree": self.agree,
            "short_circuited": self.short_circuited,
        }
        if self.graph_ref is not None:
            doc["graph_ref"] = self.graph_ref
        return doc


@dataclass(frozen=True)
class ExhaustiveMode:
    n: int
    limit: int = DEFAULT_LIMIT


@dataclass(frozen=True)
class RandomMode:
    n: int
    p: float
    trials: int
    seed: int


@dataclass
class VerificationReport:
    meta: dict
    records: list[VerificationRecord] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        return summarize(self.records)

    def to_json(self) -> dict:
        return {
            "meta": self.meta,
            "records": [r.to_json() for r in self.records],
            "summary": self.summary,
        }


def verify_graph(
    g: Graph, k: int, variant: BudgetVariant = BudgetVariant.PROSE, graph_ref: dict | None = None
) -> VerificationRecord:
    out = decide(g, k, variant)
    return VerificationRecord(g, k, out.claimed, has_clique_exact(g, k), out.short_circuited, variant, graph_ref)


def summarize(records: list[VerificationRecord]) -> dict:
    by_k: dict[str, dict] = {}
    first = None
    agreements = 0
    for i, r in enumerate(records):
        tally = by_k.setdefault(
            f"{r.graph.n},{r.k}",
            {"n": r.graph.n, "k": r.k, "total": 0, "agreements": 0, "disagreements": 0,
             "claimed_yes": 0, "oracle_yes": 0, "false_yes": 0, "false_no": 0, "short_circuited": 0},
        )
        tally["total"] += 1
        tally["claimed_yes"] += r.claimed
        tally["oracle_yes"] += r.oracle
        tally["short_circuited"] += r.short_circuited
        if r.agree:
            agreements += 1
            tally["agreements"] += 1
        else:
            tally["disagreements"] += 1
            tally["false_yes" if r.claimed else "false_no"] += 1
            if first is None:
                first = {"index": i, **r.to_json()}
    return {
        "total": len(records),
        "agreements": agreements,
        "disagreements": len(records) - agreements,
        "by_k": by_k,
        "first_disagreement": first,
    }


def hunt(mode: ExhaustiveMode | RandomMode, variant: BudgetVariant = BudgetVariant.PROSE) -> VerificationReport:
    """Run the decision rule and the oracle on a family of graphs, every K in ``2..n``.

    Exhaustive mode covers all ``2**C(n,2)`` labeled graphs on exactly ``n``
    vertices (refused when that count exceeds ``mode.limit``). Random mode
    draws ``trials`` graphs ``gen_gnp(n, p, seed + i)``.
    """
    meta = {"version": __version__, "variant": variant.value}
    if isinstance(mode, ExhaustiveMode):
        count = 1 << (mode.n * (mode.n - 1) // 2)
        if count > mode.limit:
            raise TooLargeError(f"{count} labeled graphs on {mode.n} vertices exceed limit {mode.limit}")
        meta.update(mode="exhaustive", seed=None, limits={"n": mode.n, "limit": mode.limit})
        report = VerificationReport(meta)
        for g in all_labeled_graphs(mode.n):
            report.records.extend(verify_graph(g, k, variant) for k in range(2, g.n + 1))
        return report

    if not 0.0 <= mode.p <= 1.0:
        raise InvalidProbabilityError(f"probability must lie in [0, 1], got {mode.p}")
    meta.update(mode="random", seed=mode.seed, limits={"n": mode.n, "p": mode.p, "trials": mode.trials})
    report = VerificationReport(meta)
    for i in range(mode.trials):
        seed = (mode.seed + i) % (1 << 64)
        g = gen_gnp(mode.n, mode.p, seed)
        ref = {"generator": "gnp", "n": mode.n, "p": mode.p, "seed": seed}
        report.records.extend(verify_graph(g, k, variant, ref) for k in range(2, g.n + 1))
    return report


def verify_all_k(g: Graph, variant: BudgetVariant = BudgetVariant.PROSE, ks=None) -> VerificationReport:
    ks = range(2, g.n + 1) if ks is None else ks
    report = VerificationReport({"version": __version__, "variant": variant.value, "mode": "verify",
                                 "seed": None, "limits": {"n": g.n}})
    report.records.extend(verify_graph(g, k, variant) for k in ks)
    return report


def emit_report(report: VerificationReport, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), separators=(",", ":")) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        variant = report.meta.get("variant", "")
        for i, r in enumerate(report.records):
            doc = r.to_json()
            edges = ";".join(f"{u}-{v}" for u, v in doc["edges"]) if doc["edges"] is not None else ""
            ref = json.dumps(doc["graph_ref"], sort_keys=True) if "graph_ref" in doc else ""
            writer.writerow([i, doc["n"], doc["k"], doc["claimed"], doc["oracle"],
                             str(doc["agree"]).lower(), str(doc["short_circuited"]).lower(), variant, edges, ref])
        return buf.getvalue()
    raise ValueError(f"unknown report format {fmt!r}")
