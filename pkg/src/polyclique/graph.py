"""Simple undirected graphs with a stable edge order.

Vertices are numbered ``1..n``. Every edge is stored as ``(u, v)`` with
``u < v`` and the edge sequence keeps the order in which edges were given;
that order is the tie-break source for every ordered structure built on
top of a graph (network arcs, greedy pair lists, interdiction indices).

Seeded generators use the standard library's Mersenne Twister
(``random.Random(seed)``), whose ``random()`` and ``sample()`` streams are
reproducible across platforms and Python versions. Generated edges are
emitted in lexicographic ``(u, v)`` order.
"""

from __future__ import annotations

import io
import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence, TextIO

from .errors import (
    DuplicateEdgeError,
    EdgeCountMismatchError,
    InvalidKError,
    InvalidProbabilityError,
    MalformedLineError,
    MissingProblemLineError,
    OutOfRangeError,
    ParseError,
    SelfLoopError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``1..n``."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise SelfLoopError(u)
            for w in (u, v):
                if not 1 <= w <= self.n:
                    raise OutOfRangeError(w, self.n)
            if u > v:
                raise ValueError(f"edge ({u},{v}) is not normalized; use from_edge_list")
            if (u, v) in seen:
                raise DuplicateEdgeError(u, v)
            seen.add((u, v))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges]}

    @classmethod
    def from_json(cls, doc: dict) -> Graph:
        try:
            n = doc["n"]
            pairs = [tuple(e) for e in doc["edges"]]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"not a JSON graph document: {exc}") from exc
        if not isinstance(n, int) or any(len(p) != 2 for p in pairs):
            raise ParseError("JSON graph needs integer 'n' and [u, v] edge pairs")
        return from_edge_list(n, pairs)

    def to_dimacs(self) -> str:
        lines = [f"p edge {self.n} {self.m}"]
        lines.extend(f"e {u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from arbitrary vertex pairs, normalizing each to ``u < v``.

    Raises:
        SelfLoopError: a pair repeats the same vertex.
        OutOfRangeError: a vertex lies outside ``1..n``.
        DuplicateEdgeError: the same unordered pair appears twice.
    """
    edges = []
    for a, b in pairs:
        a, b = int(a), int(b)
        if a == b:
            raise SelfLoopError(a)
        edges.append((a, b) if a < b else (b, a))
    return Graph(n, tuple(edges))


def parse_dimacs(text: str | TextIO) -> Graph:
    """Parse a DIMACS ``clq`` document (``c`` comments, one ``p edge n m``, ``e u v`` lines)."""
    stream = io.StringIO(text) if isinstance(text, str) else text
    header = None
    pairs = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "p":
            if header is not None or len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise MalformedLineError(lineno, raw.rstrip("\n"))
            try:
                header = (int(fields[2]), int(fields[3]))
            except ValueError:
                raise MalformedLineError(lineno, raw.rstrip("\n")) from None
        elif tag == "e":
            if header is None:
                raise MissingProblemLineError(f"line {lineno}: edge before 'p edge' line")
            if len(fields) != 3:
                raise MalformedLineError(lineno, raw.rstrip("\n"))
            try:
                pairs.append((int(fields[1]), int(fields[2])))
            except ValueError:
                raise MalformedLineError(lineno, raw.rstrip("\n")) from None
        else:
            raise MalformedLineError(lineno, raw.rstrip("\n"))
    if header is None:
        raise MissingProblemLineError("no 'p edge n m' line")
    n, m = header
    if len(pairs) != m:
        raise EdgeCountMismatchError(m, len(pairs))
    return from_edge_list(n, pairs)


def degrees(g: Graph) -> list[int]:
    """Degree of every vertex; ``result[v - 1]`` belongs to vertex ``v``."""
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u - 1] += 1
        deg[v - 1] += 1
    return deg


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise InvalidProbabilityError(f"probability must lie in [0, 1], got {p}")


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p): one ``random()`` draw per pair, pairs in lexicographic order."""
    _check_probability(p)
    rng = random.Random(seed)
    edges = tuple((u, v) for u, v in combinations(range(1, n + 1), 2) if rng.random() < p)
    return Graph(n, edges)


def gen_planted_clique(n: int, k: int, p: float, seed: int) -> Graph:
    """G(n, p) with ``k`` seeded vertices forced pairwise adjacent.

    The clique members are drawn first with ``rng.sample``; the background
    draw then consumes one ``random()`` per non-clique pair.
    """
    _check_probability(p)
    rng = random.Random(seed)
    members = set(_draw_members(rng, n, k))
    edges = []
    for u, v in combinations(range(1, n + 1), 2):
        if (u in members and v in members) or rng.random() < p:
            edges.append((u, v))
    return Graph(n, tuple(edges))


def _draw_members(rng: random.Random, n: int, k: int) -> list[int]:
    if not 2 <= k <= n:
        raise InvalidKError(f"planted clique size must satisfy 2 <= k <= n, got k={k}, n={n}")
    return rng.sample(range(1, n + 1), k)


def planted_members(n: int, k: int, seed: int) -> tuple[int, ...]:
    """Sorted vertices that ``gen_planted_clique(n, k, p, seed)`` makes pairwise adjacent, for any ``p``."""
    return tuple(sorted(_draw_members(random.Random(seed), n, k)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(1, n + 1), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((v, v + 1) for v in range(1, n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def all_labeled_graphs(n: int):
    """Yield every labeled graph on ``n`` vertices.

    Graph number ``mask`` contains lexicographic pair ``i`` iff bit ``i`` of
    ``mask`` is set; graphs come out in increasing ``mask`` order.
    """
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(e for i, e in enumerate(pairs) if mask >> i & 1))
