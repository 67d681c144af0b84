"""Labeled graphs on vertices 1..n and their spanning subgraphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .partitions import Partition
from .tableaux import Tableau

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    pass


def _normalize_edge(u: int, v: int) -> Edge:
    u, v = int(u), int(v)
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple graph on ``1..n``; ``edges`` is kept sorted lexicographically."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        edges = [_normalize_edge(u, v) for u, v in self.edges]
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edge")
        for u, v in edges:
            if not 1 <= u < v <= self.n:
                raise ValueError(f"edge {u}{v} out of range for n={self.n}")
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        return cls(n, tuple(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Image under the vertex bijection ``v -> perm[v-1]`` (``perm`` on 1..n)."""
        return Graph(self.n, tuple(_normalize_edge(perm[u - 1], perm[v - 1]) for u, v in self.edges))

    def without(self, e: Edge) -> Graph:
        return Graph(self.n, tuple(x for x in self.edges if x != e))

    def to_text(self) -> str:
        lines = [f"n {self.n}"] + [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def star(n: int) -> Graph:
    """Vertex 1 joined to each of 2..n."""
    if n < 2:
        raise ValueError("star graphs need at least 2 vertices")
    return Graph(n, tuple((1, i) for i in range(2, n + 1)))


def parse_graph(text: str) -> Graph:
    """Read the ``n <count>`` / ``u v`` line format; ``#`` starts a comment."""
    n = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n" or not fields[1].isdigit():
                raise GraphFormatError(f"line {lineno}: expected 'n <count>', got {raw!r}")
            n = int(fields[1])
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = map(int, fields)
        if not 1 <= u < v <= n:
            raise GraphFormatError(f"line {lineno}: need 1 <= u < v <= {n}, got {u} {v}")
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'n <count>' header")
    if len(set(edges)) != len(edges):
        raise GraphFormatError("duplicate edge")
    return Graph(n, tuple(edges))


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def _components(n: int, edges: Iterable[Edge]) -> tuple[tuple[int, ...], ...]:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(g) for g in groups.values())


@dataclass(frozen=True)
class SpanningSubgraph:
    """An edge subset of ``parent`` on the full vertex set."""

    parent: Graph
    edge_subset: tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple(sorted(_normalize_edge(*e) for e in self.edge_subset))
        missing = set(edges) - set(self.parent.edges)
        if missing:
            raise ValueError(f"edges {sorted(missing)} are not in the parent graph")
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edge in subset")
        object.__setattr__(self, "edge_subset", edges)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components in canonical-tableau row order."""
        comps = _components(self.parent.n, self.edge_subset)
        return tuple(sorted(comps, key=lambda c: (-len(c), c[0])))

    @property
    def partition_type(self) -> Partition:
        return Partition(tuple(len(c) for c in self.components))

    @property
    def canonical_tableau(self) -> Tableau:
        return Tableau(self.components)

    def remove(self, e: Edge) -> SpanningSubgraph:
        e = _normalize_edge(*e)
        if e not in self.edge_subset:
            raise ValueError(f"edge {e} is not in the subgraph")
        return SpanningSubgraph(self.parent, tuple(x for x in self.edge_subset if x != e))

    def __len__(self) -> int:
        return len(self.edge_subset)


def spanning_subgraphs(G: Graph, i: int, edge_order: Sequence[Edge] | None = None) -> list[SpanningSubgraph]:
    """All ``i``-edge spanning subgraphs, as combinations of ``edge_order`` (default ``G.edges``)."""
    order = tuple(edge_order) if edge_order is not None else G.edges
    if not 0 <= i <= len(order):
        raise ValueError(f"i={i} outside 0..{len(order)}")
    return [SpanningSubgraph(G, combo) for combo in combinations(order, i)]


def partition_type(F: SpanningSubgraph) -> Partition:
    return F.partition_type


def canonical_tableau(F: SpanningSubgraph) -> Tableau:
    """Rows are the components, longest first, ties broken by smallest vertex."""
    return F.canonical_tableau
