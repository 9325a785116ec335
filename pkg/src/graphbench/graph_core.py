"""Immutable undirected weighted graph built from edge lists.

Node names are interned to dense integer ids in first-appearance order.
Adjacency lists are kept sorted by neighbor id so every algorithm in the
package has a deterministic iteration order.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field


class GraphDomainError(ValueError):
    """An operation was asked something undefined for its input."""


class IngestionError(ValueError):
    """A malformed edge-list row; carries the 1-based row number."""

    def __init__(self, row: int, message: str):
        super().__init__(f"row {row}: {message}")
        self.row = row


@dataclass
class BuildStats:
    """Bookkeeping from an edge-list build, reported by the ingest command."""

    rows_read: int = 0
    duplicates_resolved: int = 0
    self_loops_dropped: int = 0


class _AdjacencyOps:
    """Shared read-only operations over a sorted adjacency structure."""

    names: list[str]
    adj: list[list[tuple[int, float]]]
    edge_count: int

    @property
    def node_count(self) -> int:
        return len(self.names)

    def nodes(self) -> range:
        return range(len(self.names))

    def check_node(self, u: int) -> None:
        if not (0 <= u < len(self.names)):
            raise GraphDomainError(f"node id {u} out of range [0, {len(self.names)})")

    def degree(self, u: int) -> int:
        self.check_node(u)
        return len(self.adj[u])

    def neighbors(self, u: int) -> list[tuple[int, float]]:
        self.check_node(u)
        return self.adj[u]

    def neighbor_ids(self, u: int) -> list[int]:
        self.check_node(u)
        return [v for v, _ in self.adj[u]]

    def edges(self) -> list[tuple[int, int, float]]:
        """All edges once each, as (u, v, w) with u < v, sorted."""
        out = []
        for u, nbrs in enumerate(self.adj):
            for v, w in nbrs:
                if u < v:
                    out.append((u, v, w))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        self.check_node(u)
        self.check_node(v)
        return any(x == v for x, _ in self.adj[u])

    def name(self, u: int) -> str:
        self.check_node(u)
        return self.names[u]


@dataclass
class Graph(_AdjacencyOps):
    """Undirected weighted graph; immutable after construction."""

    names: list[str]
    adj: list[list[tuple[int, float]]]
    edge_count: int
    name_to_id: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.name_to_id:
            self.name_to_id = {n: i for i, n in enumerate(self.names)}

    @classmethod
    def from_indexed_edges(cls, names: list[str], edges: list[tuple[int, int, float]]) -> "Graph":
        """Build from already-interned ids; keeps every name even if isolated."""
        adj: list[dict[int, float]] = [dict() for _ in names]
        for u, v, w in edges:
            if u == v:
                continue
            adj[u][v] = w
            adj[v][u] = w
        sorted_adj = [sorted(d.items()) for d in adj]
        m = sum(len(a) for a in sorted_adj) // 2
        return cls(names=list(names), adj=sorted_adj, edge_count=m)

    def project(self, node_mask: set[int], weighted: bool = True) -> "GraphView":
        return GraphView(self, node_mask, weighted)


def build_graph(rows) -> tuple[Graph, BuildStats]:
    """Construct a Graph from (source, target, weight) rows.

    Duplicate (u, v) rows resolve last-write-wins on weight; self-loops are
    dropped (but still intern the node name); non-positive or non-finite
    weights are rejected with the offending row number.
    """
    names: list[str] = []
    name_to_id: dict[str, int] = {}
    adj: list[dict[int, float]] = []
    stats = BuildStats()

    def intern(name: str) -> int:
        if name not in name_to_id:
            name_to_id[name] = len(names)
            names.append(name)
            adj.append({})
        return name_to_id[name]

    for rownum, row in enumerate(rows, start=1):
        stats.rows_read += 1
        try:
            source, target, weight = row
        except (TypeError, ValueError):
            raise IngestionError(rownum, f"expected (source, target, weight), got {row!r}")
        try:
            w = float(weight)
        except (TypeError, ValueError):
            raise IngestionError(rownum, f"unparsable weight {weight!r}")
        if not math.isfinite(w) or w <= 0:
            raise IngestionError(rownum, f"weight must be a positive finite real, got {w!r}")
        u = intern(str(source))
        v = intern(str(target))
        if u == v:
            stats.self_loops_dropped += 1
            continue
        if v in adj[u]:
            stats.duplicates_resolved += 1
        adj[u][v] = w
        adj[v][u] = w

    sorted_adj = [sorted(d.items()) for d in adj]
    m = sum(len(a) for a in sorted_adj) // 2
    g = Graph(names=names, adj=sorted_adj, edge_count=m, name_to_id=name_to_id)
    return g, stats


def from_edge_list(rows) -> Graph:
    """Build a Graph from (source, target, weight) rows; see build_graph."""
    g, _ = build_graph(rows)
    return g


CSV_HEADER = ["Source", "Target", "weight"]


def load_edge_csv(path) -> tuple[Graph, BuildStats]:
    """Load the comma-delimited `Source,Target,weight` edge-list format."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise IngestionError(1, "empty file, expected header Source,Target,weight")
        if header != CSV_HEADER:
            raise IngestionError(1, f"bad header {header!r}, expected {CSV_HEADER!r}")

        def rows():
            for row in reader:
                if len(row) != 3:
                    # build_graph numbers rows from 1 after the header
                    yield tuple(row)
                else:
                    yield (row[0], row[1], row[2])

        return build_graph(rows())


def save_edge_csv(g: Graph, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for u, v, w in g.edges():
            writer.writerow([g.names[u], g.names[v], repr(w) if w != int(w) else int(w)])


class GraphView(_AdjacencyOps):
    """Induced subgraph of a base Graph, re-indexed to dense ids.

    Node order follows the base graph restricted to the mask. With
    weighted=False every surviving edge reports unit weight.
    """

    def __init__(self, base: Graph, node_mask: set[int], weighted: bool = True):
        for u in node_mask:
            base.check_node(u)
        self.base = base
        self.weighted = weighted
        self.base_ids = sorted(node_mask)
        to_view = {b: i for i, b in enumerate(self.base_ids)}
        self.names = [base.names[b] for b in self.base_ids]
        self.adj = []
        for b in self.base_ids:
            row = []
            for v, w in base.adj[b]:
                if v in to_view:
                    row.append((to_view[v], w if weighted else 1.0))
            self.adj.append(row)
        self.edge_count = sum(len(a) for a in self.adj) // 2
        self.name_to_id = {n: i for i, n in enumerate(self.names)}


def check_invariants(g) -> None:
    """Full-scan assertion of the symmetry / sortedness / count contracts."""
    seen_half = 0
    for u in g.nodes():
        nbrs = g.adj[u]
        ids = [v for v, _ in nbrs]
        assert ids == sorted(ids), f"adjacency of {u} not sorted"
        assert len(ids) == len(set(ids)), f"duplicate neighbor in adjacency of {u}"
        assert u not in ids, f"self-loop at {u}"
        for v, w in nbrs:
            assert (u, w) in [(x, y) for x, y in g.adj[v] if x == u], (
                f"asymmetric edge {u}-{v}"
            )
            seen_half += 1
    assert g.edge_count == seen_half // 2, "edge_count mismatch"
