"""Breadth-first search with composable termination conditions, and Prim MST."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field

from .graph_core import GraphDomainError


@dataclass
class BfsTermination:
    """Optional stop conditions; with none set, the whole component is visited."""

    targets: set[int] | None = None
    max_depth: int | None = None
    max_cost: float | None = None


@dataclass
class BfsResult:
    order: list[int]
    depth: dict[int, int]
    terminated_by: str  # exhausted | target_hit | depth_limit | cost_budget
    names: list[str] = field(default_factory=list)

    def to_json_dict(self, start_name: str) -> dict:
        return {
            "start": start_name,
            "order": [self.names[u] for u in self.order],
            "depths": [self.depth[u] for u in self.order],
            "terminated_by": self.terminated_by,
        }


def bfs(g, start: int, term: BfsTermination | None = None) -> BfsResult:
    """Queue-based traversal, neighbors enqueued in ascending id order.

    Stops when a target is dequeued, when dequeuing would exceed max_depth, or
    when the accumulated weight of tree-edge traversals exceeds max_cost.
    The cost of reaching a node is charged when it is first enqueued.
    """
    g.check_node(start)
    term = term or BfsTermination()
    depth: dict[int, int] = {start: 0}
    order: list[int] = []
    queue: deque[int] = deque([start])
    enqueued = {start}
    cost = 0.0
    terminated = "exhausted"
    while queue:
        u = queue.popleft()
        if term.max_depth is not None and depth[u] > term.max_depth:
            terminated = "depth_limit"
            break
        order.append(u)
        if term.targets is not None and u in term.targets:
            terminated = "target_hit"
            break
        stop = False
        for v, w in g.neighbors(u):
            if v in enqueued:
                continue
            if term.max_cost is not None and cost + w > term.max_cost:
                terminated = "cost_budget"
                stop = True
                break
            cost += w
            enqueued.add(v)
            depth[v] = depth[u] + 1
            queue.append(v)
        if stop:
            break
    visited_depth = {u: depth[u] for u in order}
    return BfsResult(order=order, depth=visited_depth, terminated_by=terminated, names=list(g.names))


@dataclass
class SpanningTree:
    edges: list[tuple[int, int, float]]
    total_weight: float
    names: list[str] = field(default_factory=list)

    def to_json_dict(self, start_name: str) -> dict:
        return {
            "start": start_name,
            "edges": [[self.names[u], self.names[v], w] for u, v, w in self.edges],
            "total_weight": self.total_weight,
        }


def prim_mst(g, start: int) -> SpanningTree:
    """Prim's algorithm over the start node's component.

    Heap entries are keyed (weight, smaller id, larger id) so equal-weight
    choices resolve deterministically.
    """
    g.check_node(start)
    in_tree = {start}
    edges: list[tuple[int, int, float]] = []
    total = 0.0
    heap: list[tuple[float, int, int, int, int]] = []

    def push_edges(u: int):
        for v, w in g.neighbors(u):
            if v not in in_tree:
                a, b = (u, v) if u < v else (v, u)
                heapq.heappush(heap, (w, a, b, u, v))

    push_edges(start)
    while heap:
        w, _a, _b, u, v = heapq.heappop(heap)
        if v in in_tree:
            continue
        in_tree.add(v)
        edges.append((u, v, w))
        total += w
        push_edges(v)
    return SpanningTree(edges=edges, total_weight=total, names=list(g.names))
