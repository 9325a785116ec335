"""Seeded random-graph generators used by tests and demos."""

from __future__ import annotations

import random

from .graph_core import Graph


def random_graph(n: int, p: float, seed: int = 0, weighted: bool = True) -> Graph:
    """Erdos-Renyi G(n, p) with weights uniform in (0.5, 1.5] when weighted."""
    rng = random.Random(seed)
    names = [f"n{i}" for i in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                w = 0.5 + rng.random() if weighted else 1.0
                edges.append((u, v, w))
    return Graph.from_indexed_edges(names, edges)


def random_connected_graph(n: int, seed: int = 0) -> Graph:
    """Random spanning tree plus extra random weighted edges; always connected.

    Weights are multiples of 1/64 so that spanning-tree totals are exact in
    floating point regardless of summation order.
    """
    rng = random.Random(seed)
    names = [f"n{i}" for i in range(n)]
    edges = {}
    weight = lambda: rng.randrange(1, 640) / 64.0
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[rng.randrange(i)], order[i]
        edges[(min(u, v), max(u, v))] = weight()
    extra = rng.randrange(n, 3 * n) if n > 1 else 0
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.setdefault((min(u, v), max(u, v)), weight())
    return Graph.from_indexed_edges(names, [(u, v, w) for (u, v), w in edges.items()])


def planted_partition(
    block_sizes: list[int], p_in: float, p_out: float, seed: int = 0
) -> tuple[Graph, list[int]]:
    """Stochastic block model; returns the graph and the planted block labels."""
    rng = random.Random(seed)
    blocks = []
    for b, size in enumerate(block_sizes):
        blocks.extend([b] * size)
    n = len(blocks)
    names = [f"n{i}" for i in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            p = p_in if blocks[u] == blocks[v] else p_out
            if rng.random() < p:
                edges.append((u, v, 1.0))
    return Graph.from_indexed_edges(names, edges), blocks
