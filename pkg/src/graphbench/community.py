"""Community detection: asynchronous label propagation and Louvain."""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass

from .graph_core import GraphDomainError


@dataclass
class LpConfig:
    max_iterations: int = 100
    seed: int = 0

    def __post_init__(self):
        if self.max_iterations < 1:
            raise GraphDomainError("max_iterations must be positive")


@dataclass
class CommunityAssignment:
    """Per-node community label, canonicalized to 0..community_count-1."""

    labels: list[int]
    community_count: int
    names: list[str]
    algorithm: str
    seed: int

    def __getitem__(self, u: int) -> int:
        return self.labels[u]

    def members(self) -> list[list[str]]:
        groups: dict[int, list[str]] = defaultdict(list)
        for u, lab in enumerate(self.labels):
            groups[lab].append(self.names[u])
        return [groups[c] for c in range(self.community_count)]

    def to_json_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "seed": self.seed,
            "community_count": self.community_count,
            "members": self.members(),
        }


def _canonicalize(raw: list[int], names: list[str], algorithm: str, seed: int) -> CommunityAssignment:
    """Relabel to 0..k-1 in order of first appearance by NodeId."""
    remap: dict[int, int] = {}
    labels = []
    for lab in raw:
        if lab not in remap:
            remap[lab] = len(remap)
        labels.append(remap[lab])
    return CommunityAssignment(
        labels=labels,
        community_count=len(remap),
        names=list(names),
        algorithm=algorithm,
        seed=seed,
    )


def label_propagation(g, cfg: LpConfig | None = None) -> CommunityAssignment:
    """Asynchronous label propagation with seeded sweep order.

    Each node adopts the most frequent label among its neighbors; a node
    already holding a modal label keeps it, which is what makes a full
    no-change sweep a fixed point.
    """
    cfg = cfg or LpConfig()
    rng = random.Random(cfg.seed)
    n = g.node_count
    labels = list(range(n))
    order = list(range(n))
    for _ in range(cfg.max_iterations):
        rng.shuffle(order)
        changed = False
        for u in order:
            nbrs = g.neighbors(u)
            if not nbrs:
                continue
            counts = Counter(labels[v] for v, _w in nbrs)
            best = max(counts.values())
            modal = [lab for lab, c in counts.items() if c == best]
            if labels[u] in modal:
                continue
            labels[u] = rng.choice(sorted(modal))
            changed = True
        if not changed:
            break
    return _canonicalize(labels, g.names, "label_propagation", cfg.seed)


def modularity(g, a: CommunityAssignment) -> float:
    """Weighted Newman modularity at resolution 1.0."""
    two_m = 0.0
    for u in g.nodes():
        for _v, w in g.neighbors(u):
            two_m += w
    if two_m == 0:
        raise GraphDomainError("modularity undefined on an edgeless graph")
    if len(a.labels) != g.node_count:
        raise GraphDomainError("assignment does not cover all nodes")
    internal: dict[int, float] = defaultdict(float)
    total: dict[int, float] = defaultdict(float)
    for u in g.nodes():
        cu = a.labels[u]
        for v, w in g.neighbors(u):
            total[cu] += w
            if a.labels[v] == cu:
                internal[cu] += w
    q = 0.0
    for c in total:
        q += internal[c] / two_m - (total[c] / two_m) ** 2
    return q


def louvain(g, seed: int = 0) -> CommunityAssignment:
    """Two-phase modularity maximization (local moves, then aggregation)."""
    if g.edge_count == 0:
        raise GraphDomainError("louvain requires at least one edge")
    rng = random.Random(seed)

    # working multigraph state: adjacency dicts with self-loop weights allowed
    n = g.node_count
    adj: list[dict[int, float]] = [dict(g.neighbors(u)) for u in g.nodes()]
    node_map = list(range(n))  # original node -> current super-node
    two_m = sum(sum(d.values()) for d in adj)  # self-loops counted once below
    # self-loops contribute twice to 2m; none exist at level 0

    while True:
        size = len(adj)
        labels = list(range(size))
        # k_i includes self-loop weight twice
        k = [sum(w for v, w in adj[u].items() if v != u) + 2 * adj[u].get(u, 0.0) for u in range(size)]
        sigma_tot = k[:]
        improved_any = False
        moved = True
        while moved:
            moved = False
            order = list(range(size))
            rng.shuffle(order)
            for u in order:
                cu = labels[u]
                ku = k[u]
                # weights to neighboring communities (self-loop excluded)
                w_to: dict[int, float] = defaultdict(float)
                for v, w in adj[u].items():
                    if v != u:
                        w_to[labels[v]] += w
                sigma_tot[cu] -= ku
                best_c = cu
                best_gain = w_to.get(cu, 0.0) - sigma_tot[cu] * ku / two_m
                for c in sorted(w_to):
                    if c == cu:
                        continue
                    gain = w_to[c] - sigma_tot[c] * ku / two_m
                    if gain > best_gain + 1e-12:
                        best_gain = gain
                        best_c = c
                sigma_tot[best_c] += ku
                if best_c != cu:
                    labels[u] = best_c
                    moved = True
                    improved_any = True
        if not improved_any:
            break
        # aggregation phase
        remap: dict[int, int] = {}
        for u in range(size):
            if labels[u] not in remap:
                remap[labels[u]] = len(remap)
        new_size = len(remap)
        new_adj: list[dict[int, float]] = [defaultdict(float) for _ in range(new_size)]
        for u in range(size):
            cu = remap[labels[u]]
            for v, w in adj[u].items():
                cv = remap[labels[v]]
                if u == v:
                    new_adj[cu][cu] += w  # carried self-loop, stored once
                elif cu == cv:
                    new_adj[cu][cu] += w / 2.0  # internal edge seen from both ends
                else:
                    new_adj[cu][cv] += w
        adj = [dict(d) for d in new_adj]
        node_map = [remap[labels[c]] for c in node_map]
        if new_size == size:
            break

    return _canonicalize(node_map, g.names, "louvain", seed)
