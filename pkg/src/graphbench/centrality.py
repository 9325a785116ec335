"""PageRank and betweenness centrality."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph_core import GraphDomainError


@dataclass
class PageRankConfig:
    damping: float = 0.85
    max_iterations: int = 20
    tolerance: float = 0.0  # 0 means run the fixed iteration count

    def __post_init__(self):
        if not (0 < self.damping < 1):
            raise GraphDomainError(f"damping must be in (0,1), got {self.damping}")
        if self.max_iterations < 1:
            raise GraphDomainError("max_iterations must be positive")
        if self.tolerance < 0:
            raise GraphDomainError("tolerance must be non-negative")


@dataclass
class ScoreMap:
    """Per-node real-valued algorithm result, indexed by NodeId."""

    scores: list[float]
    names: list[str]
    algorithm: str
    config: dict = field(default_factory=dict)

    def __getitem__(self, u: int) -> float:
        return self.scores[u]

    def __len__(self) -> int:
        return len(self.scores)

    def to_json_dict(self) -> dict:
        ranked = top_k(self, len(self.scores))
        return {
            "algorithm": self.algorithm,
            "config": self.config,
            "scores": [{"node": n, "score": s} for n, s in ranked],
        }


def pagerank(g, cfg: PageRankConfig | None = None) -> ScoreMap:
    """Power iteration on the uniform transition structure.

    Each step: score(u) = (1-d)/N + d * sum over neighbors v of score(v)/deg(v).
    Isolated nodes redistribute their mass uniformly so the total stays 1.
    """
    cfg = cfg or PageRankConfig()
    n = g.node_count
    if n == 0:
        raise GraphDomainError("pagerank undefined on the empty graph")
    d = cfg.damping
    base = (1.0 - d) / n
    scores = [1.0 / n] * n
    degrees = [g.degree(u) for u in g.nodes()]
    isolated = [u for u in g.nodes() if degrees[u] == 0]
    for _ in range(cfg.max_iterations):
        dangling = sum(scores[u] for u in isolated) / n
        nxt = [0.0] * n
        for v in g.nodes():
            if degrees[v]:
                share = scores[v] / degrees[v]
                for u, _w in g.neighbors(v):
                    nxt[u] += share
        nxt = [base + d * (s + dangling) for s in nxt]
        delta = sum(abs(a - b) for a, b in zip(nxt, scores))
        scores = nxt
        if cfg.tolerance > 0 and delta <= cfg.tolerance:
            break
    return ScoreMap(
        scores=scores,
        names=list(g.names),
        algorithm="pagerank",
        config={"damping": d, "max_iterations": cfg.max_iterations, "tolerance": cfg.tolerance},
    )


def betweenness(g) -> ScoreMap:
    """Brandes betweenness over unweighted shortest paths.

    Undirected convention: each unordered {s,t} pair counted once, endpoints
    excluded, no normalization.
    """
    n = g.node_count
    bc = [0.0] * n
    for s in g.nodes():
        # single-source shortest path counting
        stack: list[int] = []
        pred: list[list[int]] = [[] for _ in range(n)]
        sigma = [0.0] * n
        dist = [-1] * n
        sigma[s] = 1.0
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w, _wt in g.neighbors(v):
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    pred[w].append(v)
        # dependency accumulation
        delta = [0.0] * n
        while stack:
            w = stack.pop()
            for v in pred[w]:
                delta[v] += (sigma[v] / sigma[w]) * (1.0 + delta[w])
            if w != s:
                bc[w] += delta[w]
    bc = [x / 2.0 for x in bc]
    return ScoreMap(scores=bc, names=list(g.names), algorithm="betweenness", config={})


def top_k(s: ScoreMap, k: int) -> list[tuple[str, float]]:
    """Top k (name, score) pairs, descending score, ties ascending by name."""
    if k < 1:
        raise GraphDomainError("k must be >= 1")
    ranked = sorted(zip(s.names, s.scores), key=lambda t: (-t[1], t[0]))
    return ranked[:k]
