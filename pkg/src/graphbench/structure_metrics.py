"""Per-node and pairwise structural primitives feeding the link predictor."""

from __future__ import annotations

import csv
from dataclasses import dataclass

from .community import CommunityAssignment
from .graph_core import GraphDomainError

FEATURE_NAMES = [
    "common_neighbors",
    "pref_attachment",
    "deg_min",
    "deg_max",
    "tri_min",
    "tri_max",
    "cc_min",
    "cc_max",
    "same_louvain",
    "same_lp",
]


@dataclass
class PairMetricRow:
    u: int
    v: int
    common_neighbors: int
    pref_attachment: int
    deg_min: int
    deg_max: int
    tri_min: int
    tri_max: int
    cc_min: float
    cc_max: float
    same_louvain: bool
    same_lp: bool

    def feature_vector(self) -> list[float]:
        return [float(getattr(self, f)) for f in FEATURE_NAMES]


def common_neighbors(g, u: int, v: int) -> int:
    if u == v:
        raise GraphDomainError("common_neighbors undefined for a node with itself")
    nu = set(g.neighbor_ids(u))
    return sum(1 for x in g.neighbor_ids(v) if x in nu)


def preferential_attachment(g, u: int, v: int) -> int:
    if u == v:
        raise GraphDomainError("preferential_attachment undefined for a node with itself")
    return g.degree(u) * g.degree(v)


def triangles_per_node(g) -> list[int]:
    """Triangle count per node via sorted-adjacency intersection."""
    counts = [0] * g.node_count
    neighbor_sets = [set(g.neighbor_ids(u)) for u in g.nodes()]
    for u in g.nodes():
        for v in g.neighbor_ids(u):
            if v <= u:
                continue
            # common neighbors of edge (u, v) close a triangle
            closing = neighbor_sets[u] & neighbor_sets[v]
            for w in closing:
                if w > v:  # each triangle counted once, at its smallest edge pair
                    counts[u] += 1
                    counts[v] += 1
                    counts[w] += 1
    return counts


def local_clustering(g) -> list[float]:
    """cc(u) = triangles(u) / C(deg(u), 2); zero below degree 2."""
    tri = triangles_per_node(g)
    cc = []
    for u in g.nodes():
        d = g.degree(u)
        cc.append(0.0 if d < 2 else tri[u] / (d * (d - 1) / 2))
    return cc


def pair_features(
    g,
    pairs,
    louvain_a: CommunityAssignment,
    lp_a: CommunityAssignment,
) -> list[PairMetricRow]:
    """One PairMetricRow per (u, v) pair, in the input pair order."""
    tri = triangles_per_node(g)
    cc = local_clustering(g)
    rows = []
    for u, v in pairs:
        if u == v:
            raise GraphDomainError("pair endpoints must be distinct")
        du, dv = g.degree(u), g.degree(v)
        rows.append(
            PairMetricRow(
                u=u,
                v=v,
                common_neighbors=common_neighbors(g, u, v),
                pref_attachment=du * dv,
                deg_min=min(du, dv),
                deg_max=max(du, dv),
                tri_min=min(tri[u], tri[v]),
                tri_max=max(tri[u], tri[v]),
                cc_min=min(cc[u], cc[v]),
                cc_max=max(cc[u], cc[v]),
                same_louvain=louvain_a[u] == louvain_a[v],
                same_lp=lp_a[u] == lp_a[v],
            )
        )
    return rows


def write_feature_csv(rows: list[PairMetricRow], names: list[str], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["u", "v"] + FEATURE_NAMES)
        for r in rows:
            writer.writerow([names[r.u], names[r.v]] + [getattr(r, f) for f in FEATURE_NAMES])
