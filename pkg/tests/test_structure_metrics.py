import random

import pytest

from graphbench.community import CommunityAssignment, label_propagation, louvain
from graphbench.generators import random_graph
from graphbench.graph_core import Graph, GraphDomainError, from_edge_list
from graphbench.structure_metrics import (
    FEATURE_NAMES,
    common_neighbors,
    local_clustering,
    pair_features,
    preferential_attachment,
    triangles_per_node,
    write_feature_csv,
)
from oracles import brute_clustering, brute_triangles


def triangle():
    return from_edge_list([("a", "b", 1.0), ("b", "c", 1.0), ("a", "c", 1.0)])


def k4():
    return from_edge_list(
        [(f"n{i}", f"n{j}", 1.0) for i in range(4) for j in range(i + 1, 4)]
    )


def test_common_neighbors_triangle_and_k4():
    assert common_neighbors(triangle(), 0, 1) == 1
    assert common_neighbors(k4(), 0, 1) == 2


def test_common_neighbors_oracle_and_symmetry():
    g = random_graph(30, 0.2, seed=1)
    sets = [set(g.neighbor_ids(u)) for u in g.nodes()]
    for u in range(0, 30, 3):
        for v in range(1, 30, 4):
            if u == v:
                continue
            assert common_neighbors(g, u, v) == len(sets[u] & sets[v])
            assert common_neighbors(g, u, v) == common_neighbors(g, v, u)
            assert common_neighbors(g, u, v) <= min(g.degree(u), g.degree(v))


def test_common_neighbors_same_node_rejected():
    with pytest.raises(GraphDomainError):
        common_neighbors(triangle(), 1, 1)


def test_preferential_attachment_star():
    g = from_edge_list([("c", "l1", 1.0), ("c", "l2", 1.0), ("c", "l3", 1.0)])
    assert preferential_attachment(g, 0, 1) == 3


def test_preferential_attachment_isolated_pair():
    g = Graph.from_indexed_edges(["a", "b"], [])
    assert preferential_attachment(g, 0, 1) == 0


def test_preferential_attachment_oracle():
    g = random_graph(25, 0.2, seed=2)
    for u in range(0, 25, 2):
        for v in range(1, 25, 3):
            if u != v:
                assert preferential_attachment(g, u, v) == g.degree(u) * g.degree(v)


def test_triangles_k4():
    assert triangles_per_node(k4()) == [3, 3, 3, 3]


def test_triangles_tree_all_zero():
    g = from_edge_list([("a", "b", 1.0), ("b", "c", 1.0), ("b", "d", 1.0)])
    assert triangles_per_node(g) == [0, 0, 0, 0]


@pytest.mark.parametrize("seed", range(4))
def test_triangles_match_cubic_brute_force(seed):
    g = random_graph(40, 0.15, seed=seed)
    assert triangles_per_node(g) == brute_triangles(g)


def test_triangle_sum_is_three_times_total():
    g = random_graph(40, 0.15, seed=7)
    per_node = triangles_per_node(g)
    total = sum(
        1
        for a in range(40)
        for b in range(a + 1, 40)
        for c in range(b + 1, 40)
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
    )
    assert sum(per_node) == 3 * total


def test_clustering_triangle_and_star():
    assert local_clustering(triangle()) == [1.0, 1.0, 1.0]
    g = from_edge_list([("c", "l1", 1.0), ("c", "l2", 1.0), ("c", "l3", 1.0)])
    assert local_clustering(g)[0] == 0.0


def test_clustering_matches_formula_oracle():
    g = random_graph(35, 0.2, seed=4)
    got = local_clustering(g)
    expected = brute_clustering(g)
    assert got == pytest.approx(expected, abs=1e-12)
    assert all(0.0 <= c <= 1.0 for c in got)


def singleton_assignments(g):
    comp = louvain(g, seed=0) if g.edge_count else None
    lv = comp or CommunityAssignment([0] * g.node_count, 1, g.names, "x", 0)
    lp = label_propagation(g)
    return lv, lp


def test_pair_features_triangle_hand_evaluation():
    g = triangle()
    lv, lp = singleton_assignments(g)
    row = pair_features(g, [(0, 1)], lv, lp)[0]
    assert row.common_neighbors == 1
    assert row.pref_attachment == 4
    assert row.tri_min == row.tri_max == 1
    assert row.cc_min == row.cc_max == 1.0
    assert row.same_louvain and row.same_lp


def test_pair_features_isolated_pair():
    g = Graph.from_indexed_edges(["a", "b", "c", "d"], [(2, 3, 1.0)])
    lv, lp = singleton_assignments(g)
    row = pair_features(g, [(0, 1)], lv, lp)[0]
    assert row.common_neighbors == 0
    assert row.pref_attachment == 0
    assert row.cc_min == row.cc_max == 0.0
    assert not row.same_lp  # isolated nodes keep distinct labels


def test_pair_features_compositional_oracle():
    g = random_graph(25, 0.25, seed=9)
    lv, lp = singleton_assignments(g)
    rng = random.Random(0)
    pairs = [(u, v) for u in range(25) for v in range(u + 1, 25)]
    pairs = rng.sample(pairs, 40)
    tri = triangles_per_node(g)
    cc = local_clustering(g)
    for row, (u, v) in zip(pair_features(g, pairs, lv, lp), pairs):
        assert row.common_neighbors == common_neighbors(g, u, v)
        assert row.pref_attachment == preferential_attachment(g, u, v)
        assert row.deg_min == min(g.degree(u), g.degree(v))
        assert row.deg_max == max(g.degree(u), g.degree(v))
        assert row.tri_min == min(tri[u], tri[v])
        assert row.tri_max == max(tri[u], tri[v])
        assert row.cc_min == min(cc[u], cc[v])
        assert row.cc_max == max(cc[u], cc[v])
        assert row.same_louvain == (lv[u] == lv[v])
        assert row.same_lp == (lp[u] == lp[v])
        assert row.deg_min <= row.deg_max
        assert row.tri_min <= row.tri_max
        assert row.cc_min <= row.cc_max


def test_pair_features_orientation_independent():
    g = random_graph(20, 0.3, seed=3)
    lv, lp = singleton_assignments(g)
    fwd = pair_features(g, [(2, 7)], lv, lp)[0]
    rev = pair_features(g, [(7, 2)], lv, lp)[0]
    assert fwd.feature_vector() == rev.feature_vector()


def test_feature_csv_header(tmp_path):
    g = triangle()
    lv, lp = singleton_assignments(g)
    rows = pair_features(g, [(0, 1), (1, 2)], lv, lp)
    path = tmp_path / "features.csv"
    write_feature_csv(rows, g.names, path)
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "u,v," + ",".join(FEATURE_NAMES)
    assert len(lines) == 3
