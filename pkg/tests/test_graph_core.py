import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphbench.generators import random_graph
from graphbench.graph_core import (
    GraphDomainError,
    GraphView,
    IngestionError,
    build_graph,
    check_invariants,
    from_edge_list,
    load_edge_csv,
)


def test_minimal_graph():
    g = from_edge_list([("a", "b", 1.0)])
    assert g.node_count == 2
    assert g.edge_count == 1
    assert g.names == ["a", "b"]


def test_duplicate_edge_last_write_wins():
    g = from_edge_list([("a", "b", 1.0), ("b", "a", 2.0)])
    assert g.edge_count == 1
    assert g.neighbors(0) == [(1, 2.0)]
    # reference set-based deduplicator agrees on the edge set
    dedup = {frozenset(("a", "b"))}
    assert {frozenset((g.names[u], g.names[v])) for u, v, _ in g.edges()} == dedup


def test_self_loop_dropped():
    g, stats = build_graph([("a", "a", 1.0)])
    assert g.node_count == 1
    assert g.edge_count == 0
    assert stats.self_loops_dropped == 1


def test_interning_first_appearance_order():
    g = from_edge_list([("z", "m", 1.0), ("m", "a", 1.0)])
    assert g.names == ["z", "m", "a"]


def test_bad_weight_carries_row_number():
    with pytest.raises(IngestionError) as exc:
        from_edge_list([("a", "b", 1.0), ("b", "c", "oops")])
    assert exc.value.row == 2


@pytest.mark.parametrize("bad", [0.0, -1.0, float("nan"), float("inf")])
def test_nonpositive_weight_rejected(bad):
    with pytest.raises(IngestionError):
        from_edge_list([("a", "b", bad)])


def test_malformed_row_rejected():
    with pytest.raises(IngestionError) as exc:
        from_edge_list([("a", "b", 1.0), ("a",)])
    assert exc.value.row == 2


def test_degree_star_and_isolated():
    g = from_edge_list([("c", "l1", 1.0), ("c", "l2", 1.0), ("c", "l3", 1.0)])
    assert g.degree(0) == 3
    gi, _ = build_graph([("x", "x", 1.0)])
    assert gi.degree(0) == 0


def test_degree_matches_edge_list_recount():
    g = random_graph(40, 0.2, seed=7)
    counts = [0] * g.node_count
    for u, v, _w in g.edges():
        counts[u] += 1
        counts[v] += 1
    assert counts == [g.degree(u) for u in g.nodes()]


def test_neighbors_sorted_and_path():
    g = from_edge_list([("a", "b", 1.0), ("b", "c", 1.0)])
    assert g.neighbor_ids(1) == [0, 2]
    for u in g.nodes():
        ids = g.neighbor_ids(u)
        assert ids == sorted(ids)


def test_invalid_id_raises():
    g = from_edge_list([("a", "b", 1.0)])
    with pytest.raises(GraphDomainError):
        g.neighbors(5)
    with pytest.raises(GraphDomainError):
        g.degree(-1)


def test_build_invariants_hold():
    for seed in range(5):
        check_invariants(random_graph(30, 0.3, seed=seed))


def test_shuffled_rows_same_structure():
    rows = [(f"n{u}", f"n{v}", float(u + v + 1)) for u, v in [(0, 1), (1, 2), (0, 3), (2, 3), (1, 4)]]
    g1 = from_edge_list(rows)
    shuffled = rows[:]
    random.Random(9).shuffle(shuffled)
    g2 = from_edge_list(shuffled)
    m1 = {g1.names[u]: {g1.names[v] for v in g1.neighbor_ids(u)} for u in g1.nodes()}
    m2 = {g2.names[u]: {g2.names[v] for v in g2.neighbor_ids(u)} for u in g2.nodes()}
    assert m1 == m2


@settings(max_examples=30, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(0, 8), st.integers(0, 8), st.floats(0.1, 5.0)),
        min_size=1,
        max_size=25,
    ),
    st.randoms(use_true_random=False),
)
def test_permutation_invariance_property(raw, rnd):
    rows = [(f"n{a}", f"n{b}", w) for a, b, w in raw]
    g1 = from_edge_list(rows)
    check_invariants(g1)
    shuffled = rows[:]
    rnd.shuffle(shuffled)
    g2 = from_edge_list(shuffled)
    m1 = {g1.names[u]: {g1.names[v] for v in g1.neighbor_ids(u)} for u in g1.nodes()}
    m2 = {g2.names[u]: {g2.names[v] for v in g2.neighbor_ids(u)} for u in g2.nodes()}
    assert m1 == m2


def test_project_identity_and_triangle():
    g = from_edge_list([("a", "b", 1.0), ("b", "c", 2.0), ("a", "c", 3.0)])
    full = g.project(set(g.nodes()))
    assert full.edge_count == g.edge_count
    assert full.names == g.names
    partial = g.project({0, 1})
    assert partial.edge_count == 1
    assert partial.names == ["a", "b"]


def test_project_matches_edge_filter_oracle():
    g = random_graph(30, 0.25, seed=3)
    mask = set(random.Random(1).sample(range(30), 14))
    view = g.project(mask)
    expected = {
        (g.names[u], g.names[v]) for u, v, _w in g.edges() if u in mask and v in mask
    }
    got = {(view.names[u], view.names[v]) for u, v, _w in view.edges()}
    assert got == expected


def test_project_unweighted_flag():
    g = from_edge_list([("a", "b", 7.0)])
    view = g.project({0, 1}, weighted=False)
    assert view.neighbors(0) == [(1, 1.0)]


def test_project_empty_mask():
    g = from_edge_list([("a", "b", 1.0)])
    view = g.project(set())
    assert view.node_count == 0
    assert view.edge_count == 0


def test_csv_round_trip(tmp_path):
    path = tmp_path / "edges.csv"
    path.write_text("Source,Target,weight\na,b,1.5\nb,c,2\n")
    g, stats = load_edge_csv(path)
    assert g.edge_count == 2
    assert stats.rows_read == 2


def test_csv_bad_header(tmp_path):
    path = tmp_path / "edges.csv"
    path.write_text("src,dst,w\na,b,1\n")
    with pytest.raises(IngestionError):
        load_edge_csv(path)


def test_got_scale_dedup_count(got_like_csv):
    g, stats = load_edge_csv(got_like_csv)
    # file was written deduplicated, so edge_count equals its row count
    with open(got_like_csv) as fh:
        rows = sum(1 for _ in fh) - 1
    assert g.edge_count == rows
    assert 700 <= g.node_count <= 800
    assert 2500 <= g.edge_count <= 3500
