"""graphbench: graph analytics, benchmarking, and link prediction over edge lists."""

from .bench import BenchReport, BenchSpec, run_bench, summarize
from .centrality import PageRankConfig, ScoreMap, betweenness, pagerank, top_k
from .community import CommunityAssignment, LpConfig, label_propagation, louvain, modularity
from .forest import ForestConfig, ForestModel, predict, train_forest
from .graph_core import (
    Graph,
    GraphDomainError,
    GraphView,
    IngestionError,
    from_edge_list,
    load_edge_csv,
)
from .linkpred import (
    EvalReport,
    LabeledPairSet,
    SplitConfig,
    auc_score,
    evaluate,
    run_pipeline,
    sample_negatives,
    split_edges,
)
from .structure_metrics import (
    FEATURE_NAMES,
    PairMetricRow,
    common_neighbors,
    local_clustering,
    pair_features,
    preferential_attachment,
    triangles_per_node,
)
from .traversal import BfsResult, BfsTermination, SpanningTree, bfs, prim_mst

__all__ = [
    "BenchReport",
    "BenchSpec",
    "BfsResult",
    "BfsTermination",
    "CommunityAssignment",
    "EvalReport",
    "FEATURE_NAMES",
    "ForestConfig",
    "ForestModel",
    "Graph",
    "GraphDomainError",
    "GraphView",
    "IngestionError",
    "LabeledPairSet",
    "LpConfig",
    "PageRankConfig",
    "PairMetricRow",
    "ScoreMap",
    "SpanningTree",
    "SplitConfig",
    "auc_score",
    "betweenness",
    "bfs",
    "common_neighbors",
    "evaluate",
    "from_edge_list",
    "label_propagation",
    "load_edge_csv",
    "local_clustering",
    "louvain",
    "modularity",
    "pagerank",
    "pair_features",
    "predict",
    "preferential_attachment",
    "prim_mst",
    "run_bench",
    "run_pipeline",
    "sample_negatives",
    "split_edges",
    "summarize",
    "top_k",
    "train_forest",
    "triangles_per_node",
]
