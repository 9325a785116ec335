"""Link-prediction pipeline: split, negative sampling, training, assessment."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from . import forest
from .community import LpConfig, label_propagation, louvain
from .forest import ForestConfig, ForestModel, train_forest
from .graph_core import Graph, GraphDomainError
from .structure_metrics import FEATURE_NAMES, pair_features


@dataclass
class SplitConfig:
    train_fraction: float = 0.6
    seed: int = 0

    def __post_init__(self):
        if not (0 < self.train_fraction < 1):
            raise GraphDomainError("train_fraction must be in (0,1)")


@dataclass
class LabeledPairSet:
    """Node pairs labeled positive (edge) / negative (non-edge), one role."""

    pairs: list[tuple[int, int, int]]  # (u, v, label) with label in {0, 1}
    role: str  # train | test

    def positives(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, lab in self.pairs if lab == 1]

    def negatives(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, lab in self.pairs if lab == 0]


def sample_negatives(g: Graph, count: int, seed: int, exclude=()) -> list[tuple[int, int]]:
    """Uniform sample without replacement of non-adjacent unordered pairs."""
    n = g.node_count
    excluded = {(min(u, v), max(u, v)) for u, v in exclude}
    total_pairs = n * (n - 1) // 2
    non_edges_available = total_pairs - g.edge_count
    non_edges_available -= sum(1 for u, v in excluded if not g.has_edge(u, v))
    if count > non_edges_available:
        raise GraphDomainError(
            f"requested {count} negatives but only {non_edges_available} non-edges remain"
        )
    rng = random.Random(seed)
    if total_pairs <= 2_000_000:
        neighbor_sets = [set(g.neighbor_ids(u)) for u in g.nodes()]
        candidates = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if v not in neighbor_sets[u] and (u, v) not in excluded
        ]
        return rng.sample(candidates, count)
    # huge graphs: rejection sampling stays uniform without replacement
    chosen: set[tuple[int, int]] = set()
    out = []
    while len(out) < count:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        pair = (min(u, v), max(u, v))
        if pair in chosen or pair in excluded or g.has_edge(*pair):
            continue
        chosen.add(pair)
        out.append(pair)
    return out


def split_edges(g: Graph, cfg: SplitConfig | None = None) -> tuple[Graph, LabeledPairSet, LabeledPairSet]:
    """Shuffle edges by seed into train/test positives and balance with negatives.

    The returned train graph keeps the full node set but only train-positive
    edges; it is the only graph features may be computed on (leakage guard).
    """
    cfg = cfg or SplitConfig()
    edges = g.edges()
    if len(edges) < 10:
        raise GraphDomainError("need at least 10 edges to split")
    rng = random.Random(cfg.seed)
    rng.shuffle(edges)
    n_train = int(round(cfg.train_fraction * len(edges)))
    n_train = min(max(n_train, 1), len(edges) - 1)
    train_pos = [(u, v) for u, v, _w in edges[:n_train]]
    test_pos = [(u, v) for u, v, _w in edges[n_train:]]
    train_graph = Graph.from_indexed_edges(g.names, edges[:n_train])

    train_neg = sample_negatives(g, len(train_pos), seed=rng.randrange(2**32))
    test_neg = sample_negatives(
        g, len(test_pos), seed=rng.randrange(2**32), exclude=train_neg
    )
    train_set = LabeledPairSet(
        pairs=[(u, v, 1) for u, v in train_pos] + [(u, v, 0) for u, v in train_neg],
        role="train",
    )
    test_set = LabeledPairSet(
        pairs=[(u, v, 1) for u, v in test_pos] + [(u, v, 0) for u, v in test_neg],
        role="test",
    )
    return train_graph, train_set, test_set


@dataclass
class EvalReport:
    accuracy: float
    precision: float
    recall: float
    auc: float
    confusion: list[list[int]]  # [[tn, fp], [fn, tp]]
    importances: dict[str, float] = field(default_factory=dict)
    model_name: str = "model"

    def to_json_dict(self) -> dict:
        return {
            "model": self.model_name,
            "accuracy": self.accuracy,
            "precision": self.precision,
            "recall": self.recall,
            "auc": self.auc,
            "confusion": self.confusion,
            "importances": self.importances,
        }


def auc_score(scores, labels) -> float:
    """Rank-statistic (Mann-Whitney) AUC; ties contribute 1/2."""
    s = np.asarray(scores, dtype=float)
    y = np.asarray(labels, dtype=float)
    n_pos = int(np.sum(y == 1))
    n_neg = int(np.sum(y == 0))
    if n_pos == 0 or n_neg == 0:
        raise GraphDomainError("AUC needs both classes present")
    order = np.argsort(s, kind="stable")
    sorted_s = s[order]
    # average ranks for tied score groups (1-based midranks)
    ranks = np.empty(len(s))
    i = 0
    while i < len(s):
        j = i
        while j + 1 < len(s) and sorted_s[j + 1] == sorted_s[i]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    rank_sum_pos = float(np.sum(ranks[y == 1]))
    return (rank_sum_pos - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)


def evaluate(scores, labels, threshold: float = 0.5, model_name: str = "model") -> EvalReport:
    s = np.asarray(scores, dtype=float)
    y = np.asarray(labels, dtype=int)
    if len(s) != len(y):
        raise GraphDomainError("scores and labels must have equal length")
    pred = (s >= threshold).astype(int)
    tp = int(np.sum((pred == 1) & (y == 1)))
    tn = int(np.sum((pred == 0) & (y == 0)))
    fp = int(np.sum((pred == 1) & (y == 0)))
    fn = int(np.sum((pred == 0) & (y == 1)))
    total = tp + tn + fp + fn
    return EvalReport(
        accuracy=(tp + tn) / total,
        precision=tp / (tp + fp) if tp + fp else 0.0,
        recall=tp / (tp + fn) if tp + fn else 0.0,
        auc=auc_score(s, y),
        confusion=[[tn, fp], [fn, tp]],
        model_name=model_name,
    )


@dataclass
class PipelineResult:
    report: EvalReport
    model: ForestModel
    test_scores: np.ndarray
    test_pairs: list[tuple[int, int, int]]


def feature_matrix(rows, subset) -> np.ndarray:
    cols = [FEATURE_NAMES.index(f) for f in subset]
    full = np.array([r.feature_vector() for r in rows], dtype=float)
    return full[:, cols]


def run_pipeline(
    g: Graph,
    feature_subset=None,
    split_cfg: SplitConfig | None = None,
    forest_cfg: ForestConfig | None = None,
    community_seed: int = 0,
    model_name: str = "model",
) -> PipelineResult:
    """Split, detect communities on the train graph, featurize, train, assess."""
    feature_subset = list(feature_subset or FEATURE_NAMES)
    unknown = [f for f in feature_subset if f not in FEATURE_NAMES]
    if unknown:
        raise GraphDomainError(f"unknown features: {unknown}")
    split_cfg = split_cfg or SplitConfig()
    forest_cfg = forest_cfg or ForestConfig()

    train_graph, train_set, test_set = split_edges(g, split_cfg)
    louvain_a = louvain(train_graph, seed=community_seed)
    lp_a = label_propagation(train_graph, LpConfig(seed=community_seed))

    def featurize(pair_set: LabeledPairSet) -> tuple[np.ndarray, np.ndarray]:
        pairs = [(u, v) for u, v, _lab in pair_set.pairs]
        rows = pair_features(train_graph, pairs, louvain_a, lp_a)
        labels = np.array([lab for _u, _v, lab in pair_set.pairs], dtype=float)
        return feature_matrix(rows, feature_subset), labels

    x_train, y_train = featurize(train_set)
    x_test, y_test = featurize(test_set)
    model = train_forest(x_train, y_train, forest_cfg, feature_names=feature_subset)
    scores = forest.predict(model, x_test)
    report = evaluate(scores, y_test, model_name=model_name)
    report.importances = {
        name: float(imp) for name, imp in zip(model.feature_names, model.importances)
    }
    return PipelineResult(
        report=report, model=model, test_scores=scores, test_pairs=test_set.pairs
    )
