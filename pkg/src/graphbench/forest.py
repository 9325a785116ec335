"""Bagged decision-tree ensemble with Gini splits and impurity importances."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph_core import GraphDomainError


@dataclass
class ForestConfig:
    n_trees: int = 100
    max_depth: int = 8
    min_samples_split: int = 2
    features_per_split: str = "sqrt"  # sqrt | all
    seed: int = 0

    def __post_init__(self):
        if min(self.n_trees, self.max_depth, self.min_samples_split) < 1:
            raise GraphDomainError("forest hyperparameters must be positive")
        if self.features_per_split not in ("sqrt", "all"):
            raise GraphDomainError("features_per_split must be 'sqrt' or 'all'")


@dataclass
class TreeNode:
    """Axis-aligned threshold split; leaves carry the positive-class probability."""

    feature: int = -1
    threshold: float = 0.0
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None
    prob: float = 0.0

    @property
    def is_leaf(self) -> bool:
        return self.left is None


@dataclass
class ForestModel:
    trees: list[TreeNode]
    feature_names: list[str]
    importances: np.ndarray

    @property
    def n_features(self) -> int:
        return len(self.feature_names)


def _gini(pos: float, total: float) -> float:
    if total == 0:
        return 0.0
    p = pos / total
    return 2.0 * p * (1.0 - p)


def best_split(x: np.ndarray, y: np.ndarray, feature_idxs) -> tuple[int, float, float]:
    """Exhaustive threshold search over the given features.

    Returns (feature, threshold, weighted_child_impurity); feature is -1 when
    no split separates the data. Thresholds are midpoints between consecutive
    distinct values; the left child takes values <= threshold.
    """
    n = len(y)
    best = (-1, 0.0, np.inf)
    for f in feature_idxs:
        vals = x[:, f]
        order = np.argsort(vals, kind="stable")
        sv = vals[order]
        sy = y[order]
        # candidate split positions: boundaries between distinct values
        boundary = np.nonzero(sv[1:] > sv[:-1])[0]  # split after index i
        if len(boundary) == 0:
            continue
        pos_prefix = np.cumsum(sy)
        n_left = boundary + 1
        n_right = n - n_left
        pos_left = pos_prefix[boundary]
        pos_right = pos_prefix[-1] - pos_left
        p_l = pos_left / n_left
        p_r = pos_right / n_right
        cost = (n_left * 2 * p_l * (1 - p_l) + n_right * 2 * p_r * (1 - p_r)) / n
        i = int(np.argmin(cost))
        if cost[i] < best[2] - 1e-15:
            thr = (sv[boundary[i]] + sv[boundary[i] + 1]) / 2.0
            best = (int(f), float(thr), float(cost[i]))
    return best


def _grow(x, y, idx, depth, cfg, rng, importances, n_total) -> TreeNode:
    node = TreeNode(prob=float(np.mean(y[idx])))
    n = len(idx)
    if (
        depth >= cfg.max_depth
        or n < cfg.min_samples_split
        or node.prob in (0.0, 1.0)
    ):
        return node
    n_feat = x.shape[1]
    if cfg.features_per_split == "sqrt":
        k = max(1, int(np.floor(np.sqrt(n_feat))))
        feats = rng.choice(n_feat, size=k, replace=False)
    else:
        feats = np.arange(n_feat)
    f, thr, child_imp = best_split(x[idx], y[idx], sorted(feats))
    if f < 0:
        return node
    parent_imp = _gini(float(np.sum(y[idx])), n)
    # weighted impurity decrease relative to the whole training set
    importances[f] += (n / n_total) * (parent_imp - child_imp)
    mask = x[idx, f] <= thr
    node.feature = f
    node.threshold = thr
    node.left = _grow(x, y, idx[mask], depth + 1, cfg, rng, importances, n_total)
    node.right = _grow(x, y, idx[~mask], depth + 1, cfg, rng, importances, n_total)
    return node


def train_forest(features, labels, cfg: ForestConfig, feature_names=None) -> ForestModel:
    """Bagging with a per-tree seeded bootstrap and Gini-greedy trees."""
    x = np.asarray(features, dtype=float)
    y = np.asarray(labels, dtype=float)
    if x.ndim != 2 or len(x) != len(y):
        raise GraphDomainError("features must be a 2-D matrix matching labels")
    if len(y) < 2:
        raise GraphDomainError("need at least two training rows")
    if len(np.unique(y)) < 2:
        raise GraphDomainError("training labels contain a single class")
    n, n_feat = x.shape
    if feature_names is None:
        feature_names = [f"f{i}" for i in range(n_feat)]
    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.n_trees)
    trees = []
    importances = np.zeros(n_feat)
    for seq in seeds:
        rng = np.random.default_rng(seq)
        sample = rng.integers(0, n, size=n)
        tree_imp = np.zeros(n_feat)
        trees.append(_grow(x, y, sample, 0, cfg, rng, tree_imp, n))
        importances += tree_imp
    total = importances.sum()
    if total > 0:
        importances /= total
    return ForestModel(trees=trees, feature_names=list(feature_names), importances=importances)


def _tree_predict(node: TreeNode, x: np.ndarray) -> np.ndarray:
    out = np.empty(len(x))
    stack = [(node, np.arange(len(x)))]
    while stack:
        nd, idx = stack.pop()
        if nd.is_leaf:
            out[idx] = nd.prob
            continue
        mask = x[idx, nd.feature] <= nd.threshold
        stack.append((nd.left, idx[mask]))
        stack.append((nd.right, idx[~mask]))
    return out


def predict(model: ForestModel, features) -> np.ndarray:
    """Mean of per-tree leaf probabilities, in [0, 1]."""
    x = np.asarray(features, dtype=float)
    if x.ndim != 2 or x.shape[1] != model.n_features:
        raise GraphDomainError(
            f"feature arity {x.shape[1] if x.ndim == 2 else '?'} does not match "
            f"model arity {model.n_features}"
        )
    acc = np.zeros(len(x))
    for t in model.trees:
        acc += _tree_predict(t, x)
    return acc / len(model.trees)
