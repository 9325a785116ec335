"""Figure and delimited-output rendering for the CLI report paths."""

from __future__ import annotations

import csv

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .linkpred import EvalReport


def eval_table(reports: list[EvalReport]) -> str:
    """Human-readable assessment table: model, accuracy, precision, recall, AUC."""
    header = ["model", "accuracy", "precision", "recall", "auc"]
    rows = [
        [r.model_name, f"{r.accuracy:.4f}", f"{r.precision:.4f}", f"{r.recall:.4f}", f"{r.auc:.4f}"]
        for r in reports
    ]
    widths = [max(len(header[i]), *(len(row[i]) for row in rows)) for i in range(len(header))]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
    return "\n".join(lines)


def write_scores_csv(pairs, scores, names, path) -> None:
    """Per-pair prediction log: u,v,label,score."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["u", "v", "label", "score"])
        for (u, v, lab), s in zip(pairs, scores):
            writer.writerow([names[u], names[v], lab, f"{s:.9f}"])


def write_summary_csv(rows: list[dict], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)


def render_importance_figure(importances: dict[str, float], path) -> None:
    names = list(importances)
    vals = [importances[n] for n in names]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.barh(range(len(names)), vals, color="#4878b0")
    ax.set_yticks(range(len(names)), names)
    ax.invert_yaxis()
    ax.set_xlabel("importance")
    ax.set_title("Feature importances")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_roc_figure(scores, labels, path) -> None:
    s = np.asarray(scores, dtype=float)
    y = np.asarray(labels, dtype=int)
    order = np.argsort(-s, kind="stable")
    tpr = np.concatenate([[0.0], np.cumsum(y[order] == 1) / max(1, np.sum(y == 1))])
    fpr = np.concatenate([[0.0], np.cumsum(y[order] == 0) / max(1, np.sum(y == 0))])
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.plot(fpr, tpr, color="#b04878")
    ax.plot([0, 1], [0, 1], linestyle="--", color="gray", linewidth=0.8)
    ax.set_xlabel("false positive rate")
    ax.set_ylabel("true positive rate")
    ax.set_title("ROC")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_bench_figure(rows: list[dict], path) -> None:
    """First-run vs steady-state bar chart across algorithms."""
    algos = [r["algorithm"] for r in rows]
    first = [r["first_run_seconds"] for r in rows]
    mean = [r["subsequent_mean_seconds"] for r in rows]
    x = np.arange(len(algos))
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(x - 0.2, first, width=0.4, label="first run")
    ax.bar(x + 0.2, mean, width=0.4, label="steady-state mean")
    ax.set_xticks(x, algos, rotation=20)
    ax.set_ylabel("seconds")
    ax.set_title("First-run vs steady-state timing")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_iteration_figure(timings: list[float], algorithm: str, path) -> None:
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.plot(range(len(timings)), timings, marker=".", linewidth=0.8)
    ax.set_xlabel("iteration")
    ax.set_ylabel("seconds")
    ax.set_title(f"{algorithm}: per-iteration time")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
