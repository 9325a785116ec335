"""Timing harness: first-run cost vs steady-state mean over repeated runs."""

from __future__ import annotations

import hashlib
import json
import math
import platform
import time
from dataclasses import dataclass, field

from . import centrality, community, traversal
from .graph_core import GraphDomainError

ALGORITHMS = ("pagerank", "betweenness", "label_propagation", "bfs", "prim_mst")


@dataclass
class BenchSpec:
    algorithm: str
    repetitions: int = 100
    seed: int = 0
    max_depth: int | None = None  # bfs only
    start: int = 0  # bfs / prim_mst start node

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise GraphDomainError(
                f"unknown algorithm {self.algorithm!r}, expected one of {ALGORITHMS}"
            )
        if self.repetitions < 2:
            raise GraphDomainError("repetitions must be >= 2 (first run plus at least one)")


@dataclass
class BenchReport:
    algorithm: str
    first_run_seconds: float
    subsequent_mean_seconds: float
    subsequent_std_seconds: float
    min_seconds: float
    max_seconds: float
    repetitions: int
    checksum: str
    environment: str = field(default_factory=lambda: platform.platform())

    def to_json_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "first_run_seconds": self.first_run_seconds,
            "subsequent_mean_seconds": self.subsequent_mean_seconds,
            "subsequent_std_seconds": self.subsequent_std_seconds,
            "min_seconds": self.min_seconds,
            "max_seconds": self.max_seconds,
            "repetitions": self.repetitions,
            "checksum": self.checksum,
            "environment": self.environment,
        }


def result_checksum(value) -> str:
    """Stable digest of an algorithm result so timed calls cannot be elided."""
    payload = json.dumps(value, sort_keys=True, default=_canonical)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _canonical(obj):
    if isinstance(obj, float):
        return round(obj, 12)
    raise TypeError(f"not canonicalizable: {type(obj)}")


def _make_call(g, spec: BenchSpec):
    if spec.algorithm == "pagerank":
        cfg = centrality.PageRankConfig()
        return lambda: [round(x, 12) for x in centrality.pagerank(g, cfg).scores]
    if spec.algorithm == "betweenness":
        return lambda: [round(x, 12) for x in centrality.betweenness(g).scores]
    if spec.algorithm == "label_propagation":
        cfg = community.LpConfig(seed=spec.seed)
        return lambda: community.label_propagation(g, cfg).labels
    if spec.algorithm == "bfs":
        term = traversal.BfsTermination(max_depth=spec.max_depth)
        return lambda: traversal.bfs(g, spec.start, term).order
    if spec.algorithm == "prim_mst":
        return lambda: round(traversal.prim_mst(g, spec.start).total_weight, 9)
    raise GraphDomainError(f"unknown algorithm {spec.algorithm!r}")


def run_bench(g, spec: BenchSpec) -> tuple[BenchReport, list[float]]:
    """Time `repetitions` invocations; returns the report and the raw log.

    The graph must already be built: ingestion cost is excluded by design.
    Every result feeds the checksum so no run is dead code.
    """
    call = _make_call(g, spec)
    timings: list[float] = []
    digest = hashlib.sha256()
    for _ in range(spec.repetitions):
        t0 = time.perf_counter_ns()
        result = call()
        t1 = time.perf_counter_ns()
        timings.append((t1 - t0) / 1e9)
        digest.update(result_checksum(result).encode())
    rest = timings[1:]
    mean = sum(rest) / len(rest)
    var = sum((t - mean) ** 2 for t in rest) / len(rest)
    report = BenchReport(
        algorithm=spec.algorithm,
        first_run_seconds=timings[0],
        subsequent_mean_seconds=mean,
        subsequent_std_seconds=math.sqrt(var),
        min_seconds=min(rest),
        max_seconds=max(rest),
        repetitions=spec.repetitions,
        checksum=digest.hexdigest()[:16],
    )
    return report, timings


def write_raw_log(timings: list[float], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for i, t in enumerate(timings):
            fh.write(f"{i},{t:.9f}\n")


def read_raw_log(path) -> list[float]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            _i, t = line.strip().split(",")
            out.append(float(t))
    return out


def summarize(reports: list[BenchReport]) -> list[dict]:
    """Comparison rows sorted by algorithm name."""
    if not reports:
        raise GraphDomainError("summarize needs at least one report")
    rows = [r.to_json_dict() for r in sorted(reports, key=lambda r: r.algorithm)]
    return rows


def summary_table(rows: list[dict]) -> str:
    cols = ["algorithm", "first_run_seconds", "subsequent_mean_seconds", "subsequent_std_seconds", "repetitions"]
    widths = [max(len(c), *(len(_fmt(r[c])) for r in rows)) for c in cols]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    for r in rows:
        lines.append("  ".join(_fmt(r[c]).ljust(w) for c, w in zip(cols, widths)))
    return "\n".join(lines)


def _fmt(v) -> str:
    return f"{v:.6f}" if isinstance(v, float) else str(v)
