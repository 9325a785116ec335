"""Batch command line: ingest, the four query presets, link prediction, benchmarks."""

from __future__ import annotations

import argparse
import glob
import json
import os
import sys

from . import bench as bench_mod
from . import report as report_mod
from .centrality import PageRankConfig, betweenness, pagerank, top_k
from .community import LpConfig, label_propagation, louvain
from .forest import ForestConfig
from .graph_core import GraphDomainError, IngestionError, load_edge_csv
from .linkpred import SplitConfig, run_pipeline
from .structure_metrics import FEATURE_NAMES
from .traversal import BfsTermination, bfs, prim_mst


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _err(msg: str) -> None:
    sys.stderr.write(f"error: {msg}\n")


def cmd_ingest(args) -> int:
    g, stats = load_edge_csv(args.input)
    summary = {
        "nodes": g.node_count,
        "edges": g.edge_count,
        "rows_read": stats.rows_read,
        "duplicates_resolved": stats.duplicates_resolved,
        "self_loops_dropped": stats.self_loops_dropped,
    }
    _emit(summary)
    return 0


def _centrality_answer(g, k: int) -> dict:
    pr = pagerank(g, PageRankConfig())
    bc = betweenness(g)
    return {
        "pagerank": {
            "algorithm": "pagerank",
            "config": pr.config,
            "top": [{"node": n, "score": s} for n, s in top_k(pr, k)],
        },
        "betweenness": {
            "algorithm": "betweenness",
            "top": [{"node": n, "score": s} for n, s in top_k(bc, k)],
        },
    }


def cmd_query(args) -> int:
    g, _ = load_edge_csv(args.input)
    preset = args.preset.upper()
    if preset in ("Q1", "Q2"):
        out = {"query": preset, "k": args.k, **_centrality_answer(g, args.k)}
    elif preset == "Q3":
        lp = label_propagation(g, LpConfig(seed=args.seed))
        lv = louvain(g, seed=args.seed)
        out = {
            "query": preset,
            "label_propagation": lp.to_json_dict(),
            "louvain": lv.to_json_dict(),
        }
    elif preset == "Q4":
        # notoriety preset: traverse and span from the top-PageRank node
        pr = pagerank(g, PageRankConfig())
        start_name, _score = top_k(pr, 1)[0]
        start = g.name_to_id[start_name]
        res = bfs(g, start, BfsTermination(max_depth=args.max_depth))
        tree = prim_mst(g, start)
        out = {
            "query": preset,
            "start": start_name,
            "bfs": res.to_json_dict(start_name),
            "bfs_reach": len(res.order),
            "mst": tree.to_json_dict(start_name),
            "mst_node_count": len(tree.edges) + 1,
        }
    else:
        raise GraphDomainError(f"unknown preset {args.preset!r}, expected Q1..Q4")
    _emit(out)
    return 0


def _load_predict_config(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        cfg = json.load(fh)
    models = cfg.get("models")
    if models is None:
        models = [{"name": cfg.get("model", "model"), "features": cfg.get("features", "all")}]
    for m in models:
        if m.get("features") in ("all", None):
            m["features"] = list(FEATURE_NAMES)
    cfg["models"] = models
    return cfg


def cmd_predict(args) -> int:
    g, _ = load_edge_csv(args.input)
    cfg = _load_predict_config(args.config)
    split_cfg = SplitConfig(
        train_fraction=cfg.get("train_fraction", 0.6), seed=cfg.get("split_seed", 0)
    )
    forest_cfg = ForestConfig(**cfg.get("forest", {}))
    results = []
    for m in cfg["models"]:
        results.append(
            run_pipeline(
                g,
                feature_subset=m["features"],
                split_cfg=split_cfg,
                forest_cfg=forest_cfg,
                community_seed=cfg.get("community_seed", 0),
                model_name=m["name"],
            )
        )
    reports = [r.report for r in results]
    if args.scores_out:
        stem, ext = os.path.splitext(args.scores_out)
        for r in results:
            path = args.scores_out if len(results) == 1 else f"{stem}_{r.report.model_name}{ext}"
            report_mod.write_scores_csv(r.test_pairs, r.test_scores, g.names, path)
    if args.figures:
        os.makedirs(args.figures, exist_ok=True)
        for r in results:
            name = r.report.model_name
            report_mod.render_importance_figure(
                r.report.importances, os.path.join(args.figures, f"importances_{name}.png")
            )
            labels = [lab for _u, _v, lab in r.test_pairs]
            report_mod.render_roc_figure(
                r.test_scores, labels, os.path.join(args.figures, f"roc_{name}.png")
            )
    if args.format == "table":
        sys.stdout.write(report_mod.eval_table(reports) + "\n")
    else:
        _emit({"reports": [r.to_json_dict() for r in reports]})
    return 0


def cmd_bench(args) -> int:
    g, _ = load_edge_csv(args.input)
    spec = bench_mod.BenchSpec(
        algorithm=args.algorithm,
        repetitions=args.repetitions,
        seed=args.seed,
        max_depth=args.max_depth,
    )
    rep, timings = bench_mod.run_bench(g, spec)
    os.makedirs(args.out, exist_ok=True)
    report_path = os.path.join(args.out, f"{args.algorithm}_report.json")
    log_path = os.path.join(args.out, f"{args.algorithm}_raw.csv")
    with open(report_path, "w", encoding="utf-8") as fh:
        json.dump(rep.to_json_dict(), fh, indent=2)
    bench_mod.write_raw_log(timings, log_path)
    if args.figures:
        os.makedirs(args.figures, exist_ok=True)
        report_mod.render_iteration_figure(
            timings, args.algorithm, os.path.join(args.figures, f"iterations_{args.algorithm}.png")
        )
    _emit(rep.to_json_dict())
    return 0


def cmd_bench_summary(args) -> int:
    reports = []
    for path in sorted(glob.glob(os.path.join(args.out, "*_report.json"))):
        with open(path, encoding="utf-8") as fh:
            d = json.load(fh)
        reports.append(bench_mod.BenchReport(**{k: d[k] for k in d if k != "environment"}, environment=d.get("environment", "")))
    if not reports:
        raise GraphDomainError(f"no *_report.json files under {args.out!r}")
    rows = bench_mod.summarize(reports)
    report_mod.write_summary_csv(rows, os.path.join(args.out, "summary.csv"))
    if args.figures:
        os.makedirs(args.figures, exist_ok=True)
        report_mod.render_bench_figure(rows, os.path.join(args.figures, "bench_comparison.png"))
    if args.format == "table":
        sys.stdout.write(bench_mod.summary_table(rows) + "\n")
    else:
        _emit({"rows": rows})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphbench", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="load and validate an edge-list CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--validate-only", action="store_true")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("query", help="run a Q1..Q4 preset")
    p.add_argument("--input", required=True)
    p.add_argument("--preset", required=True, help="Q1 | Q2 | Q3 | Q4")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-depth", type=int, default=5)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("predict", help="run the link-prediction pipeline")
    p.add_argument("--input", required=True)
    p.add_argument("--config", required=True, help="JSON pipeline configuration")
    p.add_argument("--scores-out", help="write per-pair score CSV here")
    p.add_argument("--figures", help="directory for ROC and importance figures")
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("bench", help="time one algorithm repeatedly")
    p.add_argument("--input", required=True)
    p.add_argument("--algorithm", required=True, help="|".join(bench_mod.ALGORITHMS))
    p.add_argument("--repetitions", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-depth", type=int, default=None)
    p.add_argument("--out", required=True, help="directory for report JSON and raw log")
    p.add_argument("--figures", help="directory for the per-iteration figure")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("bench-summary", help="aggregate bench reports into a table")
    p.add_argument("--out", required=True, help="directory holding *_report.json")
    p.add_argument("--figures", help="directory for the comparison figure")
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.set_defaults(func=cmd_bench_summary)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except IngestionError as exc:
        _err(str(exc))
        return 2
    except (GraphDomainError, OSError, ValueError, KeyError) as exc:
        _err(str(exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
