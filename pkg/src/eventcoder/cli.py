"""Command-line interface.

Exit codes: 0 ok, 1 configuration error, 2 backend failure, 3 partial run
(some documents failed).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import yaml

from .backends import BackendError
from .classify import calibrate, select_uncertain
from .kb import INDEX_FORMAT_VERSION, EntityIndex, Gazetteer
from .model import ScoredLabel
from .pipeline import (Coder, ConfigError, EVAL_TASKS, PipelineConfig,
                       evaluate, read_documents, run_pipeline)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_BACKEND = 2
EXIT_PARTIAL = 3



def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except BackendError as exc:
        print(f"backend failure: {exc}", file=sys.stderr)
        return EXIT_BACKEND
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eventcoder",
        description="Dictionary-free political event coding pipeline.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-index", help="build the offline entity index")
    p.add_argument("--articles", required=True, help="article-record JSONL stream")
    p.add_argument("--out", required=True, help="index directory")
    p.set_defaults(func=cmd_build_index)

    p = sub.add_parser("ingest-gazetteer", help="build the offline place index")
    p.add_argument("--rows", required=True, help="tab-separated gazetteer rows")
    p.add_argument("--out", required=True, help="index directory")
    p.set_defaults(func=cmd_ingest_gazetteer)

    p = sub.add_parser("calibrate", help="fit per-label percentile cutoffs")
    p.add_argument("--scores", required=True,
                   help="YAML map of label -> positive score list")
    p.add_argument("--percentile", type=float, default=90.0)
    p.add_argument("--min-sample", type=int, default=10)
    p.add_argument("--out", required=True, help="calibration table path")
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("code", help="run the coding pipeline")
    p.add_argument("--config", help="pipeline config YAML (defaults are builtin)")
    p.add_argument("--input", required=True, help="documents, one JSON per line")
    p.add_argument("--output", required=True, help="event records, one JSON per line")
    p.add_argument("--workers", type=int, help="override worker count")
    p.add_argument("--report", help="write the run report YAML here")
    p.add_argument("--positives", help="write stored positive scores JSONL here")
    p.add_argument("--checkpoint", help="checkpoint file for resumable runs")
    p.add_argument("--resume", action="store_true")
    p.add_argument("--sort-output", action="store_true",
                   help="sort records by doc id for byte-stable multi-worker output")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("evaluate", help="score predictions against gold records")
    p.add_argument("--task", required=True, choices=EVAL_TASKS)
    p.add_argument("--predicted", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--report", help="write the report YAML here (default stdout)")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("select-annotation-batch",
                       help="pick the least-certain documents to annotate next")
    p.add_argument("--scores", required=True,
                   help="JSONL of {doc_id, label, score}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cutoff", type=float, default=0.5)
    p.set_defaults(func=cmd_select_batch)

    return parser


def cmd_build_index(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    index, stats = EntityIndex.from_jsonl(args.articles)
    articles_path = out_dir / "articles.jsonl"
    with open(articles_path, "w", encoding="utf-8") as fh:
        for title in sorted(index.articles):
            art = index.articles[title]
            fh.write(json.dumps({
                "title": art.title, "page_kind": "article",
                "redirects": list(art.redirects), "alt_names": list(art.alt_names),
                "short_summary": art.short_summary, "categories": list(art.categories),
                "infobox": art.infobox, "intro_paragraph": art.intro_paragraph,
            }, sort_keys=True, ensure_ascii=False) + "\n")
    (out_dir / "meta.yaml").write_text(yaml.safe_dump({
        "format_version": INDEX_FORMAT_VERSION,
        "kind": "entity-index",
        "stats": stats.as_dict(),
    }), encoding="utf-8")
    print(yaml.safe_dump(stats.as_dict(), sort_keys=True).strip())
    return EXIT_OK


def cmd_ingest_gazetteer(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    gaz, stats = Gazetteer.from_path(args.rows)
    rows_path = out_dir / "places.tsv"
    rows_path.write_text(Path(args.rows).read_text(encoding="utf-8"), encoding="utf-8")
    (out_dir / "meta.yaml").write_text(yaml.safe_dump({
        "format_version": INDEX_FORMAT_VERSION,
        "kind": "gazetteer",
        "stats": stats.as_dict(),
    }), encoding="utf-8")
    print(yaml.safe_dump(stats.as_dict(), sort_keys=True).strip())
    return EXIT_OK


def cmd_calibrate(args) -> int:
    raw = yaml.safe_load(Path(args.scores).read_text(encoding="utf-8")) or {}
    samples = {str(label): [float(s) for s in scores] for label, scores in raw.items()}
    table = calibrate(samples, percentile=args.percentile, min_sample=args.min_sample)
    Path(args.out).write_text(table.to_yaml(), encoding="utf-8")
    print(f"calibrated {len(table.entries)} labels "
          f"({len(table.uncalibrated)} left uncalibrated)")
    return EXIT_OK


def cmd_code(args) -> int:
    if args.config:
        config = PipelineConfig.from_yaml(args.config)
    else:
        config = PipelineConfig()
    if args.workers:
        config.workers = args.workers
    coder = Coder(config)
    docs = read_documents(args.input)
    records, report = run_pipeline(
        docs, coder, out_path=args.output,
        checkpoint_path=args.checkpoint, resume=args.resume,
        sort_output=args.sort_output)
    if args.report:
        Path(args.report).write_text(yaml.safe_dump(report.as_dict(), sort_keys=True),
                                     encoding="utf-8")
    if args.positives:
        with open(args.positives, "w", encoding="utf-8") as fh:
            for doc_id in sorted(report.stored_positives):
                fh.write(json.dumps({"doc_id": doc_id,
                                     "positives": report.stored_positives[doc_id]},
                                    sort_keys=True) + "\n")
    print(f"coded {report.total_docs} docs -> {report.emitted_records} records "
          f"({sum(report.dropped.values())} dropped, {len(report.failed)} failed)")
    return EXIT_PARTIAL if report.failed else EXIT_OK


def cmd_evaluate(args) -> int:
    predicted = _read_jsonl(args.predicted)
    gold = _read_jsonl(args.gold)
    report = evaluate(predicted, gold, args.task)
    text = yaml.safe_dump(report.as_dict(), sort_keys=True)
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    else:
        print(text)
    return EXIT_OK


def cmd_select_batch(args) -> int:
    by_doc = {}
    for rec in _read_jsonl(args.scores):
        by_doc[str(rec["doc_id"])] = ScoredLabel(
            label=str(rec.get("label", "")), score=float(rec["score"]),
            positive=bool(rec.get("positive", False)))
    for doc_id in select_uncertain(by_doc, args.n, cutoff=args.cutoff):
        print(doc_id)
    return EXIT_OK


def _read_jsonl(path: str) -> list[dict]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                out.append(json.loads(line))
    return out


if __name__ == "__main__":
    sys.exit(main())
