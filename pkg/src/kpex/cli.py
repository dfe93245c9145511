"""Command-line interface.

Commands: extract, benchmark, pseudo-label, triplets, eval. Option values
resolve as command-line flag, then optional TOML config file, then
built-in default. Exit codes: 0 success, 2 configuration/usage error,
1 runtime error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Callable, Sequence

try:
    import tomllib  # Python >= 3.11
except ModuleNotFoundError:  # pragma: no cover
    import tomli as tomllib

from .corpus_io import CorpusError, DatasetSplit, load_jsonl
from .embedder import EmbedderConfig, EmbedderError, get_backend
from .evalbench import (
    EvalError,
    combine_reports,
    evaluate_predictions,
    format_report_table,
    ranked_phrases_for_document,
    report_to_csv,
    report_to_json,
    run_benchmark,
    EvalReport,
)
from .kpebert_data import build_triplet_corpus, write_triplets
from .mderank import MaskStrategy, SimilarityMeasure
from .pseudo_labelers import PseudoLabelConfig, pseudo_label
from .candidates import extract_candidates

MODEL_CACHE_ENV = "KPEX_MODEL_CACHE"

_DEFAULTS: dict[str, Any] = {
    "backend": "test_bow",
    "model_path": None,
    "layer": 12,
    "pooling": "max",
    "max_pieces": 512,
    "method": "mderank",
    "strategy": "mask_all",
    "similarity": "cosine",
    "top_k": 10,
    "max_words": None,
    "k": "5,10,15",
    "theta": "yake_lite",
    "top_n": None,
    "window": 2,
    "sampling": "absolute",
    "seed": 0,
    "per_doc": 4,
    "jobs": 1,
    "output": None,
    "format": "json",
    "name": None,
    "mask_word_level": False,
}


class ConfigError(ValueError):
    """Bad flags, config file or input paths."""


def _load_config_file(path: str | None, command: str) -> dict[str, Any]:
    if path is None:
        return {}
    p = Path(path)
    if not p.exists():
        raise ConfigError(f"config file not found: {p}")
    with p.open("rb") as f:
        data = tomllib.load(f)
    merged: dict[str, Any] = {}
    for key, value in data.items():
        if isinstance(value, dict):
            if key == command:
                merged.update(value)
        else:
            merged[key] = value
    return merged


def _resolve(args: argparse.Namespace, command: str) -> dict[str, Any]:
    file_cfg = _load_config_file(getattr(args, "config", None), command)
    resolved = {}
    for key, default in _DEFAULTS.items():
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            resolved[key] = flag_value
        elif key in file_cfg:
            resolved[key] = file_cfg[key]
        else:
            resolved[key] = default
    return resolved


def _resolve_model_path(path: str | None) -> str | None:
    if path is None:
        return None
    if Path(path).exists():
        return path
    cache = os.environ.get(MODEL_CACHE_ENV)
    if cache and (Path(cache) / path).exists():
        return str(Path(cache) / path)
    raise ConfigError(f"model path not found: {path}")


def _embedder_config(opts: dict[str, Any]) -> EmbedderConfig:
    try:
        return EmbedderConfig(
            backend=opts["backend"],
            model_path=_resolve_model_path(opts["model_path"]),
            layer=int(opts["layer"]),
            pooling=opts["pooling"],
            max_pieces=int(opts["max_pieces"]),
            mask_word_level=bool(opts["mask_word_level"]),
        )
    except EmbedderError as e:
        raise ConfigError(str(e)) from e


def _positive_int(opts: dict[str, Any], key: str) -> int | None:
    value = opts[key]
    if value is None:
        return None
    value = int(value)
    if value < 1:
        raise ConfigError(f"--{key.replace('_', '-')} must be >= 1, got {value}")
    return value


def _parse_k_list(value: Any) -> list[int]:
    if isinstance(value, (list, tuple)):
        ks = [int(v) for v in value]
    else:
        ks = [int(v) for v in str(value).split(",") if v.strip()]
    if not ks or any(k < 1 for k in ks):
        raise ConfigError(f"bad K list: {value!r}")
    return ks


def _load_split(path: str | None, name: str | None = None) -> DatasetSplit:
    if not path:
        raise ConfigError("an input dataset file is required")
    if not Path(path).exists():
        raise ConfigError(f"dataset file not found: {path}")
    return load_jsonl(path, name=name)


def _write_lines(lines: Sequence[str], output: str | None) -> None:
    text = "".join(line + "\n" for line in lines)
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _write_text(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _parallel_map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _cmd_extract(args: argparse.Namespace) -> int:
    opts = _resolve(args, "extract")
    cfg = _embedder_config(opts)
    split = _load_split(args.input, opts["name"])
    strategy = MaskStrategy(opts["strategy"])
    measure = SimilarityMeasure(opts["similarity"])
    top_k_n = _positive_int(opts, "top_k")
    max_words = _positive_int(opts, "max_words")
    backend = get_backend(cfg)

    def process(doc):
        if max_words is not None:
            doc = doc.truncated(max_words)
        phrases = ranked_phrases_for_document(
            doc, opts["method"], cfg, strategy, measure, backend=backend
        )
        return json.dumps(
            {"id": doc.id, "keyphrases": phrases[:top_k_n]}, ensure_ascii=False
        )

    lines = _parallel_map(process, split.documents, int(opts["jobs"]))
    _write_lines(lines, opts["output"])
    return 0


def _cmd_benchmark(args: argparse.Namespace) -> int:
    opts = _resolve(args, "benchmark")
    if not getattr(args, "dataset", None):
        raise ConfigError("benchmark requires --dataset")
    cfg = _embedder_config(opts)
    reports = []
    for dataset in args.dataset:
        split = _load_split(dataset, opts["name"] if len(args.dataset) == 1 else None)
        reports.append(
            run_benchmark(
                split,
                method=opts["method"],
                cfg=cfg,
                k_list=_parse_k_list(opts["k"]),
                max_words=_positive_int(opts, "max_words"),
                strategy=MaskStrategy(opts["strategy"]),
                measure=SimilarityMeasure(opts["similarity"]),
                plcfg=PseudoLabelConfig(
                    method=opts["method"],
                    top_n=int(opts["top_n"] or 10),
                    window=int(opts["window"]),
                )
                if opts["method"] in ("textrank", "yake_lite")
                else None,
                jobs=int(opts["jobs"]),
            )
        )
    report = reports[0] if len(reports) == 1 else combine_reports(reports)
    _write_report(report, opts)
    return 0


def _write_report(report: EvalReport, opts: dict[str, Any]) -> None:
    fmt = opts["format"]
    if fmt == "json":
        _write_text(report_to_json(report), opts["output"])
    elif fmt == "table":
        _write_text(format_report_table(report), opts["output"])
    elif fmt == "csv":
        _write_text(report_to_csv(report), opts["output"])
    else:
        raise ConfigError(f"unknown report format {fmt!r}")


def _cmd_pseudo_label(args: argparse.Namespace) -> int:
    opts = _resolve(args, "pseudo-label")
    split = _load_split(args.input, opts["name"])
    plcfg = PseudoLabelConfig(
        method=opts["theta"],
        top_n=int(opts["top_n"] or 10),
        window=int(opts["window"]),
    )

    def process(doc):
        phrases = pseudo_label(doc, extract_candidates(doc), plcfg)
        return json.dumps(
            {"doc_id": doc.id, "method": plcfg.method, "phrases": phrases},
            ensure_ascii=False,
        )

    lines = _parallel_map(process, split.documents, int(opts["jobs"]))
    _write_lines(lines, opts["output"])
    return 0


def _cmd_triplets(args: argparse.Namespace) -> int:
    opts = _resolve(args, "triplets")
    split = _load_split(args.input, opts["name"])
    examples, skips = build_triplet_corpus(
        split,
        sampling=opts["sampling"],
        theta=opts["theta"],
        n_per_doc=int(opts["per_doc"]),
        seed=int(opts["seed"]),
        top_n=None if opts["top_n"] is None else int(opts["top_n"]),
    )
    if opts["output"]:
        write_triplets(examples, opts["output"])
    else:
        from .kpebert_data import triplet_to_record

        _write_lines(
            [json.dumps(triplet_to_record(e), ensure_ascii=False) for e in examples],
            None,
        )
    for doc_id, reason in skips:
        print(f"skipped {doc_id}: {reason}", file=sys.stderr)
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    opts = _resolve(args, "eval")
    if not getattr(args, "predictions", None):
        raise ConfigError("eval requires --predictions")
    if not getattr(args, "dataset", None):
        raise ConfigError("eval requires --dataset")
    pred_path = Path(args.predictions)
    if not pred_path.exists():
        raise ConfigError(f"predictions file not found: {pred_path}")
    predictions: dict[str, list[str]] = {}
    with pred_path.open("r", encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                doc_id = str(record.get("id") or record.get("doc_id"))
                phrases = record.get("keyphrases") or record.get("phrases") or []
            except (json.JSONDecodeError, AttributeError) as e:
                raise ConfigError(f"bad predictions line {line_no}: {e}") from e
            predictions[doc_id] = [str(p) for p in phrases]
    split = _load_split(args.dataset, opts["name"])
    missing = [d.id for d in split.documents if d.id not in predictions]
    for doc_id in missing:
        print(f"warning: no prediction for document {doc_id}", file=sys.stderr)
    metrics = evaluate_predictions(predictions, split, _parse_k_list(opts["k"]))
    report = EvalReport(
        per_dataset={split.name: metrics},
        averages=dict(metrics.f1_at),
        config={"predictions": str(pred_path.name), "k_list": _parse_k_list(opts["k"])},
    )
    _write_report(report, opts)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpex",
        description="Keyphrase extraction by masked-document embedding ranking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", help="optional TOML config file")
        p.add_argument("--jobs", type=int, help="document-level parallelism")
        p.add_argument("--output", help="output file (default: stdout)")
        p.add_argument("--name", help="dataset split name override")

    def add_embedder(p: argparse.ArgumentParser) -> None:
        p.add_argument("--backend", choices=["test_bow", "transformer_model"])
        p.add_argument("--model-path", dest="model_path")
        p.add_argument("--layer", type=int)
        p.add_argument("--pooling", choices=["max", "avg"])
        p.add_argument("--max-pieces", dest="max_pieces", type=int)
        p.add_argument(
            "--mask-word-level",
            dest="mask_word_level",
            action="store_const",
            const=True,
            help="one mask per word instead of per word-piece",
        )

    def add_ranking(p: argparse.ArgumentParser) -> None:
        p.add_argument("--method", choices=["mderank", "embedrank", "textrank", "yake_lite"])
        p.add_argument(
            "--strategy",
            choices=[s.value for s in MaskStrategy],
        )
        p.add_argument("--similarity", choices=[m.value for m in SimilarityMeasure])
        p.add_argument("--max-words", dest="max_words", type=int)

    p_extract = sub.add_parser("extract", help="rank keyphrases per document")
    add_common(p_extract)
    add_embedder(p_extract)
    add_ranking(p_extract)
    p_extract.add_argument("--top-k", dest="top_k", type=int)
    p_extract.add_argument("input", help="dataset JSONL")
    p_extract.set_defaults(fn=_cmd_extract)

    p_bench = sub.add_parser("benchmark", help="run a gold-labelled benchmark")
    add_common(p_bench)
    add_embedder(p_bench)
    add_ranking(p_bench)
    p_bench.add_argument(
        "--dataset",
        action="append",
        help="gold-labelled dataset JSONL (repeatable; several datasets "
        "produce one combined report with the cross-dataset average row)",
    )
    p_bench.add_argument("--k", help="comma-separated K values")
    p_bench.add_argument("--theta", choices=["textrank", "yake_lite"])
    p_bench.add_argument("--top-n", dest="top_n", type=int)
    p_bench.add_argument("--window", type=int)
    p_bench.add_argument("--format", choices=["json", "table", "csv"])
    p_bench.set_defaults(fn=_cmd_benchmark)

    p_pl = sub.add_parser("pseudo-label", help="emit pseudo-keyphrases per document")
    add_common(p_pl)
    p_pl.add_argument("--theta", choices=["textrank", "yake_lite"])
    p_pl.add_argument("--top-n", dest="top_n", type=int)
    p_pl.add_argument("--window", type=int)
    p_pl.add_argument("input", help="dataset JSONL")
    p_pl.set_defaults(fn=_cmd_pseudo_label)

    p_tr = sub.add_parser("triplets", help="build a contrastive triplet corpus")
    add_common(p_tr)
    p_tr.add_argument("--sampling", choices=["absolute", "relative"])
    p_tr.add_argument("--theta", choices=["textrank", "yake_lite"])
    p_tr.add_argument("--seed", type=int)
    p_tr.add_argument("--per-doc", dest="per_doc", type=int)
    p_tr.add_argument("--top-n", dest="top_n", type=int)
    p_tr.add_argument("input", help="dataset JSONL")
    p_tr.set_defaults(fn=_cmd_triplets)

    p_eval = sub.add_parser("eval", help="score a predictions file against gold")
    add_common(p_eval)
    p_eval.add_argument("--predictions", help="JSONL with id + keyphrases")
    p_eval.add_argument("--dataset", help="gold-labelled dataset JSONL")
    p_eval.add_argument("--k", help="comma-separated K values")
    p_eval.add_argument("--format", choices=["json", "table", "csv"])
    p_eval.set_defaults(fn=_cmd_eval)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ConfigError, CorpusError) as e:
        print(f"error: {e}", file=sys.stderr)
        print(f"run `kpex {args.command} --help` for usage", file=sys.stderr)
        return 2
    except (EvalError, EmbedderError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
