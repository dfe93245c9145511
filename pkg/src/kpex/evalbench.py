"""Benchmark evaluation: stemmed deduplicated F1@K, prediction diversity,
recall bucketed by phrase length, and a split-level runner with word-count
truncation.

Phrase matching lowercases, Porter-stems each word and compares the
space-joined result exactly. Per-document metrics are macro-averaged;
report values are on the 0-100 percent scale.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .candidates import extract_candidates
from .corpus_io import DatasetSplit, Document
from .embedder import EmbedderConfig, EncoderBackend, get_backend
from .mderank import (
    MaskStrategy,
    RankedKeyphrases,
    SimilarityMeasure,
    rank_document,
    top_k,
)
from .porter import stem_phrase
from .pseudo_labelers import PseudoLabelConfig, textrank_score, yake_lite_score

PL_BUCKETS = ("1", "2", "3", ">3")
RECALL_PL_CUTOFF = 15
DIVERSITY_CUTOFF = 15

RANKING_METHODS = ("mderank", "embedrank", "textrank", "yake_lite")


class EvalError(ValueError):
    """Evaluation protocol misuse."""


def dedup_stemmed(phrases: Sequence[str]) -> list[str]:
    """Normalized (lowercased, stemmed) phrases, first occurrence kept."""
    seen: set[str] = set()
    out: list[str] = []
    for p in phrases:
        norm = stem_phrase(p)
        if norm and norm not in seen:
            seen.add(norm)
            out.append(norm)
    return out


def dedup_keep_raw(phrases: Sequence[str]) -> list[str]:
    """Deduplicate by normalized form but keep the raw first representative."""
    seen: set[str] = set()
    out: list[str] = []
    for p in phrases:
        norm = stem_phrase(p)
        if norm and norm not in seen:
            seen.add(norm)
            out.append(p)
    return out


def f1_at_k(predicted: Sequence[str], gold: Sequence[str], k: int) -> dict[str, float]:
    """Precision/recall/F1 of the deduplicated top-k against stemmed gold."""
    if k < 1:
        raise EvalError("k must be >= 1")
    if not gold:
        raise EvalError("gold keyphrases must be non-empty")
    cut = dedup_stemmed(predicted)[:k]
    gold_set = set(dedup_stemmed(gold))
    if not gold_set:
        raise EvalError("gold keyphrases normalize to nothing")
    matches = sum(1 for p in cut if p in gold_set)
    precision = matches / len(cut) if cut else 0.0
    recall = matches / len(gold_set)
    f1 = (
        2 * precision * recall / (precision + recall)
        if precision + recall > 0
        else 0.0
    )
    return {"precision": precision, "recall": recall, "f1": f1}


def diversity(predicted: Sequence[str]) -> float | None:
    """100 x distinct stemmed words / total words across predicted phrases."""
    words = [w for p in predicted for w in p.lower().split()]
    if not words:
        return None
    distinct = {stem_phrase(w) for w in words}
    return 100.0 * len(distinct) / len(words)


def recall_by_phrase_length(
    predicted: Sequence[str], gold: Sequence[str]
) -> dict[str, float]:
    """Per-bucket recall of gold phrases grouped by word count {1,2,3,>3}.

    Buckets with no gold phrase are absent from the result.
    """
    if not gold:
        raise EvalError("gold keyphrases must be non-empty")
    pred_set = set(dedup_stemmed(predicted))
    hits: dict[str, int] = {}
    totals: dict[str, int] = {}
    for g in dedup_stemmed(gold):
        length = len(g.split())
        bucket = str(length) if length <= 3 else ">3"
        totals[bucket] = totals.get(bucket, 0) + 1
        if g in pred_set:
            hits[bucket] = hits.get(bucket, 0) + 1
    return {b: hits.get(b, 0) / totals[b] for b in PL_BUCKETS if b in totals}


@dataclass
class DatasetMetrics:
    n_documents: int
    f1_at: dict[int, float]
    precision_at: dict[int, float]
    recall_at: dict[int, float]
    diversity: float | None
    recall_by_pl: dict[str, float]
    errors: list[tuple[str, str]] = field(default_factory=list)


@dataclass
class EvalReport:
    per_dataset: dict[str, DatasetMetrics]
    averages: dict[int, float]
    config: dict

    def validate(self) -> None:
        for metrics in self.per_dataset.values():
            values = (
                list(metrics.f1_at.values())
                + list(metrics.precision_at.values())
                + list(metrics.recall_at.values())
                + list(metrics.recall_by_pl.values())
                + ([metrics.diversity] if metrics.diversity is not None else [])
            )
            for v in values:
                if not (0.0 <= v <= 100.0):
                    raise EvalError(f"metric out of percent range: {v}")


def ranked_phrases_for_document(
    doc: Document,
    method: str,
    cfg: EmbedderConfig,
    strategy: MaskStrategy = MaskStrategy.MASK_ALL,
    measure: SimilarityMeasure = SimilarityMeasure.COSINE,
    plcfg: PseudoLabelConfig | None = None,
    backend: EncoderBackend | None = None,
) -> list[str]:
    """Full deduplicated ranked phrase list for one document."""
    if method in ("mderank", "embedrank"):
        ranked = rank_document(doc, cfg, method, strategy, measure, backend)
    elif method in ("textrank", "yake_lite"):
        plcfg = plcfg or PseudoLabelConfig(method=method)
        cands = extract_candidates(doc)
        scorer = textrank_score if method == "textrank" else yake_lite_score
        ranked = scorer(doc, cands, plcfg)
    else:
        raise EvalError(f"unknown ranking method {method!r}")
    if not ranked.entries:
        return []
    return top_k(ranked, len(ranked.entries))


def evaluate_predictions(
    predictions: dict[str, Sequence[str]],
    split: DatasetSplit,
    k_list: Sequence[int] = (5, 10, 15),
    errors: list[tuple[str, str]] | None = None,
) -> DatasetMetrics:
    """Aggregate per-document metrics over a gold-labelled split."""
    split.require_gold()
    f1_sums = {k: 0.0 for k in k_list}
    p_sums = {k: 0.0 for k in k_list}
    r_sums = {k: 0.0 for k in k_list}
    diversity_values: list[float] = []
    pl_sums: dict[str, float] = {}
    pl_counts: dict[str, int] = {}
    n = 0
    for doc in split.documents:
        if doc.id not in predictions:
            continue
        preds = list(predictions[doc.id])
        gold = list(doc.gold_keyphrases or ())
        n += 1
        for k in k_list:
            scores = f1_at_k(preds, gold, k)
            f1_sums[k] += scores["f1"]
            p_sums[k] += scores["precision"]
            r_sums[k] += scores["recall"]
        deduped_raw = dedup_keep_raw(preds)
        div = diversity(deduped_raw[:DIVERSITY_CUTOFF])
        if div is not None:
            diversity_values.append(div)
        for bucket, rec in recall_by_phrase_length(
            deduped_raw[:RECALL_PL_CUTOFF], gold
        ).items():
            pl_sums[bucket] = pl_sums.get(bucket, 0.0) + rec
            pl_counts[bucket] = pl_counts.get(bucket, 0) + 1
    if n == 0:
        raise EvalError("no predictions matched the split's documents")
    return DatasetMetrics(
        n_documents=n,
        f1_at={k: 100.0 * f1_sums[k] / n for k in k_list},
        precision_at={k: 100.0 * p_sums[k] / n for k in k_list},
        recall_at={k: 100.0 * r_sums[k] / n for k in k_list},
        diversity=(
            sum(diversity_values) / len(diversity_values) if diversity_values else None
        ),
        recall_by_pl={
            b: 100.0 * pl_sums[b] / pl_counts[b] for b in PL_BUCKETS if b in pl_counts
        },
        errors=errors or [],
    )


def run_benchmark(
    split: DatasetSplit,
    method: str,
    cfg: EmbedderConfig,
    k_list: Sequence[int] = (5, 10, 15),
    max_words: int | None = None,
    strategy: MaskStrategy = MaskStrategy.MASK_ALL,
    measure: SimilarityMeasure = SimilarityMeasure.COSINE,
    plcfg: PseudoLabelConfig | None = None,
    jobs: int = 1,
) -> EvalReport:
    """Truncate, rank and score every document of a split.

    Per-document failures are recorded in the report instead of aborting.
    """
    split.require_gold()
    backend = get_backend(cfg) if method in ("mderank", "embedrank") else None

    def process(doc: Document) -> list[str]:
        if max_words is not None:
            doc = doc.truncated(max_words)
        return ranked_phrases_for_document(
            doc, method, cfg, strategy, measure, plcfg, backend
        )

    predictions: dict[str, Sequence[str]] = {}
    errors: list[tuple[str, str]] = []
    docs = split.documents
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda d: _safe(process, d), docs))
    else:
        results = [_safe(process, d) for d in docs]
    for doc, (phrases, err) in zip(docs, results):
        if err is not None:
            errors.append((doc.id, err))
        else:
            predictions[doc.id] = phrases

    metrics = evaluate_predictions(predictions, split, k_list, errors)
    report = EvalReport(
        per_dataset={split.name: metrics},
        averages=dict(metrics.f1_at),
        config={
            "method": method,
            "strategy": str(MaskStrategy(strategy).value),
            "measure": str(SimilarityMeasure(measure).value),
            "max_words": max_words,
            "k_list": list(k_list),
            "backend": cfg.backend,
            "layer": cfg.layer,
            "pooling": cfg.pooling,
            "max_pieces": cfg.max_pieces,
        },
    )
    report.validate()
    return report


def _safe(fn: Callable[[Document], list[str]], doc: Document) -> tuple[list[str], str | None]:
    try:
        return fn(doc), None
    except Exception as e:  # noqa: BLE001 - per-document fault isolation
        return [], f"{type(e).__name__}: {e}"


def combine_reports(reports: Sequence[EvalReport]) -> EvalReport:
    """Merge single-split reports; averages are the mean F1@K across splits."""
    per_dataset: dict[str, DatasetMetrics] = {}
    for r in reports:
        per_dataset.update(r.per_dataset)
    k_sets = [set(m.f1_at) for m in per_dataset.values()]
    shared = sorted(set.intersection(*k_sets)) if k_sets else []
    averages = {
        k: sum(m.f1_at[k] for m in per_dataset.values()) / len(per_dataset)
        for k in shared
    }
    return EvalReport(
        per_dataset=per_dataset,
        averages=averages,
        config=reports[0].config if reports else {},
    )


def report_to_dict(report: EvalReport) -> dict:
    return {
        "per_dataset": {
            name: {
                "n_documents": m.n_documents,
                "f1_at": {str(k): v for k, v in m.f1_at.items()},
                "precision_at": {str(k): v for k, v in m.precision_at.items()},
                "recall_at": {str(k): v for k, v in m.recall_at.items()},
                "diversity": m.diversity,
                "recall_by_pl": m.recall_by_pl,
                "errors": [list(e) for e in m.errors],
            }
            for name, m in report.per_dataset.items()
        },
        "averages": {str(k): v for k, v in report.averages.items()},
        "config": report.config,
    }


def report_to_json(report: EvalReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, sort_keys=True)


def format_report_table(report: EvalReport) -> str:
    """Aligned text table: one row per dataset and K, plus the average row."""
    k_values = sorted({k for m in report.per_dataset.values() for k in m.f1_at})
    headers = ["Dataset", "Docs"] + [f"F1@{k}" for k in k_values] + ["Diversity"]
    rows = []
    for name, m in sorted(report.per_dataset.items()):
        rows.append(
            [name, str(m.n_documents)]
            + [f"{m.f1_at.get(k, float('nan')):.2f}" for k in k_values]
            + [f"{m.diversity:.2f}" if m.diversity is not None else "-"]
        )
    if report.averages:
        rows.append(
            ["AVG", ""]
            + [f"{report.averages.get(k, float('nan')):.2f}" for k in k_values]
            + [""]
        )
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(headers)]
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)),
        "  ".join("-" * w for w in widths),
    ]
    lines += ["  ".join(r[i].ljust(widths[i]) for i in range(len(headers))) for r in rows]
    return "\n".join(lines)


def report_to_csv(report: EvalReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["dataset", "metric", "k_or_bucket", "value"])
    for name, m in sorted(report.per_dataset.items()):
        for k in sorted(m.f1_at):
            writer.writerow([name, "f1", k, f"{m.f1_at[k]:.6f}"])
            writer.writerow([name, "precision", k, f"{m.precision_at[k]:.6f}"])
            writer.writerow([name, "recall", k, f"{m.recall_at[k]:.6f}"])
        if m.diversity is not None:
            writer.writerow([name, "diversity", "", f"{m.diversity:.6f}"])
        for bucket in PL_BUCKETS:
            if bucket in m.recall_by_pl:
                writer.writerow([name, "recall_by_pl", bucket, f"{m.recall_by_pl[bucket]:.6f}"])
    return buf.getvalue()
