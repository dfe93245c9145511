"""Unsupervised scorers used as baselines and as pseudo-label sources.

`textrank_score` runs PageRank over a word co-occurrence graph of nominal
words; `yake_lite_score` is a position-plus-frequency statistical scorer
(lower raw score = more important). Both return rankings ordered best
first with the shared tie-breaks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .candidates import Candidate
from .corpus_io import Document
from .mderank import RankedKeyphrases, ScoredCandidate, _rank_entries


@dataclass(frozen=True)
class PseudoLabelConfig:
    method: str = "yake_lite"  # textrank | yake_lite
    top_n: int = 10
    window: int = 2  # co-occurrence window for textrank
    damping: float = 0.85
    max_iter: int = 100
    tol: float = 1e-6

    def __post_init__(self) -> None:
        if self.method not in ("textrank", "yake_lite"):
            raise ValueError(f"unknown pseudo-label method {self.method!r}")
        if self.top_n < 1:
            raise ValueError("top_n must be >= 1")
        if not (0.0 < self.damping < 1.0):
            raise ValueError("damping must be in (0, 1)")


def pagerank(
    adjacency: dict[str, set[str]],
    damping: float = 0.85,
    max_iter: int = 100,
    tol: float = 1e-6,
) -> dict[str, float]:
    """PageRank with uniform teleport on an undirected graph.

    Isolated nodes keep only their teleport mass; the result is normalized
    to sum to 1. Deterministic regardless of dict insertion order.
    """
    nodes = sorted(adjacency)
    if not nodes:
        return {}
    n = len(nodes)
    scores = {v: 1.0 / n for v in nodes}
    degree = {v: len(adjacency[v]) for v in nodes}
    base = (1.0 - damping) / n
    for _ in range(max_iter):
        nxt = {}
        for v in nodes:
            rank = base
            for u in adjacency[v]:
                rank += damping * scores[u] / degree[u]
            nxt[v] = rank
        change = sum(abs(nxt[v] - scores[v]) for v in nodes)
        scores = nxt
        if change < tol:
            break
    total = sum(scores.values())
    return {v: s / total for v, s in scores.items()}


def _nominal_positions(doc: Document) -> list[tuple[int, str]]:
    return [
        (i, w.surface.lower())
        for i, w in enumerate(doc.words)
        if w.pos_tag.startswith("NN") or w.pos_tag == "JJ"
    ]


def build_cooccurrence_graph(doc: Document, window: int) -> dict[str, set[str]]:
    """Undirected edges between nominal words within `window` positions.

    Distance is measured on original word indices, so a window of 2 links
    adjacent words only.
    """
    positions = _nominal_positions(doc)
    adjacency: dict[str, set[str]] = {w: set() for _, w in positions}
    for a in range(len(positions)):
        i, wa = positions[a]
        for b in range(a + 1, len(positions)):
            j, wb = positions[b]
            if j - i >= window:
                break
            if wa != wb:
                adjacency[wa].add(wb)
                adjacency[wb].add(wa)
    return adjacency


def textrank_score(
    doc: Document, cands: Sequence[Candidate], cfg: PseudoLabelConfig
) -> RankedKeyphrases:
    """PageRank word scores summed per candidate phrase, best first."""
    adjacency = build_cooccurrence_graph(doc, cfg.window)
    if not adjacency:
        return RankedKeyphrases(entries=[])
    word_scores = pagerank(adjacency, cfg.damping, cfg.max_iter, cfg.tol)
    entries = [
        ScoredCandidate(c, sum(word_scores.get(w, 0.0) for w in c.phrase_words))
        for c in cands
    ]
    return RankedKeyphrases(entries=_rank_entries(entries, descending=True))


def yake_lite_word_scores(doc: Document) -> dict[str, float]:
    """s(w) = rel_pos_first(w) / (1 + ln(1 + tf(w))); lower is better."""
    n = len(doc.words)
    first: dict[str, int] = {}
    tf: dict[str, int] = {}
    for i, w in enumerate(doc.words):
        lw = w.surface.lower()
        first.setdefault(lw, i)
        tf[lw] = tf.get(lw, 0) + 1
    return {w: (first[w] / n) / (1.0 + math.log(1 + tf[w])) for w in first}


def yake_lite_score(
    doc: Document, cands: Sequence[Candidate], cfg: PseudoLabelConfig
) -> RankedKeyphrases:
    """Mean word score per candidate; ranking ascends by raw score so the
    list still reads best first."""
    del cfg
    scores = yake_lite_word_scores(doc)
    entries = [
        ScoredCandidate(
            c, sum(scores[w] for w in c.phrase_words) / len(c.phrase_words)
        )
        for c in cands
    ]
    return RankedKeyphrases(entries=_rank_entries(entries, descending=False))


def pseudo_label(
    doc: Document, cands: Sequence[Candidate], cfg: PseudoLabelConfig
) -> list[str]:
    """Top-n pseudo-keyphrases (lowercased) from the configured scorer."""
    scorer = textrank_score if cfg.method == "textrank" else yake_lite_score
    ranked = scorer(doc, cands, cfg)
    return [e.candidate.phrase for e in ranked.entries[: cfg.top_n]]
