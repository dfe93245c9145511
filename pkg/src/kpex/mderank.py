"""Keyphrase ranking.

The document-document ranker scores each candidate by the similarity
between the original document embedding and the embedding of a variant
with that candidate's occurrences masked; a large semantic change (low
similarity) means an important phrase, so results sort ascending. The
phrase-document baseline embeds each phrase in isolation and sorts
descending by its similarity to the document.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .candidates import Candidate, extract_candidates
from .corpus_io import Document
from .embedder import (
    EmbedderConfig,
    EncoderBackend,
    embed,
    embed_batch,
    get_backend,
    max_embeddable_words,
)
from .porter import stem_phrase


class MaskStrategy(str, Enum):
    MASK_ALL = "mask_all"
    MASK_ONCE = "mask_once"
    MASK_HIGHEST = "mask_highest"
    MASK_SUBSET = "mask_subset"


class SimilarityMeasure(str, Enum):
    COSINE = "cosine"
    EUCLIDEAN = "euclidean"


@dataclass(frozen=True)
class ScoredCandidate:
    candidate: Candidate
    score: float


@dataclass
class RankedKeyphrases:
    entries: list[ScoredCandidate]
    strategy: MaskStrategy | None = None
    measure: SimilarityMeasure | None = None
    skipped: list[tuple[Candidate, str]] = field(default_factory=list)

    def phrases(self) -> list[str]:
        return [e.candidate.surface for e in self.entries]


def similarity(a: np.ndarray, b: np.ndarray, measure: SimilarityMeasure) -> float:
    """Cosine, or negated L2 distance so both measures sort the same way.

    A zero vector makes cosine undefined; that only happens when masking
    wiped out the whole document, i.e. maximal semantic change, so the
    guard returns -1.
    """
    if measure == SimilarityMeasure.EUCLIDEAN:
        return -float(np.linalg.norm(a - b))
    na, nb = float(np.linalg.norm(a)), float(np.linalg.norm(b))
    if na == 0.0 or nb == 0.0:
        return -1.0
    return float(np.dot(a, b) / (na * nb))


def build_masked(
    doc: Document,
    cand: Candidate,
    strategy: MaskStrategy,
    prior_masked: frozenset[int] | set[int] = frozenset(),
) -> list[list[bool]]:
    """Mask-flag vectors for one candidate under a strategy.

    Returns one vector for mask_all / mask_once / mask_subset and one per
    occurrence for mask_highest. Under mask_subset only positions absent
    from `prior_masked` are flagged; an empty list means the candidate has
    no maskable word left and must be skipped.
    """
    n = len(doc.words)
    for occ in cand.occurrences:
        if occ.end_word > n:
            raise ValueError(
                f"occurrence [{occ.start_word}, {occ.end_word}) of {cand.phrase!r} "
                f"outside the {n}-word document window"
            )

    def flags(positions: set[int]) -> list[bool]:
        return [i in positions for i in range(n)]

    if strategy == MaskStrategy.MASK_ALL:
        return [flags({p for occ in cand.occurrences for p in occ.positions()})]
    if strategy == MaskStrategy.MASK_ONCE:
        return [flags(set(cand.occurrences[0].positions()))]
    if strategy == MaskStrategy.MASK_HIGHEST:
        return [flags(set(occ.positions())) for occ in cand.occurrences]
    if strategy == MaskStrategy.MASK_SUBSET:
        maskable = {
            p for occ in cand.occurrences for p in occ.positions() if p not in prior_masked
        }
        return [flags(maskable)] if maskable else []
    raise ValueError(f"unknown strategy {strategy!r}")


def _rank_entries(
    scored: list[ScoredCandidate], descending: bool
) -> list[ScoredCandidate]:
    return sorted(
        scored,
        key=lambda e: (
            -e.score if descending else e.score,
            e.candidate.first_occurrence_index,
            len(e.candidate.phrase_words),
            e.candidate.phrase_words,
        ),
    )


def mde_rank(
    doc: Document,
    cands: Sequence[Candidate],
    cfg: EmbedderConfig,
    strategy: MaskStrategy = MaskStrategy.MASK_ALL,
    measure: SimilarityMeasure = SimilarityMeasure.COSINE,
    backend: EncoderBackend | None = None,
) -> RankedKeyphrases:
    """Rank candidates by masked-vs-original document similarity, ascending.

    `cands` must come from candidate extraction over this same document
    window so every occurrence is maskable. Under mask_highest a
    candidate's score is the minimum over its per-occurrence variants.
    """
    strategy = MaskStrategy(strategy)
    measure = SimilarityMeasure(measure)
    if not cands:
        return RankedKeyphrases(entries=[], strategy=strategy, measure=measure)
    backend = backend or get_backend(cfg)
    words = doc.surfaces
    original = embed(words, [False] * len(words), cfg, backend)

    order = list(cands)
    if strategy == MaskStrategy.MASK_SUBSET:
        order.sort(
            key=lambda c: (-len(c.phrase_words), c.first_occurrence_index, c.phrase_words)
        )

    variant_owner: list[int] = []
    variant_flags: list[list[bool]] = []
    skipped: list[tuple[Candidate, str]] = []
    prior_masked: set[int] = set()
    kept: list[Candidate] = []
    for cand in order:
        vectors = build_masked(doc, cand, strategy, prior_masked)
        if not vectors:
            skipped.append((cand, "all occurrence words already masked"))
            continue
        if strategy == MaskStrategy.MASK_SUBSET:
            prior_masked.update(i for i, f in enumerate(vectors[0]) if f)
        owner = len(kept)
        kept.append(cand)
        for flags in vectors:
            variant_owner.append(owner)
            variant_flags.append(flags)

    embeddings = embed_batch(words, variant_flags, cfg, backend)
    best: dict[int, float] = {}
    for owner, emb in zip(variant_owner, embeddings):
        score = similarity(original.vector, emb.vector, measure)
        if owner not in best or score < best[owner]:
            best[owner] = score
    entries = [ScoredCandidate(cand, best[i]) for i, cand in enumerate(kept)]
    return RankedKeyphrases(
        entries=_rank_entries(entries, descending=False),
        strategy=strategy,
        measure=measure,
        skipped=skipped,
    )


def embed_rank(
    doc: Document,
    cands: Sequence[Candidate],
    cfg: EmbedderConfig,
    measure: SimilarityMeasure = SimilarityMeasure.COSINE,
    backend: EncoderBackend | None = None,
) -> RankedKeyphrases:
    """Phrase-document baseline: sim(E(phrase), E(doc)), descending."""
    measure = SimilarityMeasure(measure)
    if not cands:
        return RankedKeyphrases(entries=[], strategy=None, measure=measure)
    backend = backend or get_backend(cfg)
    words = doc.surfaces
    doc_emb = embed(words, [False] * len(words), cfg, backend)
    entries = []
    for cand in cands:
        phrase_words = list(cand.phrase_words)
        phrase_emb = embed(phrase_words, [False] * len(phrase_words), cfg, backend)
        entries.append(
            ScoredCandidate(cand, similarity(phrase_emb.vector, doc_emb.vector, measure))
        )
    return RankedKeyphrases(
        entries=_rank_entries(entries, descending=True), strategy=None, measure=measure
    )


def top_k(ranked: RankedKeyphrases, k: int) -> list[str]:
    """Best k phrases after stem-level deduplication (best rank kept)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    seen: set[str] = set()
    out: list[str] = []
    for entry in ranked.entries:
        key = stem_phrase(entry.candidate.phrase)
        if key in seen:
            continue
        seen.add(key)
        out.append(entry.candidate.surface)
        if len(out) == k:
            break
    return out


def rank_document(
    doc: Document,
    cfg: EmbedderConfig,
    method: str = "mderank",
    strategy: MaskStrategy = MaskStrategy.MASK_ALL,
    measure: SimilarityMeasure = SimilarityMeasure.COSINE,
    backend: EncoderBackend | None = None,
) -> RankedKeyphrases:
    """Window the document to the embeddable prefix, extract candidates, rank."""
    backend = backend or get_backend(cfg)
    window = max_embeddable_words(doc.surfaces, cfg, backend)
    if window == 0:
        return RankedKeyphrases(
            entries=[], strategy=MaskStrategy(strategy), measure=SimilarityMeasure(measure)
        )
    windowed = doc.truncated(window)
    cands = extract_candidates(windowed)
    if method == "mderank":
        return mde_rank(windowed, cands, cfg, strategy, measure, backend)
    if method == "embedrank":
        return embed_rank(windowed, cands, cfg, measure, backend)
    raise ValueError(f"unknown ranking method {method!r}")
