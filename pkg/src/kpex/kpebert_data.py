"""Contrastive triplet corpus construction from pseudo labels.

Each triplet pairs a document (anchor) with a positive variant masking a
pseudo-keyphrase and a negative variant masking a non-keyphrase (absolute
sampling) or a lower-ranked pseudo-keyphrase (relative sampling). Masks
follow the all-occurrences rule used at ranking time and are serialized as
word-index spans.

Wire format (JSONL, one triplet per line):

    {"doc_id": ..., "words": [...], "pos_mask": [[start, end], ...],
     "neg_mask": [[start, end], ...], "pos_phrase": ..., "neg_phrase": ...,
     "sampling": "absolute"|"relative", "theta": ...}
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .candidates import Candidate, extract_candidates
from .corpus_io import DatasetSplit, Document
from .pseudo_labelers import PseudoLabelConfig, pseudo_label

ABSOLUTE_TOP_N = 10
RELATIVE_TOP_N = 20
DEFAULT_TRIPLETS_PER_DOC = 4


class TripletError(ValueError):
    """Violated triplet-construction precondition."""


@dataclass(frozen=True)
class TripletExample:
    doc_id: str
    anchor_words: tuple[str, ...]
    positive_mask: tuple[tuple[int, int], ...]
    negative_mask: tuple[tuple[int, int], ...]
    positive_phrase: str
    negative_phrase: str
    sampling: str
    theta: str

    def __post_init__(self) -> None:
        if self.positive_phrase == self.negative_phrase:
            raise TripletError("positive and negative phrase must differ")
        for phrase, mask in (
            (self.positive_phrase, self.positive_mask),
            (self.negative_phrase, self.negative_mask),
        ):
            if not mask:
                raise TripletError(f"empty mask for phrase {phrase!r}")
            words = phrase.split()
            prev_end = 0
            for start, end in mask:
                if not (prev_end <= start < end <= len(self.anchor_words)):
                    raise TripletError(f"bad mask span [{start}, {end})")
                span = [w.lower() for w in self.anchor_words[start:end]]
                if span != words:
                    raise TripletError(
                        f"mask span {span} does not reconstruct phrase {phrase!r}"
                    )
                prev_end = end


def derive_doc_seed(seed: int, doc_id: str) -> int:
    """Stable per-document RNG seed, independent of worker scheduling."""
    digest = hashlib.sha256(f"{seed}:{doc_id}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def _occurrence_spans(cand: Candidate) -> tuple[tuple[int, int], ...]:
    return tuple((o.start_word, o.end_word) for o in cand.occurrences)


def _candidate_index(cands: Sequence[Candidate]) -> dict[str, Candidate]:
    return {c.phrase: c for c in cands}


def sample_absolute(
    doc: Document,
    cands: Sequence[Candidate],
    pseudo: Sequence[str],
    n_triplets: int = DEFAULT_TRIPLETS_PER_DOC,
    rng_seed: int = 0,
    theta: str = "yake_lite",
) -> list[TripletExample]:
    """Positives mask a pseudo-keyphrase, negatives mask any other candidate.

    Raises TripletError when the pseudo set or its complement is empty.
    """
    by_phrase = _candidate_index(cands)
    keyphrases = [p for p in pseudo if p in by_phrase]
    non_keyphrases = [c.phrase for c in cands if c.phrase not in set(keyphrases)]
    if not keyphrases:
        raise TripletError("no pseudo-keyphrase matches a candidate")
    if not non_keyphrases:
        raise TripletError("every candidate is a pseudo-keyphrase")
    rng = random.Random(derive_doc_seed(rng_seed, doc.id))
    words = tuple(doc.surfaces)
    out = []
    for _ in range(n_triplets):
        pos = rng.choice(keyphrases)
        neg = rng.choice(non_keyphrases)
        out.append(
            TripletExample(
                doc_id=doc.id,
                anchor_words=words,
                positive_mask=_occurrence_spans(by_phrase[pos]),
                negative_mask=_occurrence_spans(by_phrase[neg]),
                positive_phrase=pos,
                negative_phrase=neg,
                sampling="absolute",
                theta=theta,
            )
        )
    return out


def sample_relative(
    doc: Document,
    cands: Sequence[Candidate],
    pseudo: Sequence[str],
    n_triplets: int = DEFAULT_TRIPLETS_PER_DOC,
    rng_seed: int = 0,
    theta: str = "yake_lite",
) -> list[TripletExample]:
    """Draw unordered pseudo-keyphrase pairs; the higher-ranked one is positive."""
    by_phrase = _candidate_index(cands)
    ranked = [p for p in pseudo if p in by_phrase]
    if len(ranked) < 2:
        raise TripletError("relative sampling needs at least two pseudo-keyphrases")
    rng = random.Random(derive_doc_seed(rng_seed, doc.id))
    words = tuple(doc.surfaces)
    out = []
    for _ in range(n_triplets):
        i, j = rng.sample(range(len(ranked)), 2)
        hi, lo = (i, j) if i < j else (j, i)
        pos, neg = ranked[hi], ranked[lo]
        out.append(
            TripletExample(
                doc_id=doc.id,
                anchor_words=words,
                positive_mask=_occurrence_spans(by_phrase[pos]),
                negative_mask=_occurrence_spans(by_phrase[neg]),
                positive_phrase=pos,
                negative_phrase=neg,
                sampling="relative",
                theta=theta,
            )
        )
    return out


def build_triplet_corpus(
    split: DatasetSplit,
    sampling: str = "absolute",
    theta: str = "yake_lite",
    n_per_doc: int = DEFAULT_TRIPLETS_PER_DOC,
    seed: int = 0,
    top_n: int | None = None,
) -> tuple[list[TripletExample], list[tuple[str, str]]]:
    """Generate triplets for a whole split; skipped documents are recorded
    as (doc_id, reason) instead of failing the run."""
    if sampling not in ("absolute", "relative"):
        raise TripletError(f"unknown sampling {sampling!r}")
    if top_n is None:
        top_n = ABSOLUTE_TOP_N if sampling == "absolute" else RELATIVE_TOP_N
    plcfg = PseudoLabelConfig(method=theta, top_n=top_n)
    sampler = sample_absolute if sampling == "absolute" else sample_relative
    examples: list[TripletExample] = []
    skips: list[tuple[str, str]] = []
    for doc in split.documents:
        cands = extract_candidates(doc)
        if not cands:
            skips.append((doc.id, "no candidates"))
            continue
        pseudo = pseudo_label(doc, cands, plcfg)
        try:
            examples.extend(
                sampler(doc, cands, pseudo, n_triplets=n_per_doc, rng_seed=seed, theta=theta)
            )
        except TripletError as e:
            skips.append((doc.id, str(e)))
    return examples, skips


def triplet_to_record(ex: TripletExample) -> dict:
    return {
        "doc_id": ex.doc_id,
        "words": list(ex.anchor_words),
        "pos_mask": [list(span) for span in ex.positive_mask],
        "neg_mask": [list(span) for span in ex.negative_mask],
        "pos_phrase": ex.positive_phrase,
        "neg_phrase": ex.negative_phrase,
        "sampling": ex.sampling,
        "theta": ex.theta,
    }


def triplet_from_record(record: dict) -> TripletExample:
    return TripletExample(
        doc_id=str(record["doc_id"]),
        anchor_words=tuple(record["words"]),
        positive_mask=tuple((int(s), int(e)) for s, e in record["pos_mask"]),
        negative_mask=tuple((int(s), int(e)) for s, e in record["neg_mask"]),
        positive_phrase=str(record["pos_phrase"]),
        negative_phrase=str(record["neg_phrase"]),
        sampling=str(record["sampling"]),
        theta=str(record["theta"]),
    )


def write_triplets(examples: Iterable[TripletExample], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8") as f:
        for ex in examples:
            f.write(json.dumps(triplet_to_record(ex), ensure_ascii=False) + "\n")


def read_triplets(path: str | Path) -> list[TripletExample]:
    out = []
    with Path(path).open("r", encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if line:
                out.append(triplet_from_record(json.loads(line)))
    return out
