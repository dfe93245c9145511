"""Triplet corpus loading and batch encoding.

Consumes the triplet JSONL contract: {"doc_id", "words", "pos_mask",
"neg_mask", "pos_phrase", "neg_phrase", "sampling", "theta"} with masks as
[start, end) word-index spans. Words are normalized to lowercase; the
vocabulary is whole-word with the five special pieces up front, so the
consumer-side greedy word-piece tokenizer resolves every known word to a
single identical piece.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

import torch

PAD, UNK, CLS, SEP, MASK = "[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"
SPECIALS = [PAD, UNK, CLS, SEP, MASK]


@dataclass(frozen=True)
class Triplet:
    words: tuple[str, ...]
    pos_mask: tuple[tuple[int, int], ...]
    neg_mask: tuple[tuple[int, int], ...]


def load_triplets(path: str | Path) -> list[Triplet]:
    triplets = []
    with Path(path).open("r", encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                triplets.append(
                    Triplet(
                        words=tuple(w.lower() for w in record["words"]),
                        pos_mask=tuple((int(s), int(e)) for s, e in record["pos_mask"]),
                        neg_mask=tuple((int(s), int(e)) for s, e in record["neg_mask"]),
                    )
                )
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
                raise ValueError(f"bad triplet at line {line_no}: {e}") from e
    if not triplets:
        raise ValueError(f"no triplets in {path}")
    return triplets


def build_vocab(triplets: list[Triplet]) -> dict[str, int]:
    words = sorted({w for t in triplets for w in t.words})
    return {piece: i for i, piece in enumerate(SPECIALS + words)}


def load_vocab_file(path: str | Path) -> dict[str, int]:
    pieces = [ln.rstrip("\n") for ln in Path(path).read_text("utf-8").splitlines()]
    return {p: i for i, p in enumerate(pieces) if p}


def masked_words(words: tuple[str, ...], spans: tuple[tuple[int, int], ...]) -> list[str]:
    out = list(words)
    for start, end in spans:
        for i in range(start, end):
            out[i] = MASK
    return out


def encode(words: list[str] | tuple[str, ...], vocab: dict[str, int], max_pieces: int) -> list[int]:
    unk = vocab[UNK]
    body = [vocab.get(w, unk) for w in words][: max_pieces - 2]
    return [vocab[CLS]] + body + [vocab[SEP]]


@dataclass
class Batch:
    anchor: torch.Tensor  # [B, S] int64
    positive: torch.Tensor
    negative: torch.Tensor
    attention: torch.Tensor  # [B, S] bool, True where real piece
    mlm_input: torch.Tensor  # anchor with random MLM masking applied
    mlm_labels: torch.Tensor  # -100 except at masked positions


def _pad_rows(rows: list[list[int]], pad_id: int) -> tuple[torch.Tensor, torch.Tensor]:
    width = max(len(r) for r in rows)
    ids = torch.full((len(rows), width), pad_id, dtype=torch.int64)
    attention = torch.zeros((len(rows), width), dtype=torch.bool)
    for i, row in enumerate(rows):
        ids[i, : len(row)] = torch.tensor(row, dtype=torch.int64)
        attention[i, : len(row)] = True
    return ids, attention


def apply_mlm_masking(
    ids: torch.Tensor,
    attention: torch.Tensor,
    vocab: dict[str, int],
    probability: float,
    rng: random.Random,
) -> tuple[torch.Tensor, torch.Tensor]:
    """BERT-style 80/10/10 random masking over content positions."""
    mlm_input = ids.clone()
    labels = torch.full_like(ids, -100)
    mask_id = vocab[MASK]
    special_ids = {vocab[PAD], vocab[CLS], vocab[SEP]}
    n_words = len(vocab) - len(SPECIALS)
    for b in range(ids.shape[0]):
        candidates = [
            s
            for s in range(ids.shape[1])
            if attention[b, s] and int(ids[b, s]) not in special_ids
        ]
        if not candidates:
            continue
        n_pick = max(1, round(probability * len(candidates)))
        for s in rng.sample(candidates, min(n_pick, len(candidates))):
            labels[b, s] = ids[b, s]
            roll = rng.random()
            if roll < 0.8:
                mlm_input[b, s] = mask_id
            elif roll < 0.9:
                mlm_input[b, s] = len(SPECIALS) + rng.randrange(max(1, n_words))
    return mlm_input, labels


def make_batch(
    triplets: list[Triplet],
    vocab: dict[str, int],
    max_pieces: int,
    mlm_probability: float,
    rng: random.Random,
) -> Batch:
    anchors, positives, negatives = [], [], []
    for t in triplets:
        anchors.append(encode(t.words, vocab, max_pieces))
        positives.append(encode(masked_words(t.words, t.pos_mask), vocab, max_pieces))
        negatives.append(encode(masked_words(t.words, t.neg_mask), vocab, max_pieces))
    anchor, attention = _pad_rows(anchors, vocab[PAD])
    positive, _ = _pad_rows(positives, vocab[PAD])
    negative, _ = _pad_rows(negatives, vocab[PAD])
    mlm_input, mlm_labels = apply_mlm_masking(
        anchor, attention, vocab, mlm_probability, rng
    )
    return Batch(
        anchor=anchor,
        positive=positive,
        negative=negative,
        attention=attention,
        mlm_input=mlm_input,
        mlm_labels=mlm_labels,
    )
