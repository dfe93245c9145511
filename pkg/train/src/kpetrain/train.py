"""Seeded single-process training loop with gradient accumulation."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path

import torch

from .config import TrainConfig
from .data import Triplet, apply_mlm_masking, build_vocab, load_vocab_file, make_batch
from .losses import mlm_loss, total_loss, triplet_loss
from .model import TinyEncoder, pooled_representation


@dataclass
class TrainResult:
    model: TinyEncoder
    vocab: dict[str, int]
    step_triplet_losses: list[float] = field(default_factory=list)
    step_total_losses: list[float] = field(default_factory=list)

    def mean_triplet_loss(self, start: int, stop: int) -> float:
        window = self.step_triplet_losses[start:stop]
        return sum(window) / len(window)


def _init_model(cfg: TrainConfig, vocab: dict[str, int]) -> TinyEncoder:
    model = TinyEncoder(
        vocab_size=len(vocab),
        hidden_size=cfg.hidden_size,
        num_layers=cfg.num_layers,
        num_heads=cfg.num_heads,
        ffn_size=cfg.ffn_size,
        max_pieces=cfg.max_pieces,
    )
    if cfg.base_model:
        weights = Path(cfg.base_model) / "weights.pt"
        if not weights.exists():
            raise FileNotFoundError(
                f"base model directory {cfg.base_model} has no weights.pt"
            )
        model.load_state_dict(torch.load(weights, map_location="cpu", weights_only=True))
    return model


def _resolve_vocab(cfg: TrainConfig, triplets: list[Triplet]) -> dict[str, int]:
    if cfg.base_model:
        return load_vocab_file(Path(cfg.base_model) / "vocab.txt")
    return build_vocab(triplets)


def embed_sentence(model: TinyEncoder, vocab: dict[str, int], words: list[str]) -> torch.Tensor:
    """Pooled representation of one plain sentence (the fidelity probe)."""
    from .data import encode

    model.eval()
    with torch.no_grad():
        ids = torch.tensor([encode([w.lower() for w in words], vocab, model.max_pieces)])
        attention = torch.ones_like(ids, dtype=torch.bool)
        states = model.hidden_states(ids, attention)
        return pooled_representation(states[-1], attention)[0]


def train(triplets: list[Triplet], cfg: TrainConfig) -> TrainResult:
    torch.manual_seed(cfg.seed)
    rng = random.Random(cfg.seed)
    vocab = _resolve_vocab(cfg, triplets)
    model = _init_model(cfg, vocab)
    model.train()
    optimizer = torch.optim.AdamW(model.parameters(), lr=cfg.learning_rate)
    result = TrainResult(model=model, vocab=vocab)

    accumulated = 0
    window_triplet: list[float] = []
    window_total: list[float] = []
    order = list(range(len(triplets)))
    for _ in range(cfg.epochs):
        rng.shuffle(order)
        for start in range(0, len(order), cfg.batch_size):
            chunk = [triplets[i] for i in order[start : start + cfg.batch_size]]
            batch = make_batch(chunk, vocab, cfg.max_pieces, cfg.mlm_probability, rng)

            anchor_states = model.hidden_states(batch.anchor, batch.attention)
            positive_states = model.hidden_states(batch.positive, batch.attention)
            negative_states = model.hidden_states(batch.negative, batch.attention)
            h_anchor = pooled_representation(anchor_states[-1], batch.attention)
            h_positive = pooled_representation(positive_states[-1], batch.attention)
            h_negative = pooled_representation(negative_states[-1], batch.attention)
            contrastive = triplet_loss(h_anchor, h_positive, h_negative, cfg.margin)

            mlm_pairs = [(batch.mlm_input, batch.mlm_labels)]
            if cfg.mlm_on_all_documents:
                for ids in (batch.positive, batch.negative):
                    mlm_pairs.append(
                        apply_mlm_masking(
                            ids, batch.attention, vocab, cfg.mlm_probability, rng
                        )
                    )
            mlm_terms = []
            for mlm_input, mlm_labels in mlm_pairs:
                term = mlm_loss(model.mlm_logits(mlm_input, batch.attention), mlm_labels)
                if not torch.isnan(term):  # rows may lack maskable positions
                    mlm_terms.append(term)
            masked_lm = (
                torch.stack(mlm_terms).mean() if mlm_terms else torch.zeros(())
            )
            loss = total_loss(contrastive, masked_lm, cfg.mlm_weight)

            (loss / cfg.grad_accumulation).backward()
            window_triplet.append(float(contrastive.detach()))
            window_total.append(float(loss.detach()))
            accumulated += 1
            if accumulated == cfg.grad_accumulation:
                optimizer.step()
                optimizer.zero_grad()
                accumulated = 0
                result.step_triplet_losses.append(sum(window_triplet) / len(window_triplet))
                result.step_total_losses.append(sum(window_total) / len(window_total))
                window_triplet.clear()
                window_total.clear()
    if accumulated:  # flush the trailing partial accumulation window
        optimizer.step()
        optimizer.zero_grad()
        result.step_triplet_losses.append(sum(window_triplet) / len(window_triplet))
        result.step_total_losses.append(sum(window_total) / len(window_total))
    return result
