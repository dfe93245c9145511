"""Contrastive and multitask losses.

The triplet loss keeps the anchor closer to the variant that masked a
non-keyphrase: loss = max(sim(d, d+) - sim(d, d-) + margin, 0) with cosine
similarity, zero exactly when sim(d, d-) >= sim(d, d+) + margin.
"""

from __future__ import annotations

import torch
import torch.nn.functional as F


def cosine_sim(a: torch.Tensor, b: torch.Tensor) -> torch.Tensor:
    if a.shape != b.shape:
        raise ValueError(f"embedding shape mismatch: {tuple(a.shape)} vs {tuple(b.shape)}")
    return F.cosine_similarity(a, b, dim=-1)


def triplet_loss(
    anchor: torch.Tensor,
    positive: torch.Tensor,
    negative: torch.Tensor,
    margin: float = 0.2,
) -> torch.Tensor:
    """Mean hinge over the batch; accepts [D] or [B, D] embeddings."""
    sim_pos = cosine_sim(anchor, positive)
    sim_neg = cosine_sim(anchor, negative)
    return torch.clamp(sim_pos - sim_neg + margin, min=0.0).mean()


def mlm_loss(logits: torch.Tensor, labels: torch.Tensor) -> torch.Tensor:
    """Cross-entropy over masked positions (labels -100 elsewhere)."""
    return F.cross_entropy(
        logits.reshape(-1, logits.size(-1)), labels.reshape(-1), ignore_index=-100
    )


def total_loss(
    contrastive: torch.Tensor, masked_lm: torch.Tensor, mlm_weight: float
) -> torch.Tensor:
    return contrastive + mlm_weight * masked_lm
