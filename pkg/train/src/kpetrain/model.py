"""Small transformer encoder with per-layer hidden states and an MLM head.

The pooled document representation mirrors the consumer's inference
pooling: element-wise max over content pieces (specials and padding
excluded) at the last layer.
"""

from __future__ import annotations

import torch
from torch import nn


class TinyEncoder(nn.Module):
    def __init__(
        self,
        vocab_size: int,
        hidden_size: int = 64,
        num_layers: int = 2,
        num_heads: int = 4,
        ffn_size: int = 128,
        max_pieces: int = 128,
    ):
        super().__init__()
        self.vocab_size = vocab_size
        self.hidden_size = hidden_size
        self.num_layers = num_layers
        self.max_pieces = max_pieces
        self.tok_emb = nn.Embedding(vocab_size, hidden_size)
        self.pos_emb = nn.Embedding(max_pieces, hidden_size)
        self.layers = nn.ModuleList(
            [
                nn.TransformerEncoderLayer(
                    d_model=hidden_size,
                    nhead=num_heads,
                    dim_feedforward=ffn_size,
                    batch_first=True,
                    dropout=0.0,
                )
                for _ in range(num_layers)
            ]
        )
        self.mlm_head = nn.Linear(hidden_size, vocab_size)

    def hidden_states(
        self, ids: torch.Tensor, attention: torch.Tensor | None = None
    ) -> list[torch.Tensor]:
        """Per-layer states [B, S, D], layers 1..num_layers."""
        positions = torch.arange(ids.size(1), device=ids.device).unsqueeze(0)
        h = self.tok_emb(ids) + self.pos_emb(positions)
        key_padding = None if attention is None else ~attention
        states = []
        for layer in self.layers:
            h = layer(h, src_key_padding_mask=key_padding)
            states.append(h)
        return states

    def forward(self, ids: torch.Tensor, attention: torch.Tensor | None = None) -> torch.Tensor:
        """Stacked states [num_layers, B, S, D] (the export contract)."""
        return torch.stack(self.hidden_states(ids, attention), dim=0)

    def mlm_logits(self, ids: torch.Tensor, attention: torch.Tensor | None = None) -> torch.Tensor:
        return self.mlm_head(self.hidden_states(ids, attention)[-1])


def pooled_representation(
    last_layer: torch.Tensor, attention: torch.Tensor
) -> torch.Tensor:
    """Max-pool content pieces: drop [CLS]/[SEP]/padding, keep the rest.

    `last_layer` is [B, S, D]; position 0 is [CLS] and the final real
    position of each row is [SEP].
    """
    batch, seq, dim = last_layer.shape
    content = attention.clone()
    content[:, 0] = False
    lengths = attention.sum(dim=1)
    for b in range(batch):
        content[b, int(lengths[b]) - 1] = False
    masked = last_layer.masked_fill(~content.unsqueeze(-1), float("-inf"))
    pooled = masked.max(dim=1).values
    # a row with no content piece (only CLS/SEP) pools to zeros
    return torch.where(torch.isfinite(pooled), pooled, torch.zeros_like(pooled))
