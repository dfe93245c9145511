"""Tiny deterministic exported models for backend contract tests.

The "multiplier" model embeds piece ids with hand-computable weights
(weight[i, d] = (i + 1) * 0.1 + d * 0.01) and returns layer k states equal
to k times the embedding, stacked as [num_layers, B, S, D].
"""

from __future__ import annotations

import json
from pathlib import Path

DEFAULT_VOCAB = [
    "[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]",
    "net", "##work", "deep", "model", "x", "y", "z",
]


def expected_hidden(piece_id: int, layer: int, dim: int) -> float:
    return layer * ((piece_id + 1) * 0.1 + dim * 0.01)


def build_multiplier_model_dir(
    dirpath,
    vocab_pieces=None,
    num_layers: int = 3,
    hidden: int = 4,
    max_pieces: int = 64,
) -> Path:
    import torch

    vocab_pieces = list(vocab_pieces or DEFAULT_VOCAB)

    class Multiplier(torch.nn.Module):
        def __init__(self, vocab_size: int, num_layers: int, hidden: int):
            super().__init__()
            weight = torch.zeros(vocab_size, hidden)
            for i in range(vocab_size):
                for d in range(hidden):
                    weight[i, d] = (i + 1) * 0.1 + d * 0.01
            self.emb = torch.nn.Embedding(vocab_size, hidden, _weight=weight)
            self.num_layers = num_layers

        def forward(self, ids: torch.Tensor) -> torch.Tensor:
            h = self.emb(ids)
            states = []
            for k in range(1, self.num_layers + 1):
                states.append(h * float(k))
            return torch.stack(states)

    module = torch.jit.script(Multiplier(len(vocab_pieces), num_layers, hidden).eval())
    d = Path(dirpath)
    d.mkdir(parents=True, exist_ok=True)
    torch.jit.save(module, str(d / "model.pt"))
    (d / "vocab.txt").write_text("\n".join(vocab_pieces) + "\n", encoding="utf-8")
    (d / "manifest.json").write_text(
        json.dumps(
            {
                "num_layers": num_layers,
                "hidden_size": hidden,
                "mask_piece": "[MASK]",
                "max_pieces": max_pieces,
            }
        ),
        encoding="utf-8",
    )
    return d
