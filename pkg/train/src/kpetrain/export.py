"""Export a trained encoder into the consumer's model-directory layout:

    model.pt       TorchScript graph: int64 ids [B, S] -> [num_layers, B, S, D]
    vocab.txt      one piece per line, id order
    manifest.json  {num_layers, hidden_size, mask_piece, max_pieces}
    weights.pt     eager state_dict, reusable as --base-model
"""

from __future__ import annotations

import json
from pathlib import Path

import torch
from torch import nn

from .data import MASK
from .model import TinyEncoder


class InferenceGraph(nn.Module):
    """Full-attention forward over all layers, stacked."""

    def __init__(self, encoder: TinyEncoder):
        super().__init__()
        self.tok_emb = encoder.tok_emb
        self.pos_emb = encoder.pos_emb
        self.layers = encoder.layers

    def forward(self, ids: torch.Tensor) -> torch.Tensor:
        positions = torch.arange(ids.size(1), device=ids.device).unsqueeze(0)
        h = self.tok_emb(ids) + self.pos_emb(positions)
        states = []
        for layer in self.layers:
            h = layer(h)
            states.append(h)
        return torch.stack(states, dim=0)


def export_model(model: TinyEncoder, vocab: dict[str, int], out_dir: str | Path) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    model = model.eval()
    graph = torch.jit.script(InferenceGraph(model).eval())
    torch.jit.save(graph, str(out / "model.pt"))

    pieces = [piece for piece, _ in sorted(vocab.items(), key=lambda kv: kv[1])]
    (out / "vocab.txt").write_text("\n".join(pieces) + "\n", encoding="utf-8")

    (out / "manifest.json").write_text(
        json.dumps(
            {
                "num_layers": model.num_layers,
                "hidden_size": model.hidden_size,
                "mask_piece": MASK,
                "max_pieces": model.max_pieces,
            },
            indent=2,
        )
        + "\n",
        encoding="utf-8",
    )
    torch.save(model.state_dict(), out / "weights.pt")

    # verify the artifact loads and matches the declared dimensions
    reloaded = torch.jit.load(str(out / "model.pt")).eval()
    probe = torch.zeros((1, 3), dtype=torch.int64)
    with torch.no_grad():
        states = reloaded(probe)
    if tuple(states.shape) != (model.num_layers, 1, 3, model.hidden_size):
        raise RuntimeError(f"export self-check failed: got shape {tuple(states.shape)}")
    return out
