#!/usr/bin/env python3
"""Export a Hugging Face BERT checkpoint into the toolkit's model-directory
layout (model.pt + vocab.txt + manifest.json).

Needs `transformers` and network/cache access to the checkpoint, so it is
meant to run on a networked machine; the output directory is what
KPEX_BERT_DIR should point at.

    python scripts/export_bert_model.py bert-base-uncased out/bert-base-uncased

The exported graph maps int64 piece ids [B, S] (S <= max_pieces) to
stacked per-layer hidden states [num_layers, B, S, D]. The encoder itself
is traced at the fixed maximum length; a scripted wrapper pads/unpads so
callers can pass any S.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

import torch


class PaddedEncoder(torch.nn.Module):
    def __init__(self, traced: torch.jit.ScriptModule, pad_id: int, max_pieces: int):
        super().__init__()
        self.traced = traced
        self.pad_id = pad_id
        self.max_pieces = max_pieces

    def forward(self, ids: torch.Tensor) -> torch.Tensor:
        batch = ids.size(0)
        length = ids.size(1)
        pad = self.max_pieces - length
        fill = torch.full((batch, pad), self.pad_id, dtype=torch.int64, device=ids.device)
        padded = torch.cat([ids, fill], dim=1)
        mask = torch.cat(
            [
                torch.ones(batch, length, dtype=torch.int64, device=ids.device),
                torch.zeros(batch, pad, dtype=torch.int64, device=ids.device),
            ],
            dim=1,
        )
        states = self.traced(padded, mask)  # [L, B, max_pieces, D]
        return states[:, :, :length, :]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("checkpoint", help="HF model name or local checkpoint path")
    parser.add_argument("out_dir", help="output model directory")
    parser.add_argument("--max-pieces", type=int, default=512)
    args = parser.parse_args()

    from transformers import AutoModel, AutoTokenizer

    tokenizer = AutoTokenizer.from_pretrained(args.checkpoint)
    model = AutoModel.from_pretrained(args.checkpoint, output_hidden_states=True).eval()

    num_layers = model.config.num_hidden_layers
    hidden = model.config.hidden_size
    pad_id = tokenizer.pad_token_id

    class StackedStates(torch.nn.Module):
        def __init__(self, bert):
            super().__init__()
            self.bert = bert

        def forward(self, ids, mask):
            out = self.bert(input_ids=ids, attention_mask=mask)
            # hidden_states[0] is the embedding output; keep layers 1..L
            return torch.stack(list(out.hidden_states[1:]), dim=0)

    example_ids = torch.full((2, args.max_pieces), pad_id, dtype=torch.int64)
    example_ids[:, 0] = tokenizer.cls_token_id
    example_ids[:, 1] = tokenizer.sep_token_id
    example_mask = (example_ids != pad_id).long()
    with torch.no_grad():
        traced = torch.jit.trace(
            StackedStates(model), (example_ids, example_mask), strict=False
        )
        wrapper = torch.jit.script(PaddedEncoder(traced, pad_id, args.max_pieces))

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    torch.jit.save(wrapper, str(out_dir / "model.pt"))

    vocab = sorted(tokenizer.get_vocab().items(), key=lambda kv: kv[1])
    (out_dir / "vocab.txt").write_text(
        "\n".join(piece for piece, _ in vocab) + "\n", encoding="utf-8"
    )
    (out_dir / "manifest.json").write_text(
        json.dumps(
            {
                "num_layers": num_layers,
                "hidden_size": hidden,
                "mask_piece": tokenizer.mask_token or "[MASK]",
                "max_pieces": args.max_pieces,
            },
            indent=2,
        ),
        encoding="utf-8",
    )

    # sanity check through the exported artifact at a different length
    reloaded = torch.jit.load(str(out_dir / "model.pt")).eval()
    probe = torch.tensor([[tokenizer.cls_token_id, tokenizer.sep_token_id]], dtype=torch.int64)
    with torch.no_grad():
        states = reloaded(probe)
    assert states.shape == (num_layers, 1, 2, hidden), states.shape
    print(f"exported {args.checkpoint} ({num_layers} layers, D={hidden}) to {out_dir}")


if __name__ == "__main__":
    main()
