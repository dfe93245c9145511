"""Command line: train on a triplet JSONL file and export the model directory."""

from __future__ import annotations

import argparse
import sys

from .config import TrainConfig
from .data import load_triplets
from .export import export_model
from .train import train


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpetrain",
        description="Contrastive triplet + MLM pretraining at toy scale.",
    )
    parser.add_argument("triplets", help="triplet corpus JSONL")
    parser.add_argument("--out", required=True, help="output model directory")
    defaults = TrainConfig()
    parser.add_argument("--margin", type=float, default=defaults.margin)
    parser.add_argument("--mlm-weight", type=float, default=defaults.mlm_weight)
    parser.add_argument("--learning-rate", type=float, default=defaults.learning_rate)
    parser.add_argument("--batch-size", type=int, default=defaults.batch_size)
    parser.add_argument(
        "--grad-accumulation", type=int, default=defaults.grad_accumulation
    )
    parser.add_argument("--epochs", type=int, default=defaults.epochs)
    parser.add_argument("--mlm-probability", type=float, default=defaults.mlm_probability)
    parser.add_argument("--base-model", default=None)
    parser.add_argument("--hidden-size", type=int, default=defaults.hidden_size)
    parser.add_argument("--num-layers", type=int, default=defaults.num_layers)
    parser.add_argument("--num-heads", type=int, default=defaults.num_heads)
    parser.add_argument("--max-pieces", type=int, default=defaults.max_pieces)
    parser.add_argument("--seed", type=int, default=defaults.seed)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = TrainConfig(
            margin=args.margin,
            mlm_weight=args.mlm_weight,
            learning_rate=args.learning_rate,
            batch_size=args.batch_size,
            grad_accumulation=args.grad_accumulation,
            epochs=args.epochs,
            mlm_probability=args.mlm_probability,
            base_model=args.base_model,
            hidden_size=args.hidden_size,
            num_layers=args.num_layers,
            num_heads=args.num_heads,
            max_pieces=args.max_pieces,
            seed=args.seed,
        )
        triplets = load_triplets(args.triplets)
    except (ValueError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        result = train(triplets, cfg)
        out = export_model(result.model, result.vocab, args.out)
    except Exception as e:  # noqa: BLE001 - surface any training/export failure
        print(f"error: {e}", file=sys.stderr)
        return 1
    steps = len(result.step_triplet_losses)
    if steps:
        print(
            f"trained {steps} optimizer steps; "
            f"triplet loss {result.step_triplet_losses[0]:.4f} -> "
            f"{result.step_triplet_losses[-1]:.4f}; exported to {out}"
        )
    else:
        print(f"no full optimizer step taken (corpus too small); exported to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
