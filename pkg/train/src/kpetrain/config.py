"""Training configuration."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TrainConfig:
    margin: float = 0.2
    mlm_weight: float = 0.1  # balance between triplet and MLM loss
    learning_rate: float = 3e-5
    batch_size: int = 2
    grad_accumulation: int = 4
    epochs: int = 10
    mlm_probability: float = 0.15
    base_model: str | None = None  # optional model directory to initialize from
    hidden_size: int = 64
    num_layers: int = 2
    num_heads: int = 4
    ffn_size: int = 128
    max_pieces: int = 128
    mlm_on_all_documents: bool = False  # default: anchor only
    seed: int = 0

    def __post_init__(self) -> None:
        if self.margin < 0:
            raise ValueError("margin must be >= 0")
        if self.mlm_weight < 0:
            raise ValueError("mlm_weight must be >= 0")
        if not (0.0 <= self.mlm_probability <= 1.0):
            raise ValueError("mlm_probability must be within [0, 1]")
        if self.hidden_size % self.num_heads:
            raise ValueError("hidden_size must be divisible by num_heads")
