"""Toy-scale contrastive pretraining for masked-document keyphrase ranking.

Consumes triplet JSONL corpora (anchor document plus keyphrase-masked
positive and non-keyphrase-masked negative variants), optimizes a triplet
plus masked-language-model multitask loss, and exports a model directory
loadable by the extraction toolkit's transformer backend.
"""

from .config import TrainConfig
from .data import Triplet, build_vocab, load_triplets, make_batch
from .export import export_model
from .losses import cosine_sim, mlm_loss, total_loss, triplet_loss
from .model import TinyEncoder, pooled_representation
from .train import TrainResult, embed_sentence, train

__version__ = "0.1.0"

__all__ = [
    "TinyEncoder",
    "TrainConfig",
    "TrainResult",
    "Triplet",
    "build_vocab",
    "cosine_sim",
    "embed_sentence",
    "export_model",
    "load_triplets",
    "make_batch",
    "mlm_loss",
    "pooled_representation",
    "total_loss",
    "train",
    "triplet_loss",
]
