"""Document embedding: contextual encoder backends, masking, pooling.

A backend turns words into vocabulary pieces and exposes per-layer hidden
states; embedding pools the states of all content pieces (specials
excluded) element-wise. Masked words are replaced by one mask placeholder
per piece they would otherwise produce, so masked and unmasked variants of
a document have identical piece counts.

Two backends ship: `transformer_model` loads an exported inference-graph
directory (graph + vocabulary + manifest), and `test_bow` is a
deterministic hash embedder used as the test oracle.
"""

from __future__ import annotations

import json
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import wordpiece as wp

MODEL_GRAPH_FILE = "model.pt"
MODEL_VOCAB_FILE = "vocab.txt"
MODEL_MANIFEST_FILE = "manifest.json"

TEST_BOW_DIM = 32
_FNV_OFFSET = 14695981039346656037
_FNV_PRIME = 1099511628211
_M64 = (1 << 64) - 1


class EmbedderError(RuntimeError):
    """Backend loading or embedding failure."""


@dataclass(frozen=True)
class EmbedderConfig:
    backend: str = "test_bow"  # test_bow | transformer_model
    model_path: str | None = None
    layer: int = 12
    pooling: str = "max"  # max | avg
    max_pieces: int = 512
    mask_piece: str = "[MASK]"  # transformer manifests override this
    mask_word_level: bool = False  # one mask per word instead of per piece

    def __post_init__(self) -> None:
        if self.backend not in ("test_bow", "transformer_model"):
            raise EmbedderError(f"unknown backend {self.backend!r}")
        if self.pooling not in ("max", "avg"):
            raise EmbedderError(f"unknown pooling {self.pooling!r}")
        if self.max_pieces < 16:
            raise EmbedderError("max_pieces must be >= 16")
        if self.layer < 1:
            raise EmbedderError("layer is 1-based and must be >= 1")


@dataclass(frozen=True)
class DocumentEmbedding:
    vector: np.ndarray
    piece_count: int


class EncoderBackend(ABC):
    """Read-only inference handle; safe to share across workers."""

    num_layers: int
    hidden_size: int
    mask_piece: str
    reserved_pieces: int = 0  # special pieces added around the content
    max_pieces_limit: int | None = None  # positional capacity, if any

    @abstractmethod
    def word_pieces(self, word: str) -> list[str]:
        """Vocabulary pieces of one unmasked word (never empty)."""

    @abstractmethod
    def hidden_states(self, batch: list[list[str]], layer: int) -> np.ndarray:
        """Content-piece hidden states at `layer`, shape [B, S, D].

        All rows of `batch` must have equal length; special pieces are
        handled internally and excluded from the result.
        """


def fnv1a64(data: bytes, seed: int = 0) -> int:
    """Stable 64-bit FNV-1a hash."""
    h = (_FNV_OFFSET ^ seed) & _M64
    for b in data:
        h ^= b
        h = (h * _FNV_PRIME) & _M64
    return h


def bow_hash_vector(piece: str) -> np.ndarray:
    """Signed one-hot unit vector of a piece over 32 buckets.

    Bucket index is hash % 32, sign is bit 32 of the hash; the vector has
    unit norm by construction.
    """
    h = fnv1a64(piece.encode("utf-8"))
    vec = np.zeros(TEST_BOW_DIM, dtype=np.float64)
    vec[h % TEST_BOW_DIM] = 1.0 if (h >> 32) & 1 else -1.0
    return vec


class TestBowBackend(EncoderBackend):
    """Deterministic hash embedder: one piece per lowercased word, every
    layer identical, mask placeholder maps to the zero vector."""

    num_layers = 12
    hidden_size = TEST_BOW_DIM
    reserved_pieces = 0

    def __init__(self, mask_piece: str = "[MASK]"):
        self.mask_piece = mask_piece

    def word_pieces(self, word: str) -> list[str]:
        return [word.lower()]

    def hidden_states(self, batch: list[list[str]], layer: int) -> np.ndarray:
        del layer  # identical at every layer
        if not batch:
            return np.zeros((0, 0, self.hidden_size))
        width = len(batch[0])
        out = np.zeros((len(batch), width, self.hidden_size), dtype=np.float64)
        for i, row in enumerate(batch):
            for j, piece in enumerate(row):
                if piece != self.mask_piece:
                    out[i, j] = bow_hash_vector(piece)
        return out


class TransformerBackend(EncoderBackend):
    """Exported inference graph + word-piece vocabulary + manifest.

    The graph maps int64 piece ids [B, S] (with [CLS]/[SEP] added) to
    stacked per-layer hidden states [num_layers, B, S, D].
    """

    reserved_pieces = 2
    _CHUNK = 8

    def __init__(self, model_dir: str | Path):
        try:
            import torch
        except ImportError as e:  # pragma: no cover
            raise EmbedderError(
                "the transformer_model backend requires the 'torch' extra"
            ) from e
        self._torch = torch
        model_dir = Path(model_dir)
        if not model_dir.is_dir():
            raise EmbedderError(f"model directory not found: {model_dir}")
        manifest_path = model_dir / MODEL_MANIFEST_FILE
        if not manifest_path.exists():
            raise EmbedderError(f"missing {MODEL_MANIFEST_FILE} in {model_dir}")
        try:
            manifest = json.loads(manifest_path.read_text("utf-8"))
            self.num_layers = int(manifest["num_layers"])
            self.hidden_size = int(manifest["hidden_size"])
            self.mask_piece = str(manifest.get("mask_piece", "[MASK]"))
            self.max_pieces_limit = int(manifest.get("max_pieces", 512))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise EmbedderError(f"corrupt manifest {manifest_path}: {e}") from e

        self._vocab = wp.load_vocab(model_dir / MODEL_VOCAB_FILE)
        for required in ("[CLS]", "[SEP]", wp.UNK_PIECE, self.mask_piece):
            if required not in self._vocab:
                raise EmbedderError(f"vocabulary lacks required piece {required!r}")
        self._cls_id = self._vocab["[CLS]"]
        self._sep_id = self._vocab["[SEP]"]
        self._unk_id = self._vocab[wp.UNK_PIECE]

        graph_path = model_dir / MODEL_GRAPH_FILE
        try:
            self._module = torch.jit.load(str(graph_path), map_location="cpu").eval()
        except Exception as e:
            raise EmbedderError(f"cannot load inference graph {graph_path}: {e}") from e
        self._probe()

    def _probe(self) -> None:
        torch = self._torch
        ids = torch.tensor([[self._cls_id, self._unk_id, self._sep_id]], dtype=torch.int64)
        with torch.no_grad():
            out = self._module(ids)
        if out.dim() != 4 or out.shape[0] != self.num_layers or out.shape[3] != self.hidden_size:
            raise EmbedderError(
                f"graph output shape {tuple(out.shape)} does not match manifest "
                f"(num_layers={self.num_layers}, hidden_size={self.hidden_size})"
            )

    def word_pieces(self, word: str) -> list[str]:
        return wp.tokenize_word(word, self._vocab)

    def hidden_states(self, batch: list[list[str]], layer: int) -> np.ndarray:
        torch = self._torch
        rows = [
            [self._cls_id]
            + [self._vocab.get(p, self._unk_id) for p in row]
            + [self._sep_id]
            for row in batch
        ]
        chunks = []
        with torch.no_grad():
            for i in range(0, len(rows), self._CHUNK):
                ids = torch.tensor(rows[i : i + self._CHUNK], dtype=torch.int64)
                out = self._module(ids)  # [L, B, S, D]
                chunks.append(out[layer - 1, :, 1:-1, :].numpy().astype(np.float64))
        return np.concatenate(chunks, axis=0)


_CACHE_LOCK = threading.Lock()
_BACKEND_CACHE: dict[str, EncoderBackend] = {}


def test_bow_backend(mask_piece: str = "[MASK]") -> TestBowBackend:
    return TestBowBackend(mask_piece)


def load_transformer_backend(model_path: str | Path) -> TransformerBackend:
    return TransformerBackend(model_path)


def get_backend(cfg: EmbedderConfig) -> EncoderBackend:
    """Resolve and cache the backend named by the config."""
    if cfg.backend == "test_bow":
        key = f"test_bow:{cfg.mask_piece}"
    else:
        if not cfg.model_path:
            raise EmbedderError("transformer_model backend requires model_path")
        key = f"transformer:{Path(cfg.model_path).resolve()}"
    with _CACHE_LOCK:
        backend = _BACKEND_CACHE.get(key)
        if backend is None:
            backend = (
                test_bow_backend(cfg.mask_piece)
                if cfg.backend == "test_bow"
                else load_transformer_backend(cfg.model_path)  # type: ignore[arg-type]
            )
            _BACKEND_CACHE[key] = backend
    return backend


def _validate_layer(cfg: EmbedderConfig, backend: EncoderBackend) -> None:
    if not (1 <= cfg.layer <= backend.num_layers):
        raise EmbedderError(
            f"layer {cfg.layer} out of range for a {backend.num_layers}-layer backend"
        )


def _content_budget(cfg: EmbedderConfig, backend: EncoderBackend) -> int:
    total = cfg.max_pieces
    if backend.max_pieces_limit is not None:
        total = min(total, backend.max_pieces_limit)
    return total - backend.reserved_pieces


def _content_pieces(
    words: Sequence[str],
    mask_flags: Sequence[bool],
    cfg: EmbedderConfig,
    backend: EncoderBackend,
) -> list[str]:
    pieces: list[str] = []
    for word, masked in zip(words, mask_flags):
        word_pieces = backend.word_pieces(word)
        if masked:
            count = 1 if cfg.mask_word_level else len(word_pieces)
            pieces.extend([backend.mask_piece] * count)
        else:
            pieces.extend(word_pieces)
    return pieces[: _content_budget(cfg, backend)]


def _pool(states: np.ndarray, pooling: str) -> np.ndarray:
    if pooling == "max":
        return states.max(axis=0)
    return states.mean(axis=0)


def embed_batch(
    words: Sequence[str],
    mask_flag_sets: Sequence[Sequence[bool]],
    cfg: EmbedderConfig,
    backend: EncoderBackend | None = None,
) -> list[DocumentEmbedding]:
    """Embed several masked variants of one document in a single pass.

    Length preservation guarantees all variants share a piece count, so
    they batch without padding.
    """
    if not words:
        raise EmbedderError("cannot embed an empty word sequence")
    backend = backend or get_backend(cfg)
    _validate_layer(cfg, backend)
    rows = []
    for flags in mask_flag_sets:
        if len(flags) != len(words):
            raise EmbedderError("mask_flags length must equal words length")
        rows.append(_content_pieces(words, flags, cfg, backend))
    if not rows:
        return []
    if len({len(r) for r in rows}) != 1:
        # only possible with mask_word_level, where lengths legitimately differ
        return [embed_batch(words, [f], cfg, backend)[0] for f in mask_flag_sets]
    states = backend.hidden_states(rows, cfg.layer)
    out = []
    for i, row in enumerate(rows):
        vector = _pool(states[i], cfg.pooling)
        if not np.all(np.isfinite(vector)):
            raise EmbedderError("non-finite values in document embedding")
        out.append(DocumentEmbedding(vector=vector, piece_count=len(row) + backend.reserved_pieces))
    return out


def embed(
    words: Sequence[str],
    mask_flags: Sequence[bool],
    cfg: EmbedderConfig,
    backend: EncoderBackend | None = None,
) -> DocumentEmbedding:
    """Embed one (possibly masked) document."""
    return embed_batch(words, [mask_flags], cfg, backend)[0]


def max_embeddable_words(
    words: Sequence[str], cfg: EmbedderConfig, backend: EncoderBackend | None = None
) -> int:
    """Largest word-prefix length whose pieces all fit the piece budget."""
    backend = backend or get_backend(cfg)
    budget = _content_budget(cfg, backend)
    used = 0
    for i, word in enumerate(words):
        used += len(backend.word_pieces(word))
        if used > budget:
            return i
    return len(words)

