"""Vocabulary-driven word-piece tokenization for the transformer backend.

Per word: strip accents, lowercase, split punctuation characters off as
separate sub-tokens, then greedy longest-prefix-match each sub-token
against the vocabulary, with "##" continuation pieces.
"""

from __future__ import annotations

import unicodedata
from pathlib import Path

UNK_PIECE = "[UNK]"
_MAX_WORD_CHARS = 100


def load_vocab(path: str | Path) -> dict[str, int]:
    """Piece -> id mapping; ids are line numbers starting at 0."""
    vocab: dict[str, int] = {}
    with Path(path).open("r", encoding="utf-8") as f:
        for i, line in enumerate(f):
            piece = line.rstrip("\n")
            if piece and piece not in vocab:
                vocab[piece] = i
    if not vocab:
        raise ValueError(f"empty vocabulary file: {path}")
    return vocab


def _is_punctuation(ch: str) -> bool:
    cp = ord(ch)
    if 33 <= cp <= 47 or 58 <= cp <= 64 or 91 <= cp <= 96 or 123 <= cp <= 126:
        return True
    return unicodedata.category(ch).startswith("P")


def normalize_word(word: str, lowercase: bool = True) -> list[str]:
    """Accent-strip, optionally lowercase, and split off punctuation chars."""
    if lowercase:
        word = word.lower()
    word = unicodedata.normalize("NFD", word)
    word = "".join(ch for ch in word if unicodedata.category(ch) != "Mn")
    out: list[str] = []
    current: list[str] = []
    for ch in word:
        if _is_punctuation(ch):
            if current:
                out.append("".join(current))
                current = []
            out.append(ch)
        else:
            current.append(ch)
    if current:
        out.append("".join(current))
    return out


def wordpiece(token: str, vocab: dict[str, int]) -> list[str]:
    """Greedy longest-match split of one normalized sub-token."""
    if len(token) > _MAX_WORD_CHARS:
        return [UNK_PIECE]
    pieces: list[str] = []
    start = 0
    while start < len(token):
        end = len(token)
        piece = None
        while start < end:
            sub = token[start:end]
            if start > 0:
                sub = "##" + sub
            if sub in vocab:
                piece = sub
                break
            end -= 1
        if piece is None:
            return [UNK_PIECE]
        pieces.append(piece)
        start = end
    return pieces


def tokenize_word(word: str, vocab: dict[str, int], lowercase: bool = True) -> list[str]:
    """Full per-word pipeline; always returns at least one piece."""
    sub_tokens = normalize_word(word, lowercase=lowercase)
    if not sub_tokens:
        return [UNK_PIECE]
    pieces: list[str] = []
    for sub in sub_tokens:
        pieces.extend(wordpiece(sub, vocab))
    return pieces
