"""Dataset loading and document representation.

The on-disk format is JSONL, one document per line:

    {"id": "...", "tokens": [{"w": "...", "pos": "..."}, ...],
     "keyphrases": ["...", ...]}

`tokens` may be replaced by a raw `text` field, in which case words are
produced by whitespace/punctuation tokenization and tagged heuristically.
A converter is provided for the common raw-benchmark layout (one text file
plus one newline-separated gold-keys file per document).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .porter import stem, stem_phrase  # noqa: F401 - module surface
from .tagging import tag_pos_heuristic

KNOWN_SPLITS = ("inspec", "semeval2010", "semeval2017", "duc2001", "krapivin", "nus", "custom")

_TOKEN_RE = re.compile(r"\w+|[^\w\s]", re.UNICODE)

_POS_TAG_RE = re.compile(r"^[A-Z0-9]+$")


class CorpusError(ValueError):
    """Malformed dataset input."""


@dataclass(frozen=True)
class Word:
    surface: str
    pos_tag: str
    char_start: int
    char_end: int

    def __post_init__(self) -> None:
        if not self.surface:
            raise CorpusError("word surface must be non-empty")
        if not (0 <= self.char_start < self.char_end):
            raise CorpusError(
                f"bad char span [{self.char_start}, {self.char_end}) for {self.surface!r}"
            )
        if not _POS_TAG_RE.match(self.pos_tag):
            raise CorpusError(f"POS tag must be uppercase alphanumeric, got {self.pos_tag!r}")


@dataclass(frozen=True)
class Document:
    id: str
    words: tuple[Word, ...]
    raw_text: str
    gold_keyphrases: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if not self.words:
            raise CorpusError(f"document {self.id!r} has no words")
        prev_end = 0
        for w in self.words:
            if w.char_start < prev_end or w.char_end > len(self.raw_text):
                raise CorpusError(
                    f"document {self.id!r}: word span [{w.char_start}, {w.char_end}) "
                    "overlaps previous word or exceeds raw_text"
                )
            prev_end = w.char_end

    @property
    def surfaces(self) -> list[str]:
        return [w.surface for w in self.words]

    def truncated(self, max_words: int) -> "Document":
        """First `max_words` words; raw_text is cut at the last kept span."""
        if max_words >= len(self.words):
            return self
        kept = self.words[:max_words]
        return Document(
            id=self.id,
            words=kept,
            raw_text=self.raw_text[: kept[-1].char_end],
            gold_keyphrases=self.gold_keyphrases,
        )


@dataclass
class DatasetSplit:
    name: str
    documents: list[Document] = field(default_factory=list)

    def require_gold(self) -> None:
        missing = [d.id for d in self.documents if not d.gold_keyphrases]
        if missing:
            raise CorpusError(
                f"split {self.name!r}: {len(missing)} documents lack gold keyphrases "
                f"(first: {missing[0]!r})"
            )

    def average_words(self) -> float:
        return sum(len(d.words) for d in self.documents) / len(self.documents)


def tokenize_text(text: str) -> list[tuple[str, int, int]]:
    """Split raw text into (surface, start, end) word tokens.

    Runs of word characters form one token; each punctuation character is
    its own token.
    """
    return [(m.group(), m.start(), m.end()) for m in _TOKEN_RE.finditer(text)]


def document_from_text(doc_id: str, text: str, gold: Iterable[str] | None = None) -> Document:
    tokens = tokenize_text(text)
    if not tokens:
        raise CorpusError(f"document {doc_id!r}: no tokens in text")
    tags = tag_pos_heuristic([t[0] for t in tokens])
    words = tuple(
        Word(surface=s, pos_tag=tag, char_start=a, char_end=b)
        for (s, a, b), tag in zip(tokens, tags)
    )
    return Document(
        id=doc_id,
        words=words,
        raw_text=text,
        gold_keyphrases=tuple(gold) if gold is not None else None,
    )


def _document_from_record(record: dict, line_no: int) -> Document:
    for key in ("id",):
        if key not in record:
            raise CorpusError(f"missing field {key} at line {line_no}")
    doc_id = str(record["id"])
    gold = record.get("keyphrases")
    if gold is not None:
        gold = tuple(str(g) for g in gold)

    if "tokens" in record:
        tokens = record["tokens"]
        if not isinstance(tokens, list) or not tokens:
            raise CorpusError(f"empty or invalid tokens at line {line_no}")
        words = []
        cursor = 0
        parts = []
        for t in tokens:
            if not isinstance(t, dict) or "w" not in t or "pos" not in t:
                raise CorpusError(f"token missing w/pos at line {line_no}")
            surface = str(t["w"])
            start = cursor
            words.append(Word(surface, str(t["pos"]), start, start + len(surface)))
            parts.append(surface)
            cursor += len(surface) + 1
        raw_text = " ".join(parts)
        return Document(doc_id, tuple(words), raw_text, gold)

    if "text" in record:
        return document_from_text(doc_id, str(record["text"]), gold)

    raise CorpusError(f"missing field tokens or text at line {line_no}")


def load_jsonl(path: str | Path, name: str | None = None) -> DatasetSplit:
    """Load a dataset split from a JSONL file."""
    p = Path(path)
    if not p.exists():
        raise CorpusError(f"dataset file not found: {p}")
    documents = []
    with p.open("r", encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as e:
                raise CorpusError(f"malformed JSON at line {line_no}: {e.msg}") from e
            documents.append(_document_from_record(record, line_no))
    if not documents:
        raise CorpusError(f"no documents in {p}")
    split_name = name or p.stem.lower()
    return DatasetSplit(name=split_name, documents=documents)


def save_jsonl(split: DatasetSplit, path: str | Path) -> None:
    """Write a split back out in the pre-tagged JSONL format."""
    with Path(path).open("w", encoding="utf-8") as f:
        for doc in split.documents:
            record: dict = {
                "id": doc.id,
                "tokens": [{"w": w.surface, "pos": w.pos_tag} for w in doc.words],
            }
            if doc.gold_keyphrases is not None:
                record["keyphrases"] = list(doc.gold_keyphrases)
            f.write(json.dumps(record, ensure_ascii=False) + "\n")


def iter_raw_benchmark(docs_dir: str | Path, keys_dir: str | Path) -> Iterator[Document]:
    """Convert the common raw layout: one text file + one gold-keys file per doc.

    Files are matched by stem; keys files hold one gold phrase per line.
    """
    docs_dir, keys_dir = Path(docs_dir), Path(keys_dir)
    text_files = sorted(p for p in docs_dir.iterdir() if p.is_file())
    if not text_files:
        raise CorpusError(f"no document files in {docs_dir}")
    key_by_stem = {p.stem: p for p in keys_dir.iterdir() if p.is_file()}
    for tf in text_files:
        kf = key_by_stem.get(tf.stem)
        if kf is None:
            raise CorpusError(f"no gold-keys file for document {tf.name}")
        gold = [ln.strip() for ln in kf.read_text(encoding="utf-8").splitlines() if ln.strip()]
        yield document_from_text(tf.stem, tf.read_text(encoding="utf-8"), gold)


def convert_raw_benchmark(
    docs_dir: str | Path, keys_dir: str | Path, out_path: str | Path, name: str = "custom"
) -> DatasetSplit:
    split = DatasetSplit(name=name, documents=list(iter_raw_benchmark(docs_dir, keys_dir)))
    save_jsonl(split, out_path)
    return split
