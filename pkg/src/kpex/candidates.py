"""Candidate keyphrase selection.

Candidates are maximal, non-overlapping tag-pattern matches: zero or more
adjectives or nouns followed by a noun (tags JJ* optional, ending NN-prefixed).
Identical lowercased phrases merge into one candidate carrying every
occurrence; the surface form of the first occurrence is kept for output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus_io import Document


def _is_noun(tag: str) -> bool:
    return tag.startswith("NN")


def _is_extender(tag: str) -> bool:
    return tag.startswith("NN") or tag == "JJ"


@dataclass(frozen=True, order=True)
class Occurrence:
    start_word: int
    end_word: int  # exclusive

    def __post_init__(self) -> None:
        if not (0 <= self.start_word < self.end_word):
            raise ValueError(f"bad occurrence [{self.start_word}, {self.end_word})")

    def positions(self) -> range:
        return range(self.start_word, self.end_word)


@dataclass(frozen=True)
class Candidate:
    phrase_words: tuple[str, ...]  # lowercased
    surface: str  # first-occurrence surface form, space-joined
    occurrences: tuple[Occurrence, ...]

    @property
    def first_occurrence_index(self) -> int:
        return self.occurrences[0].start_word

    @property
    def phrase(self) -> str:
        return " ".join(self.phrase_words)

    def __len__(self) -> int:
        return len(self.phrase_words)


def candidate_phrase_length(c: Candidate) -> int:
    """Number of words in the candidate phrase."""
    return len(c.phrase_words)


def match_spans(tags: list[str]) -> list[tuple[int, int]]:
    """Maximal pattern matches over a tag sequence.

    At each scan position the match greedily extends through JJ/NN-prefixed
    tags and ends at the last noun tag of that run; runs without a noun
    yield nothing.
    """
    spans = []
    n = len(tags)
    i = 0
    while i < n:
        if not _is_extender(tags[i]):
            i += 1
            continue
        j = i
        last_noun = None
        while j < n and _is_extender(tags[j]):
            if _is_noun(tags[j]):
                last_noun = j
            j += 1
        if last_noun is not None and last_noun >= i:
            spans.append((i, last_noun + 1))
            i = last_noun + 1
        else:
            i = j
    return spans


def extract_candidates(doc: Document, max_words: int | None = None) -> list[Candidate]:
    """Candidates of a document, merged by lowercased phrase, in first-occurrence order.

    `max_words` restricts extraction to a word-prefix window so that every
    returned occurrence is embeddable (and maskable) downstream.
    """
    words = doc.words if max_words is None else doc.words[:max_words]
    tags = [w.pos_tag for w in words]
    by_phrase: dict[tuple[str, ...], dict] = {}
    for start, end in match_spans(tags):
        phrase = tuple(w.surface.lower() for w in words[start:end])
        entry = by_phrase.get(phrase)
        if entry is None:
            by_phrase[phrase] = {
                "surface": " ".join(w.surface for w in words[start:end]),
                "occurrences": [Occurrence(start, end)],
            }
        else:
            entry["occurrences"].append(Occurrence(start, end))
    cands = [
        Candidate(
            phrase_words=phrase,
            surface=entry["surface"],
            occurrences=tuple(sorted(entry["occurrences"])),
        )
        for phrase, entry in by_phrase.items()
    ]
    cands.sort(key=lambda c: (c.first_occurrence_index, c.phrase_words))
    return cands
