"""Heuristic POS tagging fallback for untagged input.

Lookup order: numeral/punctuation detection, bundled frequent-word lexicon,
suffix rules (-ly -> RB; -tion/-ment/-ness -> NN; -al/-ive/-ous -> JJ;
-s after a noun base -> NNS), default NN. Deterministic and total.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

_NUMERIC_CHARS = set("0123456789.,-+%/")


@lru_cache(maxsize=1)
def _lexicon() -> dict[str, str]:
    text = resources.files("kpex.data").joinpath("tag_lexicon.tsv").read_text("utf-8")
    entries = {}
    for line in text.splitlines():
        word, tag = line.split("\t")
        entries[word] = tag
    return entries


def _suffix_tag(word: str) -> str | None:
    if word.endswith("ly"):
        return "RB"
    if word.endswith(("tion", "ment", "ness")):
        return "NN"
    if word.endswith(("al", "ive", "ous")):
        return "JJ"
    return None


def tag_word(word: str) -> str:
    """Tag a single word; lowercases for lookup."""
    w = word.lower()
    if not any(c.isalnum() for c in w):
        return "SYM"
    if any(c.isdigit() for c in w) and all(c in _NUMERIC_CHARS for c in w):
        return "CD"
    lex = _lexicon()
    tag = lex.get(w)
    if tag is not None:
        return tag
    tag = _suffix_tag(w)
    if tag is not None:
        return tag
    # plural of a noun base (lexicon noun, noun-suffix noun, or default-NN base)
    if len(w) > 3 and w.endswith("s") and not w.endswith("ss"):
        bases = [w[:-1]]
        if w.endswith("es"):
            bases.append(w[:-2])
        if w.endswith("ies"):
            bases.append(w[:-3] + "y")
        for base in bases:
            known = lex.get(base) or _suffix_tag(base)
            if known is not None:
                return "NNS" if known.startswith("NN") else "NN"
        return "NNS"
    return "NN"


def tag_pos_heuristic(words: list[str]) -> list[str]:
    """Deterministically tag a non-empty word sequence."""
    if not words:
        raise ValueError("cannot tag an empty word sequence")
    return [tag_word(w) for w in words]
