import random

import pytest

from kpex.corpus_io import Document, Word


def make_doc(tokens, doc_id="doc", gold=None):
    """Document from (surface, tag) pairs with synthetic 1-space spans."""
    words = []
    cursor = 0
    for surface, tag in tokens:
        words.append(Word(surface, tag, cursor, cursor + len(surface)))
        cursor += len(surface) + 1
    raw = " ".join(s for s, _ in tokens)
    return Document(id=doc_id, words=tuple(words), raw_text=raw,
                    gold_keyphrases=tuple(gold) if gold is not None else None)


VOCAB = [
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta",
    "iota", "kappa", "lam", "mu",
]
TAGS = ["NN", "NNS", "JJ", "VB", "IN", "DT", "RB"]


def random_tagged_doc(rng: random.Random, doc_id="rand", min_words=3, max_words=20):
    """Random short document biased toward nominal tags and repeated words."""
    n = rng.randint(min_words, max_words)
    tokens = []
    for _ in range(n):
        word = rng.choice(VOCAB)
        tag = rng.choice(TAGS + ["NN", "NNS", "JJ"])  # nominal-heavy
        tokens.append((word, tag))
    return make_doc(tokens, doc_id=doc_id)


@pytest.fixture
def doc_factory():
    return make_doc
