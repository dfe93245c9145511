import json
import random

import pytest

from kpetrain.data import Triplet

KEY_WORDS = [f"key{i}" for i in range(5)]
FILL_WORDS = [f"fill{i}" for i in range(10)]


def synthetic_triplets(n: int, seed: int = 0) -> list[Triplet]:
    """Documents mixing 'key' and 'fill' words; positives mask a key word's
    occurrences, negatives mask a fill word's occurrences."""
    rng = random.Random(seed)
    triplets = []
    for _ in range(n):
        key = rng.choice(KEY_WORDS)
        fill = rng.choice(FILL_WORDS)
        words = [key, fill]
        for _ in range(rng.randint(6, 10)):
            words.append(rng.choice(KEY_WORDS + FILL_WORDS))
        rng.shuffle(words)
        pos_mask = tuple((i, i + 1) for i, w in enumerate(words) if w == key)
        neg_mask = tuple((i, i + 1) for i, w in enumerate(words) if w == fill)
        triplets.append(
            Triplet(words=tuple(words), pos_mask=pos_mask, neg_mask=neg_mask)
        )
    return triplets


def write_triplet_jsonl(triplets, path):
    with open(path, "w", encoding="utf-8") as f:
        for i, t in enumerate(triplets):
            f.write(
                json.dumps(
                    {
                        "doc_id": f"d{i}",
                        "words": list(t.words),
                        "pos_mask": [list(s) for s in t.pos_mask],
                        "neg_mask": [list(s) for s in t.neg_mask],
                        "pos_phrase": t.words[t.pos_mask[0][0]],
                        "neg_phrase": t.words[t.neg_mask[0][0]],
                        "sampling": "absolute",
                        "theta": "synthetic",
                    }
                )
                + "\n"
            )
    return path


@pytest.fixture
def triplet_file(tmp_path):
    return write_triplet_jsonl(synthetic_triplets(20, seed=1), tmp_path / "triplets.jsonl")
