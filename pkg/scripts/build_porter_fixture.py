#!/usr/bin/env python3
"""Freeze the 1000-word stemmer fixture at tests/data/porter_fixture.tsv.

Words are drawn from the bundled tag lexicon plus suffix-heavy additions;
expected stems come from the independent table-driven oracle in
tests/porter_oracle.py and are cross-checked against the library
implementation before writing.
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tests"))

from kpex.porter import stem  # noqa: E402
from porter_oracle import oracle_stem  # noqa: E402

EXTRA = """
caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing
filing happy sky relational conditional rational valenci hesitanci
digitizer conformabli radicalli differentli vileli analogousli
vietnamization predication operator feudalism decisiveness hopefulness
callousness formaliti sensitiviti sensibiliti triplicate formative
formalize electriciti electrical hopeful goodness revival allowance
inference airliner gyroscopic adjustable defensible irritant replacement
adjustment dependent adoption homologou communism activate angulariti
homologous effective bowdlerize probate rate cease controll roll
generalizations oscillators itemsets interestingness networks embeddings
keyphrases similarities documents extraction unsupervised contrastive
pretraining benchmarks tokenization vocabulary stemming evaluation
diversity precision recall baselines candidates occurrences
""".split()


def main() -> None:
    lexicon_words = [
        line.split("\t")[0]
        for line in (ROOT / "src" / "kpex" / "data" / "tag_lexicon.tsv")
        .read_text("utf-8")
        .splitlines()
    ]
    words: list[str] = []
    seen = set()
    for w in EXTRA + lexicon_words:
        if w.isalpha() and w not in seen:
            seen.add(w)
            words.append(w)
        if len(words) == 1000:
            break

    mismatches = [(w, stem(w), oracle_stem(w)) for w in words if stem(w) != oracle_stem(w)]
    if mismatches:
        for w, got, want in mismatches[:20]:
            print(f"MISMATCH {w}: impl={got} oracle={want}")
        raise SystemExit(f"{len(mismatches)} implementation/oracle mismatches")

    non_idempotent = [w for w in words if oracle_stem(oracle_stem(w)) != oracle_stem(w)]
    if non_idempotent:
        print(f"note: {len(non_idempotent)} words are not idempotent under the "
              f"algorithm itself: {non_idempotent[:10]}")

    out = ROOT / "tests" / "data" / "porter_fixture.tsv"
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", encoding="utf-8") as f:
        for w in words:
            f.write(f"{w}\t{oracle_stem(w)}\n")
    print(f"wrote {len(words)} fixture rows to {out}")


if __name__ == "__main__":
    main()
