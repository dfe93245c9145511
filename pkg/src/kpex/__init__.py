"""Unsupervised keyphrase extraction toolkit.

Core flow: load a corpus, select candidate noun phrases by POS pattern,
embed the document and its per-candidate masked variants, rank candidates
by how much masking them changes the document embedding, and evaluate with
stemmed, deduplicated F1@K.
"""

from .candidates import Candidate, Occurrence, candidate_phrase_length, extract_candidates
from .corpus_io import (
    DatasetSplit,
    Document,
    Word,
    convert_raw_benchmark,
    document_from_text,
    load_jsonl,
    save_jsonl,
)
from .embedder import (
    DocumentEmbedding,
    EmbedderConfig,
    EncoderBackend,
    embed,
    embed_batch,
    load_transformer_backend,
    max_embeddable_words,
    test_bow_backend,
)
from .evalbench import (
    EvalReport,
    diversity,
    f1_at_k,
    recall_by_phrase_length,
    run_benchmark,
)
from .kpebert_data import (
    TripletExample,
    build_triplet_corpus,
    read_triplets,
    sample_absolute,
    sample_relative,
    write_triplets,
)
from .mderank import (
    MaskStrategy,
    RankedKeyphrases,
    SimilarityMeasure,
    build_masked,
    embed_rank,
    mde_rank,
    rank_document,
    top_k,
)
from .porter import stem, stem_phrase
from .pseudo_labelers import PseudoLabelConfig, textrank_score, yake_lite_score
from .tagging import tag_pos_heuristic

__version__ = "0.1.0"

__all__ = [
    "Candidate",
    "DatasetSplit",
    "Document",
    "DocumentEmbedding",
    "EmbedderConfig",
    "EncoderBackend",
    "EvalReport",
    "MaskStrategy",
    "Occurrence",
    "PseudoLabelConfig",
    "RankedKeyphrases",
    "SimilarityMeasure",
    "TripletExample",
    "Word",
    "build_masked",
    "build_triplet_corpus",
    "candidate_phrase_length",
    "convert_raw_benchmark",
    "diversity",
    "document_from_text",
    "embed",
    "embed_batch",
    "embed_rank",
    "extract_candidates",
    "f1_at_k",
    "load_jsonl",
    "load_transformer_backend",
    "max_embeddable_words",
    "mde_rank",
    "rank_document",
    "read_triplets",
    "recall_by_phrase_length",
    "run_benchmark",
    "sample_absolute",
    "sample_relative",
    "save_jsonl",
    "stem",
    "stem_phrase",
    "tag_pos_heuristic",
    "test_bow_backend",
    "textrank_score",
    "top_k",
    "write_triplets",
    "yake_lite_score",
]
