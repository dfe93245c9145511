import json
import random

import numpy as np
import pytest

from bruteforce_oracle import hash_vec
from kpex.embedder import (
    EmbedderConfig,
    EmbedderError,
    EncoderBackend,
    bow_hash_vector,
    embed,
    embed_batch,
    fnv1a64,
    load_transformer_backend,
    max_embeddable_words,
)
from kpex.embedder import test_bow_backend as bow_backend

torch = pytest.importorskip("torch")
from toy_model import DEFAULT_VOCAB, build_multiplier_model_dir, expected_hidden  # noqa: E402

BOW = EmbedderConfig(backend="test_bow", pooling="avg", layer=1)


class TestHashConstruction:
    def test_matches_independent_recomputation(self):
        for word in ["alpha", "beta", "Gamma", "wait-free", "x"]:
            np.testing.assert_array_equal(
                bow_hash_vector(word.lower()), np.array(hash_vec(word.lower()))
            )

    def test_unit_norm(self):
        for word in ["alpha", "beta", "gamma", "delta"]:
            assert np.linalg.norm(bow_hash_vector(word)) == 1.0

    def test_fnv_known_value(self):
        # FNV-1a 64 of empty input is the offset basis
        assert fnv1a64(b"") == 14695981039346656037

    def test_mask_placeholder_is_zero(self):
        backend = bow_backend()
        states = backend.hidden_states([["[MASK]"]], layer=1)
        np.testing.assert_array_equal(states[0, 0], np.zeros(32))


class TestTestBowEmbedding:
    def test_deterministic(self):
        words = ["alpha", "beta", "gamma"]
        a = embed(words, [False] * 3, BOW)
        b = embed(words, [False] * 3, BOW)
        np.testing.assert_array_equal(a.vector, b.vector)

    def test_max_pooling_is_elementwise_max(self):
        cfg = EmbedderConfig(backend="test_bow", pooling="max", layer=1)
        got = embed(["a", "b"], [False, False], cfg).vector
        want = np.maximum(bow_hash_vector("a"), bow_hash_vector("b"))
        np.testing.assert_array_equal(got, want)

    def test_avg_of_repeated_word_is_its_hash(self):
        got = embed(["x", "x"], [False, False], BOW).vector
        np.testing.assert_allclose(got, bow_hash_vector("x"), atol=1e-15)

    def test_masking_one_of_three_shifts_avg_by_third(self):
        words = ["alpha", "beta", "gamma"]
        full = embed(words, [False, False, False], BOW).vector
        masked = embed(words, [False, False, True], BOW).vector
        np.testing.assert_allclose(full - masked, bow_hash_vector("gamma") / 3, atol=1e-15)

    def test_masking_all_equals_all_mask_sequence(self):
        words = ["alpha", "beta"]
        a = embed(words, [True, True], BOW)
        b = embed(["[MASK]", "[MASK]"], [True, True], BOW)
        np.testing.assert_array_equal(a.vector, b.vector)
        assert a.piece_count == b.piece_count

    def test_length_preservation(self):
        rng = random.Random(3)
        for _ in range(50):
            words = [rng.choice(["a", "bb", "ccc"]) for _ in range(rng.randint(1, 9))]
            flags = [rng.random() < 0.5 for _ in words]
            masked = embed(words, flags, BOW)
            unmasked = embed(words, [False] * len(words), BOW)
            assert masked.piece_count == unmasked.piece_count

    def test_truncation_ignores_later_words(self):
        cfg = EmbedderConfig(backend="test_bow", pooling="avg", layer=1, max_pieces=16)
        head = ["w%d" % i for i in range(16)]
        a = embed(head + ["tailA"], [False] * 17, cfg)
        b = embed(head + ["tailB"], [False] * 17, cfg)
        np.testing.assert_array_equal(a.vector, b.vector)

    def test_empty_words_rejected(self):
        with pytest.raises(EmbedderError):
            embed([], [], BOW)

    def test_flag_length_mismatch_rejected(self):
        with pytest.raises(EmbedderError):
            embed(["a"], [False, True], BOW)


class StubConstantBackend(EncoderBackend):
    """Hidden states are fixed constants for exact pooling arithmetic."""

    num_layers = 1
    hidden_size = 2
    mask_piece = "[MASK]"
    reserved_pieces = 0
    max_pieces_limit = None

    CONSTANTS = {"p": [1.0, -2.0], "q": [3.0, 0.5], "r": [-1.0, 4.0], "[MASK]": [0.0, 0.0]}

    def word_pieces(self, word):
        return [word]

    def hidden_states(self, batch, layer):
        return np.array([[self.CONSTANTS[p] for p in row] for row in batch], dtype=float)


class TestPoolingCorrectness:
    def test_max_and_avg_match_hand_computation(self):
        backend = StubConstantBackend()
        words = ["p", "q", "r"]
        got_max = embed(
            words, [False] * 3, EmbedderConfig(pooling="max", layer=1), backend
        ).vector
        np.testing.assert_array_equal(got_max, [3.0, 4.0])
        got_avg = embed(
            words, [False] * 3, EmbedderConfig(pooling="avg", layer=1), backend
        ).vector
        np.testing.assert_allclose(got_avg, [1.0, 2.5 / 3])


class TestMaskPieceConfig:
    def test_configured_mask_piece_is_zero_vector(self):
        cfg = EmbedderConfig(backend="test_bow", pooling="avg", layer=1, mask_piece="<m>")
        got = embed(["alpha", "beta"], [False, True], cfg).vector
        np.testing.assert_allclose(got, bow_hash_vector("alpha") / 2, atol=1e-15)
        # the placeholder word itself hashes to zero only when masked
        literal = embed(["<m>"], [False], cfg).vector
        np.testing.assert_array_equal(literal, np.zeros(32))


class TestConfigValidation:
    def test_unknown_backend(self):
        with pytest.raises(EmbedderError):
            EmbedderConfig(backend="word2vec")

    def test_unknown_pooling(self):
        with pytest.raises(EmbedderError):
            EmbedderConfig(pooling="median")

    def test_max_pieces_floor(self):
        with pytest.raises(EmbedderError):
            EmbedderConfig(max_pieces=8)

    def test_layer_out_of_range(self):
        cfg = EmbedderConfig(backend="test_bow", layer=13)
        with pytest.raises(EmbedderError, match="layer 13"):
            embed(["a"], [False], cfg)


@pytest.fixture(scope="module")
def model_dir(tmp_path_factory):
    return build_multiplier_model_dir(tmp_path_factory.mktemp("toy-model"))


class TestTransformerBackend:
    def test_load_exposes_dimensions(self, model_dir):
        backend = load_transformer_backend(model_dir)
        assert backend.num_layers == 3
        assert backend.hidden_size == 4

    def test_twelve_layer_export(self, tmp_path):
        d = build_multiplier_model_dir(tmp_path / "base12", num_layers=12, hidden=768)
        backend = load_transformer_backend(d)
        assert backend.num_layers == 12
        assert backend.hidden_size == 768
        cfg = EmbedderConfig(backend="transformer_model", model_path=str(d), layer=3)
        emb = embed(["net", "x"], [False, False], cfg, backend)
        assert emb.vector.shape == (768,)

    def test_nonexistent_path_rejected(self, tmp_path):
        with pytest.raises(EmbedderError, match="not found"):
            load_transformer_backend(tmp_path / "missing")

    def test_corrupt_manifest_rejected(self, model_dir, tmp_path):
        import shutil

        broken = tmp_path / "broken"
        shutil.copytree(model_dir, broken)
        (broken / "manifest.json").write_text("{not json", encoding="utf-8")
        with pytest.raises(EmbedderError, match="manifest"):
            load_transformer_backend(broken)

    def test_manifest_dimension_mismatch_rejected(self, model_dir, tmp_path):
        import shutil

        broken = tmp_path / "mismatch"
        shutil.copytree(model_dir, broken)
        manifest = json.loads((broken / "manifest.json").read_text("utf-8"))
        manifest["hidden_size"] = 99
        (broken / "manifest.json").write_text(json.dumps(manifest), encoding="utf-8")
        with pytest.raises(EmbedderError, match="does not match manifest"):
            load_transformer_backend(broken)

    def test_vocab_missing_mask_rejected(self, model_dir, tmp_path):
        import shutil

        broken = tmp_path / "nomask"
        shutil.copytree(model_dir, broken)
        pieces = [p for p in DEFAULT_VOCAB if p != "[MASK]"]
        (broken / "vocab.txt").write_text("\n".join(pieces) + "\n", encoding="utf-8")
        with pytest.raises(EmbedderError, match="MASK"):
            load_transformer_backend(broken)

    def test_layer_selection_scales_states(self, model_dir):
        backend = load_transformer_backend(model_dir)
        one = backend.hidden_states([["net", "x"]], layer=1)
        two = backend.hidden_states([["net", "x"]], layer=2)
        np.testing.assert_allclose(two, 2 * one, rtol=1e-6)

    def test_hidden_states_match_hand_computation(self, model_dir):
        backend = load_transformer_backend(model_dir)
        states = backend.hidden_states([["net", "##work"]], layer=2)
        net_id = DEFAULT_VOCAB.index("net")
        for d in range(4):
            assert states[0, 0, d] == pytest.approx(expected_hidden(net_id, 2, d), rel=1e-6)

    def test_wordpiece_expansion_and_mask_length(self, model_dir):
        backend = load_transformer_backend(model_dir)
        assert backend.word_pieces("network") == ["net", "##work"]
        cfg = EmbedderConfig(backend="transformer_model", model_path=str(model_dir), layer=1)
        masked = embed(["network", "deep"], [True, False], cfg, backend)
        unmasked = embed(["network", "deep"], [False, False], cfg, backend)
        assert masked.piece_count == unmasked.piece_count == 2 + 2 + 1  # pieces + CLS/SEP

    def test_word_level_mask_toggle_collapses_pieces(self, model_dir):
        backend = load_transformer_backend(model_dir)
        cfg = EmbedderConfig(
            backend="transformer_model",
            model_path=str(model_dir),
            layer=1,
            mask_word_level=True,
        )
        masked = embed(["network", "deep"], [True, False], cfg, backend)
        assert masked.piece_count == 1 + 1 + 2  # one mask, one word piece, CLS/SEP

    def test_unknown_word_maps_to_unk(self, model_dir):
        backend = load_transformer_backend(model_dir)
        assert backend.word_pieces("zzzunknownzzz") == ["[UNK]"]


class TestWindowFitting:
    def test_max_embeddable_words_counts_pieces(self, tmp_path):
        d = build_multiplier_model_dir(tmp_path / "win", max_pieces=64)
        backend = load_transformer_backend(d)
        cfg = EmbedderConfig(
            backend="transformer_model", model_path=str(d), layer=1, max_pieces=16
        )
        # budget = 16 - 2 specials = 14 content pieces; "network" costs 2
        words = ["network"] * 10
        assert max_embeddable_words(words, cfg, backend) == 7

    def test_all_words_fit_when_short(self):
        assert max_embeddable_words(["a", "b"], BOW) == 2


class TestBatching:
    def test_batch_matches_single_calls(self, tmp_path):
        d = build_multiplier_model_dir(tmp_path / "batch")
        backend = load_transformer_backend(d)
        cfg = EmbedderConfig(backend="transformer_model", model_path=str(d), layer=2)
        words = ["net", "deep", "model", "x", "y", "z", "net", "deep", "model", "x"]
        flag_sets = [[i == j for i in range(len(words))] for j in range(len(words))]
        batched = embed_batch(words, flag_sets, cfg, backend)
        for flags, emb in zip(flag_sets, batched):
            single = embed(words, flags, cfg, backend)
            np.testing.assert_allclose(emb.vector, single.vector, rtol=1e-6)
