import pytest
import torch

from conftest import synthetic_triplets
from kpetrain.config import TrainConfig
from kpetrain.data import build_vocab, load_triplets, make_batch
from kpetrain.train import train

TOY = TrainConfig(
    learning_rate=5e-3,
    epochs=5,
    hidden_size=64,
    num_layers=2,
    max_pieces=32,
    seed=7,
)


class TestDataPipeline:
    def test_load_triplets_round_trip(self, triplet_file):
        triplets = load_triplets(triplet_file)
        assert len(triplets) == 20
        assert all(t.pos_mask and t.neg_mask for t in triplets)

    def test_masked_variants_preserve_length(self):
        triplets = synthetic_triplets(10, seed=3)
        vocab = build_vocab(triplets)
        import random

        batch = make_batch(triplets[:4], vocab, 32, 0.15, random.Random(0))
        assert batch.anchor.shape == batch.positive.shape == batch.negative.shape

    def test_mlm_labels_only_at_masked_positions(self):
        triplets = synthetic_triplets(6, seed=4)
        vocab = build_vocab(triplets)
        import random

        batch = make_batch(triplets, vocab, 32, 0.15, random.Random(1))
        changed = batch.mlm_input != batch.anchor
        labelled = batch.mlm_labels != -100
        # every altered position is labelled; labelled-but-unchanged
        # positions are the kept-or-replaced 20% of the 80/10/10 policy
        assert bool(torch.all(labelled[changed]))
        assert int(labelled.sum()) >= batch.anchor.shape[0]


class TestTrainingRun:
    def test_triplet_loss_halves_on_synthetic_corpus(self):
        triplets = synthetic_triplets(100, seed=11)
        result = train(triplets, TOY)
        assert len(result.step_triplet_losses) >= 50
        first = result.mean_triplet_loss(0, 10)
        last = result.mean_triplet_loss(-10, None)
        assert last < 0.5 * first, (first, last)

    def test_seeded_run_is_deterministic(self):
        triplets = synthetic_triplets(24, seed=12)
        cfg = TrainConfig(
            learning_rate=5e-3, epochs=2, hidden_size=32, num_layers=1,
            num_heads=4, max_pieces=32, seed=5,
        )
        a = train(triplets, cfg)
        b = train(triplets, cfg)
        assert a.step_triplet_losses == b.step_triplet_losses

    def test_mlm_on_all_documents_toggle(self):
        triplets = synthetic_triplets(12, seed=16)
        base = TrainConfig(
            learning_rate=1e-3, epochs=1, hidden_size=32, num_layers=1,
            num_heads=4, max_pieces=32, seed=9,
        )
        from dataclasses import replace
        anchor_only = train(triplets, base)
        all_docs = train(triplets, replace(base, mlm_on_all_documents=True))
        # both run to completion; widening MLM changes the optimization path
        assert len(all_docs.step_total_losses) == len(anchor_only.step_total_losses)
        assert all_docs.step_total_losses != anchor_only.step_total_losses

    def test_config_validation(self):
        with pytest.raises(ValueError):
            TrainConfig(margin=-1.0)
        with pytest.raises(ValueError):
            TrainConfig(mlm_probability=1.5)
        with pytest.raises(ValueError):
            TrainConfig(hidden_size=30, num_heads=4)
