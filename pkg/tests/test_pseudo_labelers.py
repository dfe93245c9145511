import math
import random

import pytest

from conftest import make_doc, random_tagged_doc
from kpex.candidates import extract_candidates
from kpex.pseudo_labelers import (
    PseudoLabelConfig,
    build_cooccurrence_graph,
    pagerank,
    pseudo_label,
    textrank_score,
    yake_lite_score,
    yake_lite_word_scores,
)

CFG = PseudoLabelConfig()


class TestPageRank:
    def test_two_node_edge_splits_evenly(self):
        scores = pagerank({"a": {"b"}, "b": {"a"}}, damping=0.85)
        assert scores["a"] == pytest.approx(0.5)
        assert scores["b"] == pytest.approx(0.5)

    def test_star_hub_matches_closed_form(self):
        adjacency = {"hub": {"l1", "l2", "l3"}, "l1": {"hub"}, "l2": {"hub"}, "l3": {"hub"}}
        d = 0.85
        base = (1 - d) / 4
        hub_expected = base * (1 + 3 * d) / (1 - d * d)
        leaf_expected = base + d * hub_expected / 3
        scores = pagerank(adjacency, damping=d, max_iter=3000, tol=1e-14)
        assert scores["hub"] == pytest.approx(hub_expected, abs=1e-9)
        assert scores["l1"] == pytest.approx(leaf_expected, abs=1e-9)
        assert scores["hub"] > max(scores["l1"], scores["l2"], scores["l3"])

    def test_isolated_node_keeps_teleport_mass(self):
        # fixed point: connected pair converges to 1/3 each, the isolated
        # node to (1-d)/3; normalization divides by the total
        d = 0.85
        scores = pagerank(
            {"a": {"b"}, "b": {"a"}, "c": set()}, damping=d, max_iter=3000, tol=1e-14
        )
        teleport = (1 - d) / 3
        total = 2 / 3 + teleport
        assert scores["c"] == pytest.approx(teleport / total, abs=1e-9)

    def test_sums_to_one_and_positive(self):
        rng = random.Random(21)
        for _ in range(50):
            n = rng.randint(1, 12)
            nodes = [f"n{i}" for i in range(n)]
            adjacency = {v: set() for v in nodes}
            for _ in range(rng.randint(0, 2 * n)):
                a, b = rng.choice(nodes), rng.choice(nodes)
                if a != b:
                    adjacency[a].add(b)
                    adjacency[b].add(a)
            scores = pagerank(adjacency)
            assert abs(sum(scores.values()) - 1.0) < 1e-9
            assert all(v > 0 for v in scores.values())

    def test_insertion_order_invariance(self):
        edges = {"a": {"b", "c"}, "b": {"a"}, "c": {"a", "d"}, "d": {"c"}}
        reversed_order = {k: edges[k] for k in sorted(edges, reverse=True)}
        forward = pagerank(edges)
        backward = pagerank(reversed_order)
        for node in edges:
            assert forward[node] == pytest.approx(backward[node], abs=1e-15)


class TestCooccurrenceGraph:
    def test_window_two_links_adjacent_nominals_only(self):
        doc = make_doc(
            [("alpha", "NN"), ("beta", "NN"), ("of", "IN"), ("gamma", "NN")]
        )
        graph = build_cooccurrence_graph(doc, window=2)
        assert graph["alpha"] == {"beta"}
        assert graph["gamma"] == set()  # "of" occupies the adjacent slot

    def test_distance_counts_original_positions(self):
        doc = make_doc(
            [("alpha", "NN"), ("of", "IN"), ("gamma", "NN")]
        )
        assert build_cooccurrence_graph(doc, window=3)["alpha"] == {"gamma"}

    def test_non_nominal_words_excluded(self):
        doc = make_doc([("run", "VB"), ("fast", "RB")])
        assert build_cooccurrence_graph(doc, window=2) == {}


class TestTextRank:
    def test_no_nominal_words_empty_result(self):
        doc = make_doc([("are", "VBP"), ("presented", "VBN")])
        assert textrank_score(doc, [], CFG).entries == []

    def test_candidate_score_is_sum_of_word_scores(self):
        doc = make_doc(
            [("graph", "NN"), ("ranking", "NN"), ("of", "IN"), ("graph", "NN")]
        )
        cands = extract_candidates(doc)
        ranked = textrank_score(doc, cands, CFG)
        graph = build_cooccurrence_graph(doc, CFG.window)
        word_scores = pagerank(graph, CFG.damping, CFG.max_iter, CFG.tol)
        by_phrase = {e.candidate.phrase: e.score for e in ranked.entries}
        assert by_phrase["graph ranking"] == pytest.approx(
            word_scores["graph"] + word_scores["ranking"]
        )
        assert by_phrase["graph"] == pytest.approx(word_scores["graph"])

    def test_descending_order(self):
        rng = random.Random(22)
        for _ in range(30):
            doc = random_tagged_doc(rng)
            ranked = textrank_score(doc, extract_candidates(doc), CFG)
            scores = [e.score for e in ranked.entries]
            assert scores == sorted(scores, reverse=True)


class TestYakeLite:
    def test_first_word_scores_zero(self):
        doc = make_doc([("alpha", "NN"), ("beta", "NN"), ("gamma", "NN")])
        scores = yake_lite_word_scores(doc)
        assert scores["alpha"] == 0.0

    def test_higher_tf_scores_better_at_equal_position(self):
        low_tf = make_doc([("pad", "NN"), ("w", "NN"), ("q", "NN"), ("r", "NN")])
        high_tf = make_doc([("pad", "NN"), ("w", "NN"), ("w", "NN"), ("w", "NN")])
        assert yake_lite_word_scores(high_tf)["w"] < yake_lite_word_scores(low_tf)["w"]

    def test_full_ranking_matches_formula_recomputation(self):
        tokens = [
            ("alpha", "NN"), ("of", "IN"), ("beta", "NN"), ("beta", "VB"),
            ("gamma", "NN"), ("of", "IN"), ("alpha", "NN"), ("delta", "NN"),
            ("of", "IN"), ("epsilon", "NN"), ("beta", "NN"), ("zeta", "NN"),
        ]
        assert len(tokens) == 12
        doc = make_doc(tokens)
        cands = extract_candidates(doc)
        ranked = yake_lite_score(doc, cands, CFG)

        # independent recomputation of the documented formula
        lowered = [w for w, _ in tokens]
        def word_score(w):
            first = lowered.index(w)
            tf = lowered.count(w)
            return (first / len(lowered)) / (1 + math.log(1 + tf))

        expected = sorted(
            cands,
            key=lambda c: (
                sum(word_score(w) for w in c.phrase_words) / len(c.phrase_words),
                c.first_occurrence_index,
                len(c.phrase_words),
                c.phrase_words,
            ),
        )
        assert [e.candidate.phrase for e in ranked.entries] == [c.phrase for c in expected]

    def test_importance_order_depends_only_on_argsort(self):
        rng = random.Random(23)
        for _ in range(20):
            doc = random_tagged_doc(rng)
            cands = extract_candidates(doc)
            ranked = yake_lite_score(doc, cands, CFG)
            scores = [e.score for e in ranked.entries]
            assert scores == sorted(scores)
            scaled = sorted(s * 7.5 for s in scores)
            assert [s * 7.5 for s in scores] == scaled


class TestPseudoLabel:
    def test_top_n_phrases_returned(self):
        doc = make_doc(
            [("alpha", "NN"), ("of", "IN"), ("beta", "NN"), ("of", "IN"), ("gamma", "NN")]
        )
        cands = extract_candidates(doc)
        labels = pseudo_label(doc, cands, PseudoLabelConfig(method="yake_lite", top_n=2))
        assert len(labels) == 2
        assert labels[0] == "alpha"  # earliest word wins under the formula

    def test_config_validation(self):
        with pytest.raises(ValueError):
            PseudoLabelConfig(method="rake")
        with pytest.raises(ValueError):
            PseudoLabelConfig(top_n=0)
        with pytest.raises(ValueError):
            PseudoLabelConfig(damping=1.0)
