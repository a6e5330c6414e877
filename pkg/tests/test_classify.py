import math
import random

import numpy as np
import pytest

from eventcoder.backends import LexiconClassifier
from eventcoder.classify import (CalibrationTable, KeywordFilter, Namespace,
                                 ScorerSet, apply_threshold, calibrate,
                                 keyword_postfilter, nearest_rank,
                                 select_consensus_model, select_uncertain,
                                 score_labels)
from eventcoder.model import ScoredLabel


def sl(label, score, positive=True):
    return ScoredLabel(label=label, score=score, positive=positive)


# --- scoring ---------------------------------------------------------------------


def test_score_labels_baseline_protest():
    backend = LexiconClassifier({"PROTEST": ["demonstration", "riot"]})
    scorers = ScorerSet(Namespace.CATEGORY, ("PROTEST",), backend)
    out = score_labels("A demonstration filled the square.", scorers)
    assert len(out) == 1
    assert out[0].score > 0.5 and out[0].positive


def test_score_labels_empty_label_list():
    backend = LexiconClassifier({})
    scorers = ScorerSet(Namespace.CATEGORY, (), backend)
    assert score_labels("anything", scorers) == []


def test_score_labels_no_hits_negative():
    backend = LexiconClassifier({"PROTEST": ["riot"]})
    scorers = ScorerSet(Namespace.CATEGORY, ("PROTEST",), backend)
    out = score_labels("Officials met for talks.", scorers)
    assert not out[0].positive and out[0].score < 0.5


# --- calibration -------------------------------------------------------------------


def brute_nearest_rank(scores, pct):
    """Independent oracle: smallest value with rank >= ceil(p/100 * n)."""
    ordered = sorted(scores)
    rank = math.ceil(pct / 100.0 * len(ordered))
    rank = min(max(rank, 1), len(ordered))
    return ordered[rank - 1]


def test_percentile_100_score_fixture():
    scores = [round(0.01 * i, 2) for i in range(1, 101)]
    table = calibrate({"X": scores}, percentile=90.0)
    assert table.entries["X"].cutoff == 0.90
    assert table.entries["X"].sample_size == 100


def test_single_score_degenerate():
    table = calibrate({"X": [0.42]}, percentile=90.0, min_sample=1)
    assert table.entries["X"].cutoff == 0.42
    table = calibrate({"X": [0.42]}, percentile=5.0, min_sample=1)
    assert table.entries["X"].cutoff == 0.42


def test_nearest_rank_matches_oracle():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 60)
        scores = [rng.random() for _ in range(n)]
        pct = rng.choice([10, 25, 50, 75, 90, 95, 99, 100])
        assert nearest_rank(sorted(scores), pct) == brute_nearest_rank(scores, pct)


def test_retained_fraction_at_most_10pct_plus_ties():
    rng = random.Random(11)
    for _ in range(100):
        scores = [rng.random() for _ in range(rng.randint(10, 200))]
        table = calibrate({"X": scores}, percentile=90.0, min_sample=1)
        cutoff = table.entries["X"].cutoff
        strictly_above = sum(s > cutoff for s in scores)
        assert strictly_above <= 0.10 * len(scores)


def test_threshold_monotone_in_percentile():
    rng = random.Random(23)
    for _ in range(100):
        scores = [rng.random() for _ in range(50)]
        labels = [sl("X", s) for s in scores]
        kept = {}
        for pct in (50, 75, 90, 95, 99):
            table = calibrate({"X": scores}, percentile=pct, min_sample=1)
            kept[pct] = len(apply_threshold(labels, table))
        assert kept[50] >= kept[75] >= kept[90] >= kept[95] >= kept[99]


def test_insufficient_sample_flagged():
    table = calibrate({"X": [0.5, 0.6]}, percentile=90, min_sample=10)
    assert "X" in table.uncalibrated
    assert table.cutoff_for("X") is None


def test_apply_threshold_keeps_and_drops():
    table = calibrate({"X": [0.1 * i for i in range(1, 11)]}, percentile=90, min_sample=1)
    assert table.entries["X"].cutoff == pytest.approx(0.9)
    kept = apply_threshold([sl("X", 0.95), sl("X", 0.89)], table)
    assert [k.score for k in kept] == [0.95]


def test_apply_threshold_uncalibrated_falls_back_to_boundary():
    table = CalibrationTable(entries={}, uncalibrated=frozenset({"X"}))
    kept = apply_threshold([sl("X", 0.2, positive=True), sl("Y", 0.9, positive=False)], table)
    assert [k.label for k in kept] == ["X"]


def test_apply_threshold_output_is_subset():
    rng = random.Random(3)
    scores = [rng.random() for _ in range(40)]
    labels = [sl("X", s) for s in scores]
    table = calibrate({"X": scores}, percentile=80, min_sample=1)
    kept = apply_threshold(labels, table)
    assert set(k.score for k in kept) <= set(scores)


def test_calibration_table_round_trip():
    table = calibrate({"A": [0.1, 0.5, 0.9] * 5, "B": [0.3] * 12}, percentile=90)
    again = CalibrationTable.from_yaml(table.to_yaml())
    assert again == table


# --- keyword post-filter -------------------------------------------------------------

KF_TEXT = """
[military]
troops
armed forces

[gender]
women
gender
"""


def test_keyword_filter_retains_supported_label():
    kf = KeywordFilter.from_text(KF_TEXT)
    labels = [sl("military", 0.9)]
    assert keyword_postfilter(labels, "Troops entered the city.", kf) == labels


def test_keyword_filter_drops_unsupported_label():
    kf = KeywordFilter.from_text(KF_TEXT)
    labels = [sl("gender", 0.9)]
    assert keyword_postfilter(labels, "Troops entered the city.", kf) == []


def test_keyword_filter_passthrough_without_list():
    kf = KeywordFilter.from_text(KF_TEXT)
    labels = [sl("economic", 0.9)]
    assert keyword_postfilter(labels, "anything at all", kf) == labels


def test_keyword_filter_token_boundaries():
    kf = KeywordFilter({"military": ["arms"]})
    assert keyword_postfilter([sl("military", 1.0)], "farms in the valley", kf) == []
    assert keyword_postfilter([sl("military", 1.0)], "arms shipments", kf) != []


def test_keyword_filter_never_adds():
    kf = KeywordFilter.from_text(KF_TEXT)
    labels = [sl("military", 0.9), sl("gender", 0.8)]
    out = keyword_postfilter(labels, "women and troops", kf)
    assert set(o.label for o in out) <= set(l.label for l in labels)


def test_keyword_filter_empty_list_rejected():
    with pytest.raises(ValueError):
        KeywordFilter({"x": []})


# --- consensus model selection -------------------------------------------------------


def brute_force_consensus(matrix: np.ndarray) -> int:
    k = matrix.shape[0]
    majority = [(2 * int(matrix[:, j].sum()) >= k) for j in range(matrix.shape[1])]
    best_idx, best_dist = 0, None
    for i in range(k):
        dist = sum(int(matrix[i, j]) != majority[j] for j in range(matrix.shape[1]))
        if best_dist is None or dist < best_dist:
            best_idx, best_dist = i, dist
    return best_idx


def test_consensus_single_model():
    assert select_consensus_model(np.array([[1, 0, 1]])) == 0


def test_consensus_worked_example():
    matrix = np.array([[1, 1, 0], [1, 0, 0], [0, 1, 1]])
    # majority vote is [1, 1, 0]; row 0 matches it exactly
    assert select_consensus_model(matrix) == 0


def test_consensus_majority_tie_breaks_positive():
    matrix = np.array([[1, 1], [0, 0]])  # column sums k/2: majority -> positive
    assert select_consensus_model(matrix) == 0


def test_consensus_model_tie_breaks_lowest_index():
    matrix = np.array([[1, 0], [1, 0], [0, 1]])
    assert select_consensus_model(matrix) == 0


def test_consensus_matches_brute_force():
    rng = np.random.default_rng(42)
    for _ in range(300):
        k = int(rng.integers(1, 9))
        n = int(rng.integers(1, 13))
        matrix = rng.integers(0, 2, size=(k, n))
        assert select_consensus_model(matrix) == brute_force_consensus(matrix)


def test_consensus_rejects_empty():
    with pytest.raises(ValueError):
        select_consensus_model(np.zeros((0, 3)))


# --- uncertainty selection -----------------------------------------------------------


def test_select_uncertain_worked_example():
    by_doc = {"a": sl("X", 0.49), "b": sl("X", 0.91), "c": sl("X", 0.52)}
    assert select_uncertain(by_doc, 2, cutoff=0.5) == ["a", "c"]


def test_select_uncertain_zero():
    assert select_uncertain({"a": sl("X", 0.4)}, 0) == []


def test_select_uncertain_all_equal_stable_order():
    by_doc = {f"doc-{i}": sl("X", 0.7) for i in (3, 1, 2, 5, 4)}
    assert select_uncertain(by_doc, 3, cutoff=0.5) == ["doc-1", "doc-2", "doc-3"]


def test_select_uncertain_n_exceeds_available():
    by_doc = {"a": sl("X", 0.1), "b": sl("X", 0.45)}
    assert select_uncertain(by_doc, 10, cutoff=0.5) == ["b", "a"]


def test_select_uncertain_matches_sort_oracle():
    rng = random.Random(5)
    by_doc = {f"d{i:02d}": sl("X", rng.random()) for i in range(30)}
    expected = sorted(by_doc, key=lambda d: (abs(by_doc[d].score - 0.5), d))[:10]
    assert select_uncertain(by_doc, 10, cutoff=0.5) == expected
