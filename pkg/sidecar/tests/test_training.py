"""Training-script checks: the separable-set smoke fine-tune, consensus
ensemble exports, QA memorization, and similarity separation."""

import time

import numpy as np

from toy_corpus import classifier_records, separable_two_class
from conftest import riot_qa_examples

from eventcoder_sidecar.models import WordTokenizer
from eventcoder_sidecar.training.classifier import (consensus_index,
                                                    train_consensus,
                                                    train_labels)
from eventcoder_sidecar.training.qa import exact_match_rate, train_qa
from eventcoder_sidecar.training.similarity import separation, train_similarity


def test_smoke_finetune_separable_two_class():
    """20 docs per class with disjoint vocabulary: train accuracy > 0.9 well
    inside the ten-minute budget."""
    started = time.perf_counter()
    records = separable_two_class(per_class=20)
    positives = [r["text"] for r in records if "FLARK" in r["labels"]]
    negatives = [r["text"] for r in records if "FLARK" not in r["labels"]]
    tokenizer = WordTokenizer.build([r["text"] for r in records])
    _model, matrix, _chosen, accuracy = train_consensus(
        positives, negatives, tokenizer, epochs=3, ensemble=8)
    elapsed = time.perf_counter() - started
    assert accuracy > 0.9, accuracy
    assert elapsed < 600, elapsed
    print(f"\n[SECONDARY] PASS  smoke fine-tune: train accuracy {accuracy:.3f} "
          f"in {elapsed:.1f}s")


def test_consensus_matrix_shape_and_choice():
    records = separable_two_class(per_class=8)
    positives = [r["text"] for r in records if "FLARK" in r["labels"]]
    negatives = [r["text"] for r in records if "FLARK" not in r["labels"]]
    tokenizer = WordTokenizer.build([r["text"] for r in records])
    _model, matrix, chosen, _acc = train_consensus(
        positives, negatives, tokenizer, epochs=2, ensemble=4)
    assert matrix.shape[0] == 4
    assert 0 <= chosen < 4
    assert chosen == consensus_index(matrix)


def test_train_labels_exports_registry_layout(tmp_path):
    records = classifier_records(per_label=8)
    summary = train_labels(records, ["PROTEST", "CONSULT"], tmp_path,
                           epochs=2, ensemble=2)
    assert (tmp_path / "vocab.json").exists()
    for label in ("PROTEST", "CONSULT"):
        assert (tmp_path / f"{label}.pt").exists()
        exported = np.loadtxt(tmp_path / f"{label}.assignments.tsv", ndmin=2)
        assert exported.shape[0] == 2
        assert summary[label]["consensus_index"] in (0, 1)


def test_qa_training_memorizes_annotations():
    examples = riot_qa_examples()
    model, tokenizer = train_qa(examples, epochs=120)
    assert exact_match_rate(model, tokenizer, examples) == 1.0


def test_similarity_training_separates_pairs():
    pairs = [
        ("Joseph Biden", "Joe Biden", 1),
        ("Joe Biden Jr.", "Joe Biden", 1),
        ("Barry Obama", "Barack Obama", 1),
        ("President Obama", "Barack Obama", 1),
        ("Joseph Biden", "Jill Biden", -1),
        ("Joseph Biden", "Hunter Biden", -1),
        ("Barry Obama", "Michelle Obama", -1),
        ("President Obama", "Michelle Obama", -1),
    ] * 4
    model, tokenizer = train_similarity(pairs, epochs=40)
    gap = separation(model, tokenizer, pairs)
    assert gap > 0.1, gap
