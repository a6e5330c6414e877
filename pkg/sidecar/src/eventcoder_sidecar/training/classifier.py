"""Per-label binary classifier training.

The recipe: balance positives and negatives 1:1, fine-tune for a few epochs
with default optimizer settings, fit an ensemble of 8 models on different
shuffles, then keep the single "consensus" member whose test-set decisions
sit closest (Hamming distance) to the ensemble majority vote.  The per-model
decision matrix is exported alongside the chosen model so the selection is
auditable downstream.

CLI:
    python -m eventcoder_sidecar.training.classifier \
        --train train.jsonl --label PROTEST --out models/classify
with train.jsonl lines like {"text": ..., "labels": ["PROTEST", ...]}.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
from pathlib import Path

import numpy as np
import torch
from torch import nn

from ..models import MAX_LEN, PAD, TinyClassifier, WordTokenizer, save_model, set_determinism

logger = logging.getLogger(__name__)

DEFAULT_EPOCHS = 3
DEFAULT_BATCH = 8
ENSEMBLE_SIZE = 8
EVAL_FRACTION = 0.25


def balance(positives: list[str], negatives: list[str], rng: random.Random) -> list[tuple[str, int]]:
    """1:1 positive:negative, downsampling the majority side."""
    n = min(len(positives), len(negatives))
    pos = rng.sample(positives, n)
    neg = rng.sample(negatives, n)
    data = [(t, 1) for t in pos] + [(t, 0) for t in neg]
    rng.shuffle(data)
    return data


def _batches(data, tokenizer, batch_size):
    for i in range(0, len(data), batch_size):
        chunk = data[i:i + batch_size]
        encoded = [tokenizer.encode(t)[:MAX_LEN] or [1] for t, _ in chunk]
        width = max(len(e) for e in encoded)
        ids = torch.tensor([e + [PAD] * (width - len(e)) for e in encoded])
        labels = torch.tensor([float(y) for _, y in chunk])
        yield ids, labels


def fit_binary(
    positives: list[str],
    negatives: list[str],
    tokenizer: WordTokenizer,
    seed: int = 0,
    epochs: int = DEFAULT_EPOCHS,
    lr: float = 1e-3,
) -> TinyClassifier:
    """Train one binary model on a balanced sample."""
    set_determinism(seed)
    rng = random.Random(seed)
    data = balance(positives, negatives, rng)
    model = TinyClassifier(len(tokenizer.vocab))
    optimizer = torch.optim.Adam(model.parameters(), lr=lr)
    loss_fn = nn.BCEWithLogitsLoss()
    model.train()
    for _epoch in range(epochs):
        for ids, labels in _batches(data, tokenizer, DEFAULT_BATCH):
            optimizer.zero_grad()
            loss = loss_fn(model(ids), labels)
            loss.backward()
            optimizer.step()
    return model


def decisions(model: TinyClassifier, tokenizer: WordTokenizer,
              texts: list[str]) -> np.ndarray:
    return np.array([int(model.score(tokenizer, t) > 0.5) for t in texts])


def consensus_index(matrix: np.ndarray) -> int:
    """Ensemble member closest to the majority vote (ties toward positive,
    then toward the lowest index)."""
    k = matrix.shape[0]
    majority = (2 * matrix.sum(axis=0) >= k).astype(matrix.dtype)
    return int(np.argmin((matrix != majority).sum(axis=1)))


def train_consensus(
    positives: list[str],
    negatives: list[str],
    tokenizer: WordTokenizer,
    epochs: int = DEFAULT_EPOCHS,
    ensemble: int = ENSEMBLE_SIZE,
    seed: int = 0,
) -> tuple[TinyClassifier, np.ndarray, int, float]:
    """Fit the ensemble and pick the consensus model.

    Returns (model, k x n decision matrix, chosen index, train accuracy of
    the chosen model on the balanced training pool).
    """
    rng = random.Random(seed)
    eval_n = max(2, int(EVAL_FRACTION * (len(positives) + len(negatives))))
    eval_texts = ([t for t in positives[:eval_n // 2]]
                  + [t for t in negatives[:eval_n // 2]])
    models = [
        fit_binary(positives, negatives, tokenizer, seed=seed + i, epochs=epochs)
        for i in range(ensemble)
    ]
    matrix = np.stack([decisions(m, tokenizer, eval_texts) for m in models])
    chosen = consensus_index(matrix)
    model = models[chosen]
    pool = [(t, 1) for t in positives] + [(t, 0) for t in negatives]
    correct = sum(int(model.score(tokenizer, t) > 0.5) == y for t, y in pool)
    accuracy = correct / len(pool)
    logger.info("consensus model %d/%d, train accuracy %.3f", chosen, ensemble, accuracy)
    return model, matrix, chosen, accuracy


def train_labels(
    records: list[dict],
    labels: list[str],
    out_dir: Path,
    epochs: int = DEFAULT_EPOCHS,
    ensemble: int = ENSEMBLE_SIZE,
    version: str = "tiny-0.1",
) -> dict:
    """Train one consensus model per label and write the registry layout."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    tokenizer = WordTokenizer.build([r["text"] for r in records])
    tokenizer.save(out_dir / "vocab.json")
    summary = {}
    for label in labels:
        positives = [r["text"] for r in records if label in r.get("labels", [])]
        negatives = [r["text"] for r in records if label not in r.get("labels", [])]
        if not positives or not negatives:
            logger.warning("label %s lacks positives or negatives; skipped", label)
            continue
        model, matrix, chosen, accuracy = train_consensus(
            positives, negatives, tokenizer, epochs=epochs, ensemble=ensemble)
        save_model(model, out_dir / f"{label}.pt",
                   {"label": label, "version": version, "consensus_index": chosen})
        np.savetxt(out_dir / f"{label}.assignments.tsv", matrix, fmt="%d",
                   delimiter="\t")
        summary[label] = {"train_accuracy": round(accuracy, 4),
                          "consensus_index": chosen}
    (out_dir / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True),
                                          encoding="utf-8")
    return summary


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--train", required=True, help="JSONL of {text, labels}")
    parser.add_argument("--labels", nargs="+", required=True)
    parser.add_argument("--out", required=True)
    parser.add_argument("--epochs", type=int, default=DEFAULT_EPOCHS)
    parser.add_argument("--ensemble", type=int, default=ENSEMBLE_SIZE)
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO)
    records = [json.loads(line) for line in Path(args.train).read_text().splitlines()
               if line.strip()]
    summary = train_labels(records, args.labels, Path(args.out),
                           epochs=args.epochs, ensemble=args.ensemble)
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
