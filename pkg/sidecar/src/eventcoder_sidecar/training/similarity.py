"""Similarity-embedding training from redirect pairs.

Input is the tab-separated pair stream the pipeline exports (query, target
title, positive|negative).  A contrastive objective pulls true redirect pairs
together and pushes hard negatives apart, yielding an embedder for name
matching.

CLI:
    python -m eventcoder_sidecar.training.similarity \
        --pairs redirect_pairs.tsv --out models/embed
"""

from __future__ import annotations

import argparse
import json
import logging
import random
from pathlib import Path

import torch
from torch import nn

from ..models import PAD, SimilarityEmbedder, UNK, WordTokenizer, save_model, set_determinism

logger = logging.getLogger(__name__)

DEFAULT_EPOCHS = 30
DEFAULT_BATCH = 16


def read_pairs(path: Path) -> list[tuple[str, str, int]]:
    pairs = []
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        query, target, label = line.split("\t")
        pairs.append((query, target, 1 if label == "positive" else -1))
    if not pairs:
        raise ValueError(f"no pairs in {path}")
    return pairs


def _encode_batch(texts, tokenizer):
    batch = [tokenizer.encode(t)[:64] or [UNK] for t in texts]
    width = max(len(b) for b in batch)
    return torch.tensor([b + [PAD] * (width - len(b)) for b in batch])


def train_similarity(
    pairs: list[tuple[str, str, int]],
    epochs: int = DEFAULT_EPOCHS,
    lr: float = 5e-3,
    margin: float = 0.2,
    seed: int = 0,
) -> tuple[SimilarityEmbedder, WordTokenizer]:
    set_determinism(seed)
    tokenizer = WordTokenizer.build([q for q, _t, _l in pairs]
                                    + [t for _q, t, _l in pairs])
    model = SimilarityEmbedder(len(tokenizer.vocab))
    optimizer = torch.optim.Adam(model.parameters(), lr=lr)
    loss_fn = nn.CosineEmbeddingLoss(margin=margin)
    rng = random.Random(seed)
    work = list(pairs)
    model.train()
    for _epoch in range(epochs):
        rng.shuffle(work)
        for i in range(0, len(work), DEFAULT_BATCH):
            chunk = work[i:i + DEFAULT_BATCH]
            queries = _encode_batch([q for q, _t, _l in chunk], tokenizer)
            targets = _encode_batch([t for _q, t, _l in chunk], tokenizer)
            labels = torch.tensor([float(l) for _q, _t, l in chunk])
            optimizer.zero_grad()
            loss = loss_fn(model(queries), model(targets), labels)
            loss.backward()
            optimizer.step()
    return model, tokenizer


def separation(model: SimilarityEmbedder, tokenizer: WordTokenizer,
               pairs: list[tuple[str, str, int]]) -> float:
    """Mean cosine of positive pairs minus mean cosine of negative pairs."""
    import numpy as np

    def cos(a, b):
        va = model.embed(tokenizer, [a])[0]
        vb = model.embed(tokenizer, [b])[0]
        denom = (np.linalg.norm(va) * np.linalg.norm(vb)) or 1.0
        return float(va @ vb / denom)

    pos = [cos(q, t) for q, t, l in pairs if l == 1]
    neg = [cos(q, t) for q, t, l in pairs if l == -1]
    if not pos or not neg:
        return 0.0
    return sum(pos) / len(pos) - sum(neg) / len(neg)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", required=True, help="tab-separated pair stream")
    parser.add_argument("--out", required=True)
    parser.add_argument("--epochs", type=int, default=DEFAULT_EPOCHS)
    parser.add_argument("--version", default="sim-0.1")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO)
    pairs = read_pairs(Path(args.pairs))
    model, tokenizer = train_similarity(pairs, epochs=args.epochs)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    tokenizer.save(out_dir / "vocab.json")
    save_model(model, out_dir / "similarity.pt", {"version": args.version})
    print(json.dumps({"separation": round(separation(model, tokenizer, pairs), 4),
                      "pairs": len(pairs)}))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
