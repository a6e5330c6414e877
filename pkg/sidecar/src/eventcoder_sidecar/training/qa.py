"""Extractive QA training.

Examples are {context, question, answer_text|null}; the answer must occur in
its context.  Unanswerable examples train toward the CLS position so the
served model can return null.

CLI:
    python -m eventcoder_sidecar.training.qa --train qa.jsonl --out models/qa
"""

from __future__ import annotations

import argparse
import json
import logging
import random
from pathlib import Path

import torch
from torch import nn

from ..models import PAD, TinyQA, WordTokenizer, save_model, set_determinism

logger = logging.getLogger(__name__)

DEFAULT_EPOCHS = 120
DEFAULT_BATCH = 8


def _prepare(example: dict, tokenizer: WordTokenizer):
    ids, offsets, ctx_start, _trunc = TinyQA.pack(
        tokenizer, example["question"], example["context"])
    answer = example.get("answer_text")
    if not answer:
        return ids, 0, 0
    char_start = example.get("char_start")
    if char_start is None or example["context"][char_start:char_start + len(answer)] != answer:
        char_start = example["context"].find(answer)
    if char_start < 0:
        raise ValueError(f"answer {answer!r} not found in its context")
    char_end = char_start + len(answer)
    start_tok = end_tok = None
    for i, (s, e) in enumerate(offsets):
        if start_tok is None and e > char_start:
            start_tok = i
        if s < char_end:
            end_tok = i
    if start_tok is None or end_tok is None:
        return ids, 0, 0  # answer fell past the truncation point
    return ids, ctx_start + start_tok, ctx_start + end_tok


def train_qa(
    examples: list[dict],
    tokenizer: WordTokenizer | None = None,
    epochs: int = DEFAULT_EPOCHS,
    lr: float = 1e-3,
    seed: int = 0,
) -> tuple[TinyQA, WordTokenizer]:
    set_determinism(seed)
    if tokenizer is None:
        tokenizer = WordTokenizer.build(
            [e["context"] for e in examples] + [e["question"] for e in examples])
    prepared = [_prepare(e, tokenizer) for e in examples]
    model = TinyQA(len(tokenizer.vocab))
    optimizer = torch.optim.Adam(model.parameters(), lr=lr)
    loss_fn = nn.CrossEntropyLoss()
    rng = random.Random(seed)
    model.train()
    for _epoch in range(epochs):
        rng.shuffle(prepared)
        for i in range(0, len(prepared), DEFAULT_BATCH):
            chunk = prepared[i:i + DEFAULT_BATCH]
            width = max(len(ids) for ids, _s, _e in chunk)
            batch = torch.tensor([ids + [PAD] * (width - len(ids))
                                  for ids, _s, _e in chunk])
            starts = torch.tensor([s for _ids, s, _e in chunk])
            ends = torch.tensor([e for _ids, _s, e in chunk])
            optimizer.zero_grad()
            start_logits, end_logits = model(batch)
            loss = loss_fn(start_logits, starts) + loss_fn(end_logits, ends)
            loss.backward()
            optimizer.step()
    return model, tokenizer


def exact_match_rate(model: TinyQA, tokenizer: WordTokenizer,
                     examples: list[dict]) -> float:
    hits = 0
    for e in examples:
        answer, _trunc = model.answer(tokenizer, e["question"], e["context"])
        want = e.get("answer_text") or None
        got = answer["answer_text"] if answer else None
        hits += got == want
    return hits / len(examples)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--train", required=True,
                        help="JSONL of {context, question, answer_text|null}")
    parser.add_argument("--out", required=True)
    parser.add_argument("--epochs", type=int, default=DEFAULT_EPOCHS)
    parser.add_argument("--version", default="tiny-0.1")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO)
    examples = [json.loads(line) for line in Path(args.train).read_text().splitlines()
                if line.strip()]
    model, tokenizer = train_qa(examples, epochs=args.epochs)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    tokenizer.save(out_dir / "vocab.json")
    save_model(model, out_dir / "qa.pt", {"version": args.version})
    rate = exact_match_rate(model, tokenizer, examples)
    print(json.dumps({"train_exact_match": round(rate, 4),
                      "examples": len(examples)}))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
