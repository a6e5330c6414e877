"""Small transformer models trained from scratch, and their tokenizer.

These are deliberately tiny (two encoder layers, 64-dim) so the training
scripts run in minutes on a CPU.  Deployments with access to pretrained
checkpoints can swap larger models behind the same registry interface; the
serving code only relies on the ``score`` / ``answer`` methods here.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

import torch
from torch import nn

PAD, UNK, CLS, SEP = 0, 1, 2, 3
_SPECIALS = ["[PAD]", "[UNK]", "[CLS]", "[SEP]"]

_TOKEN = re.compile(r"\w+|[^\w\s]")

MAX_LEN = 512
DIM = 64


class WordTokenizer:
    """Word-level tokenizer with character offset tracking."""

    def __init__(self, vocab: dict[str, int]):
        self.vocab = vocab

    @classmethod
    def build(cls, texts, max_size: int = 12000) -> "WordTokenizer":
        counts: dict[str, int] = {}
        for text in texts:
            for tok in _TOKEN.findall(text.lower()):
                counts[tok] = counts.get(tok, 0) + 1
        vocab = {s: i for i, s in enumerate(_SPECIALS)}
        for tok, _n in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])):
            if len(vocab) >= max_size:
                break
            vocab[tok] = len(vocab)
        return cls(vocab)

    def encode(self, text: str) -> list[int]:
        return [self.vocab.get(t, UNK) for t in _TOKEN.findall(text.lower())]

    def encode_with_offsets(self, text: str) -> tuple[list[int], list[tuple[int, int]]]:
        ids, offsets = [], []
        for m in _TOKEN.finditer(text.lower()):
            ids.append(self.vocab.get(m.group(0), UNK))
            offsets.append((m.start(), m.end()))
        return ids, offsets

    def save(self, path: Path) -> None:
        path.write_text(json.dumps(self.vocab, ensure_ascii=False), encoding="utf-8")

    @classmethod
    def load(cls, path: Path) -> "WordTokenizer":
        return cls(json.loads(path.read_text(encoding="utf-8")))


class _Encoder(nn.Module):
    def __init__(self, vocab_size: int, dim: int = DIM, layers: int = 2,
                 heads: int = 4):
        super().__init__()
        self.tok = nn.Embedding(vocab_size, dim, padding_idx=PAD)
        self.pos = nn.Embedding(MAX_LEN, dim)
        layer = nn.TransformerEncoderLayer(
            d_model=dim, nhead=heads, dim_feedforward=dim * 2,
            batch_first=True, dropout=0.1)
        self.encoder = nn.TransformerEncoder(layer, num_layers=layers)

    def forward(self, ids: torch.Tensor) -> torch.Tensor:
        positions = torch.arange(ids.shape[1], device=ids.device).unsqueeze(0)
        x = self.tok(ids) + self.pos(positions)
        mask = ids == PAD
        return self.encoder(x, src_key_padding_mask=mask)


class TinyClassifier(nn.Module):
    """Binary document classifier: encoder + masked mean pool + linear."""

    def __init__(self, vocab_size: int):
        super().__init__()
        self.backbone = _Encoder(vocab_size)
        self.head = nn.Linear(DIM, 1)

    def forward(self, ids: torch.Tensor) -> torch.Tensor:
        hidden = self.backbone(ids)
        mask = (ids != PAD).unsqueeze(-1).float()
        pooled = (hidden * mask).sum(1) / mask.sum(1).clamp(min=1.0)
        return self.head(pooled).squeeze(-1)

    @torch.no_grad()
    def score(self, tokenizer: WordTokenizer, text: str) -> float:
        self.eval()
        ids = tokenizer.encode(text)[:MAX_LEN] or [UNK]
        logits = self(torch.tensor([ids]))
        return float(torch.sigmoid(logits)[0])


class TinyQA(nn.Module):
    """Extractive QA: [CLS] question [SEP] context, start/end heads.

    Position 0 (the CLS token) is the null-answer target, so unanswerable
    questions resolve to "no span".
    """

    def __init__(self, vocab_size: int):
        super().__init__()
        self.backbone = _Encoder(vocab_size)
        self.head = nn.Linear(DIM, 2)

    def forward(self, ids: torch.Tensor) -> tuple[torch.Tensor, torch.Tensor]:
        hidden = self.backbone(ids)
        logits = self.head(hidden)
        return logits[..., 0], logits[..., 1]

    @staticmethod
    def pack(tokenizer: WordTokenizer, question: str, context: str,
             ) -> tuple[list[int], list[tuple[int, int]], int, bool]:
        """Input ids, context char offsets, context start index, truncated?"""
        q_ids = tokenizer.encode(question)
        c_ids, offsets = tokenizer.encode_with_offsets(context)
        budget = MAX_LEN - len(q_ids) - 2
        truncated = len(c_ids) > budget
        c_ids, offsets = c_ids[:budget], offsets[:budget]
        ids = [CLS] + q_ids + [SEP] + c_ids
        return ids, offsets, len(q_ids) + 2, truncated

    @torch.no_grad()
    def answer(self, tokenizer: WordTokenizer, question: str, context: str,
               max_span_tokens: int = 40) -> tuple[dict | None, bool]:
        self.eval()
        ids, offsets, ctx_start, truncated = self.pack(tokenizer, question, context)
        if not offsets:
            return None, truncated
        start_logits, end_logits = self(torch.tensor([ids]))
        start_logits, end_logits = start_logits[0], end_logits[0]

        # allowed positions: CLS (null) or context tokens
        allowed = torch.full_like(start_logits, float("-inf"))
        allowed[0] = 0.0
        allowed[ctx_start:ctx_start + len(offsets)] = 0.0
        start_probs = torch.softmax(start_logits + allowed, dim=0)
        end_probs = torch.softmax(end_logits + allowed, dim=0)

        start_idx = int(torch.argmax(start_probs))
        if start_idx == 0:
            return None, truncated
        window_end = min(start_idx + max_span_tokens, len(ids))
        end_slice = end_probs[start_idx:window_end]
        end_idx = start_idx + int(torch.argmax(end_slice))
        null_score = float(start_probs[0] * end_probs[0])
        span_score = float(start_probs[start_idx] * end_probs[end_idx])
        if span_score <= null_score:
            return None, truncated
        char_start = offsets[start_idx - ctx_start][0]
        char_end = offsets[end_idx - ctx_start][1]
        return {
            "answer_text": context[char_start:char_end],
            "char_start": char_start,
            "char_end": char_end,
            "score": round(min(max(span_score, 0.0), 1.0), 6),
        }, truncated


class NgramEmbedder:
    """Deterministic hashed character n-gram embedder (no weights needed).

    The default /embed backend: spelling variants land close together, and
    identical inputs produce identical vectors across processes.
    """

    def __init__(self, dim: int = 512, ngram_range: tuple[int, int] = (2, 4)):
        self.dim = dim
        self.ngram_range = ngram_range

    def embed(self, texts: list[str]):
        import zlib

        import numpy as np

        out = np.zeros((len(texts), self.dim), dtype=np.float64)
        lo, hi = self.ngram_range
        for i, text in enumerate(texts):
            stripped = text.strip().lower()
            if not stripped:
                continue  # blank input embeds as the zero vector
            padded = f" {stripped} "
            for n in range(lo, hi + 1):
                for j in range(len(padded) - n + 1):
                    gram = padded[j:j + n]
                    out[i, zlib.crc32(gram.encode("utf-8")) % self.dim] += 1.0
            norm = float(np.linalg.norm(out[i]))
            if norm > 0:
                out[i] /= norm
        return out


class SimilarityEmbedder(nn.Module):
    """Bag-of-words embedding model trained on redirect pairs."""

    def __init__(self, vocab_size: int, dim: int = 128):
        super().__init__()
        self.dim = dim
        self.bag = nn.EmbeddingBag(vocab_size, dim, padding_idx=PAD, mode="mean")

    def forward(self, ids: torch.Tensor) -> torch.Tensor:
        return self.bag(ids)

    @torch.no_grad()
    def embed(self, tokenizer: WordTokenizer, texts: list[str]):
        self.eval()
        batch = [tokenizer.encode(t)[:64] or [UNK] for t in texts]
        width = max(len(b) for b in batch)
        padded = torch.tensor([b + [PAD] * (width - len(b)) for b in batch])
        vectors = self(padded)
        return vectors.numpy()


def set_determinism(seed: int) -> None:
    torch.manual_seed(seed)
    torch.set_num_threads(1)


def save_model(model: nn.Module, path: Path, meta: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    torch.save({"state": model.state_dict(), "meta": meta}, path)


def load_state(path: Path) -> tuple[dict, dict]:
    payload = torch.load(path, map_location="cpu", weights_only=True)
    return payload["state"], payload["meta"]
