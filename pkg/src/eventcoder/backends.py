"""Model backends: builtin deterministic baselines and HTTP service clients.

Three backend contracts run through the pipeline:

* classifier: ``score(text, labels) -> {label: float}`` plus declared
  ``score_range`` and ``decision_boundary``;
* QA: ``answer(context, question) -> QAAnswer | None``;
* embedder: ``embed(texts) -> ndarray (len(texts), dim)``.

The builtin implementations are pure functions of their inputs, so the whole
pipeline runs deterministically with no model service attached.  The service
clients speak the JSON wire protocol documented in docs/wire_protocol.md.
"""

from __future__ import annotations

import json
import logging
import math
import re
import time
import zlib
from dataclasses import dataclass

import numpy as np

from .classify import parse_stanzas

logger = logging.getLogger(__name__)


class BackendError(RuntimeError):
    """A backend could not produce a result (after retries, if remote)."""


@dataclass(frozen=True)
class QAAnswer:
    answer_text: str
    char_start: int
    char_end: int
    score: float


# --- builtin classifier ---------------------------------------------------------


class LexiconClassifier:
    """Term-frequency logistic scorer over per-label keyword lexicons.

    score = sigmoid(steepness * (hits - midpoint)); with the defaults a single
    keyword hit clears the 0.5 decision boundary and the score saturates as
    hits accumulate.
    """

    name = "builtin-lexicon"
    version = "1"
    score_range = (0.0, 1.0)
    decision_boundary = 0.5

    def __init__(self, lexicons: dict[str, list[str]], steepness: float = 2.0,
                 midpoint: float = 0.5):
        self._patterns = {
            label: re.compile(
                r"(?<!\w)(?:"
                + "|".join(re.escape(k.lower()).replace(r"\ ", r"\s+") for k in kws)
                + r")(?!\w)"
            )
            for label, kws in lexicons.items()
            if kws
        }
        self._steepness = steepness
        self._midpoint = midpoint

    @classmethod
    def from_text(cls, text: str, **kwargs) -> "LexiconClassifier":
        return cls(parse_stanzas(text), **kwargs)

    def score(self, text: str, labels: list[str]) -> dict[str, float]:
        folded = text.lower()
        out = {}
        for label in labels:
            pattern = self._patterns.get(label)
            hits = len(pattern.findall(folded)) if pattern else 0
            out[label] = 1.0 / (1.0 + math.exp(-self._steepness * (hits - self._midpoint)))
        return out


class BinaryScorer:
    """One label of a classifier backend, for the story-filter contract."""

    def __init__(self, backend, label: str):
        self.backend = backend
        self.label = label

    def score_one(self, text: str):
        from .model import ScoredLabel

        score = self.backend.score(text, [self.label])[self.label]
        boundary = getattr(self.backend, "decision_boundary", 0.5)
        return ScoredLabel(label=self.label, score=score, positive=score > boundary)


# --- builtin embedder -----------------------------------------------------------


class CharNgramEmbedder:
    """Hashed character n-gram embedding.

    Spelling variants ("defence" / "defense") land near each other because
    they share most of their character n-grams; unrelated phrases do not.
    Deterministic across processes (crc32 hashing, no RNG).
    """

    name = "builtin-char-ngram"
    version = "1"

    def __init__(self, dim: int = 512, ngram_range: tuple[int, int] = (2, 4)):
        self.dim = dim
        self._ngram_range = ngram_range

    def embed(self, texts: list[str]) -> np.ndarray:
        out = np.zeros((len(texts), self.dim), dtype=np.float64)
        lo, hi = self._ngram_range
        for i, text in enumerate(texts):
            stripped = text.strip().lower()
            if not stripped:
                continue  # blank input embeds as the zero vector
            padded = f" {stripped} "
            for n in range(lo, hi + 1):
                for j in range(len(padded) - n + 1):
                    gram = padded[j:j + n]
                    out[i, zlib.crc32(gram.encode("utf-8")) % self.dim] += 1.0
            norm = np.linalg.norm(out[i])
            if norm > 0:
                out[i] /= norm
        return out


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))


# --- builtin QA -----------------------------------------------------------------

_QUESTION_STOP = frozenset(
    "who what where when which did was were the a an of in at on to against by "
    "for take took place hold held out carry carried engage engaged someone "
    "happen happened occur occurred target directed".split()
)

_DATE_EXPR = re.compile(
    r"\b(?:yesterday|today|last\s+(?:week|month|year|night)|"
    r"(?:last\s+)?(?:Monday|Tuesday|Wednesday|Thursday|Friday|Saturday|Sunday)|"
    r"(?:last\s+)?(?:January|February|March|April|May|June|July|August|September|"
    r"October|November|December)(?:\s+\d{1,2})?(?:,?\s+\d{4})?|"
    r"in\s+\d{4}|\d{1,2}\s+(?:January|February|March|April|May|June|July|August|"
    r"September|October|November|December))\b"
)

_PLACE_PREP = re.compile(
    r"\b(?:in|at|near|outside|through|across|around)\s+"
    r"((?:[A-Z][A-Za-z'-]*)(?:\s+(?:of\s+)?[A-Z][A-Za-z'-]*)*)"
)

_RECIP_PREP = re.compile(
    r"\b(?:against|on|upon|toward|towards|at|from)\s+"
    r"((?:(?:the|a|an)\s+)?[\w'-]+(?:\s+[\w'-]+){0,3})(?=[\s,;.!?]|$)"
)

_FUNCTION_WORDS = frozenset(
    "the a an of and or but in at on to from by with for as was were is are "
    "said their its his her this that these those while after before".split()
)


class HeuristicQABackend:
    """Pattern-driven extractive QA baseline.

    Built for determinism, not accuracy: it anchors on the question's content
    words, then reads actors to the left of the anchor, recipients after
    "against"/"on", locations after place prepositions, and dates from a date
    expression matcher.  Scores are fixed per rule so repeated runs are
    byte-identical.
    """

    name = "builtin-heuristic-qa"
    version = "1"

    def answer(self, context: str, question: str) -> QAAnswer | None:
        q = question.lower()
        if q.startswith("when") or " when " in q:
            return self._date_answer(context)
        if q.startswith("where"):
            return self._place_answer(context)
        anchor = self._find_anchor(context, question)
        if anchor is None:
            return None
        if re.search(r"\b(?:against|target|directed|victim|recipient)\b", q):
            return self._recipient_answer(context, anchor)
        if re.match(r"who\s+(?:was|were)\s+\w+(?:ed|en)\b", q):
            return self._object_answer(context, anchor)
        return self._actor_answer(context, anchor)

    def _find_anchor(self, context: str, question: str) -> tuple[int, int] | None:
        folded = context.lower()
        words = [w for w in re.findall(r"[a-z''-]+", question.lower())
                 if w not in _QUESTION_STOP and len(w) > 2]
        for word in words:
            for probe in (word, word[:-1] if word.endswith("s") else word, word[:5]):
                if len(probe) < 3:
                    continue
                m = re.search(r"(?<!\w)" + re.escape(probe) + r"\w*", folded)
                if m:
                    return m.start(), m.end()
        return None

    def _actor_answer(self, context: str, anchor: tuple[int, int]) -> QAAnswer | None:
        """The lede subject: the token run from sentence start to the anchor
        verb, trimmed of leading conjunctions and capped at 8 tokens."""
        idx = context.rfind(". ", 0, anchor[0])
        sent_start = idx + 2 if idx >= 0 else 0
        left = context[sent_start:anchor[0]].strip()
        if not left:
            return None
        tokens = left.split()
        while tokens and tokens[0].lower().strip(",;") in ("and", "but", "while", "then"):
            tokens.pop(0)
        tokens = tokens[-8:]
        while tokens and tokens[-1].lower().strip(",;.") in _FUNCTION_WORDS:
            tokens.pop()
        if not tokens:
            return None
        text = " ".join(tokens).strip(",; ")
        start = context.index(text, sent_start, anchor[0] + 1)
        return QAAnswer(text, start, start + len(text), 0.7)

    def _recipient_answer(self, context: str, anchor: tuple[int, int]) -> QAAnswer | None:
        for m in _RECIP_PREP.finditer(context, anchor[1]):
            text = _trim_chunk(m.group(1))
            if not text or _DATE_EXPR.fullmatch(text):
                continue
            start = m.start(1)
            return QAAnswer(text, start, start + len(text), 0.75)
        return None

    def _object_answer(self, context: str, anchor: tuple[int, int]) -> QAAnswer | None:
        """Direct object of a passive question's verb ("arrested John ...")."""
        m = re.match(r"\s+((?:(?:the|a|an)\s+)?[\w'-]+(?:\s+[\w'-]+){0,3})",
                     context[anchor[1]:])
        if not m:
            return None
        text = _trim_chunk(m.group(1))
        if not text:
            return None
        start = anchor[1] + m.start(1)
        return QAAnswer(text, start, start + len(text), 0.7)

    def _place_answer(self, context: str) -> QAAnswer | None:
        best = None
        for m in _PLACE_PREP.finditer(context):
            candidate = m.group(1).strip()
            if _DATE_EXPR.fullmatch(candidate):
                continue
            best = (candidate, m.start(1))
            break
        if best is None:
            return None
        text, start = best
        return QAAnswer(text, start, start + len(text), 0.8)

    def _date_answer(self, context: str) -> QAAnswer | None:
        m = _DATE_EXPR.search(context)
        if not m:
            return None
        return QAAnswer(m.group(0), m.start(), m.end(), 0.8)


_CHUNK_BOUNDARY = frozenset(
    "in on at by to with over near after during before against as said told "
    "and while because for".split()
)


def _trim_chunk(raw: str) -> str:
    """Cut a captured noun chunk at the next phrase boundary and strip
    trailing dates/function words ("the administration on Tuesday" ->
    "the administration")."""
    tokens = raw.strip().rstrip(",;.").split()
    kept: list[str] = []
    for i, tok in enumerate(tokens):
        bare = tok.strip(",;.").lower()
        if i > 0 and bare in _CHUNK_BOUNDARY:
            break
        kept.append(tok)
        if tok.rstrip().endswith((",", ";")):
            break
    while kept:
        last = kept[-1].strip(",;.")
        if last.lower() in _FUNCTION_WORDS or _DATE_EXPR.fullmatch(last):
            kept.pop()
        else:
            break
    if not kept or all(t.strip(",;.").lower() in _FUNCTION_WORDS for t in kept):
        return ""
    return " ".join(t.strip(",;") for t in kept)


class RecordedQABackend:
    """Replay QA answers from a recorded JSONL fixture.

    Each line holds ``{"context": ..., "question": ..., "answer": {...}|null}``;
    lookups key on the exact (context, question) pair, with a question-only
    fallback for fixtures that apply to a single document.
    """

    name = "recorded-qa"

    def __init__(self, records: list[dict], version: str = "fixture"):
        self.version = version
        self._by_pair: dict[tuple[str, str], dict | None] = {}
        self._by_question: dict[str, dict | None] = {}
        for rec in records:
            answer = rec.get("answer")
            question = rec["question"]
            if "context" in rec and rec["context"] is not None:
                self._by_pair[(rec["context"], question)] = answer
            else:
                self._by_question[question] = answer

    @classmethod
    def from_path(cls, path, version: str = "fixture") -> "RecordedQABackend":
        records = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    records.append(json.loads(line))
        return cls(records, version=version)

    def answer(self, context: str, question: str) -> QAAnswer | None:
        if (context, question) in self._by_pair:
            raw = self._by_pair[(context, question)]
        elif question in self._by_question:
            raw = self._by_question[question]
        else:
            return None
        if raw is None:
            return None
        return QAAnswer(
            answer_text=raw["answer_text"],
            char_start=raw["char_start"],
            char_end=raw["char_end"],
            score=raw["score"],
        )


# --- HTTP service clients -------------------------------------------------------

VERSION_HEADER = "X-Model-Version"


class _ServiceClient:
    """Shared plumbing for the three wire-protocol endpoints.

    Transient transport errors are retried with exponential backoff; after
    ``max_retries`` attempts a BackendError propagates so the pipeline can
    abort the batch at a resumable checkpoint.
    """

    def __init__(self, base_url: str, endpoint: str, timeout: float = 30.0,
                 max_retries: int = 3, backoff: float = 0.5):
        self.base_url = base_url.rstrip("/")
        self.endpoint = endpoint
        self.timeout = timeout
        self.max_retries = max_retries
        self.backoff = backoff
        self.version = "unknown"

    @property
    def name(self) -> str:
        return f"service{self.endpoint.replace('/', '-')}"

    def _post(self, payload: dict) -> dict:
        import requests

        url = f"{self.base_url}{self.endpoint}"
        last_exc: Exception | None = None
        for attempt in range(self.max_retries):
            try:
                resp = requests.post(url, json=payload, timeout=self.timeout)
                resp.raise_for_status()
                version = resp.headers.get(VERSION_HEADER)
                if not version:
                    raise BackendError(f"{url}: response missing {VERSION_HEADER} header")
                self.version = version
                return resp.json()
            except BackendError:
                raise
            except Exception as exc:  # connection errors, 5xx, bad JSON
                last_exc = exc
                if attempt + 1 < self.max_retries:
                    time.sleep(self.backoff * (2 ** attempt))
        raise BackendError(f"{url} unreachable after {self.max_retries} attempts: {last_exc}")


class ServiceClassifier(_ServiceClient):
    score_range = (0.0, 1.0)
    decision_boundary = 0.5

    def __init__(self, base_url: str, **kwargs):
        super().__init__(base_url, "/classify", **kwargs)

    def score(self, text: str, labels: list[str]) -> dict[str, float]:
        body = self._post({"text": text, "labels": labels})
        scores = body.get("scores") or {}
        unknown = body.get("unknown_labels") or []
        if unknown:
            logger.warning("classifier service does not know labels: %s", unknown)
        return {lab: float(scores.get(lab, 0.0)) for lab in labels}


class ServiceQA(_ServiceClient):
    def __init__(self, base_url: str, **kwargs):
        super().__init__(base_url, "/qa", **kwargs)

    def answer(self, context: str, question: str) -> QAAnswer | None:
        body = self._post({"context": context, "question": question})
        raw = body.get("answer")
        if raw is None:
            return None
        return QAAnswer(
            answer_text=raw["answer_text"],
            char_start=int(raw["char_start"]),
            char_end=int(raw["char_end"]),
            score=float(raw["score"]),
        )


class ServiceEmbedder(_ServiceClient):
    def __init__(self, base_url: str, **kwargs):
        super().__init__(base_url, "/embed", **kwargs)
        self.dim: int | None = None

    def embed(self, texts: list[str]) -> np.ndarray:
        body = self._post({"texts": texts})
        vectors = np.asarray(body["vectors"], dtype=np.float64)
        self.dim = int(body.get("dim", vectors.shape[1] if vectors.size else 0))
        return vectors
