"""Label scoring, percentile calibration, keyword post-filtering, consensus
model selection and least-certain document selection.

The scorers themselves live behind the backend contract in
:mod:`eventcoder.backends`; this module owns everything that happens to a
score after it is produced.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from enum import Enum

import numpy as np
import yaml

from .model import ScoredLabel

logger = logging.getLogger(__name__)


class Namespace(Enum):
    CATEGORY = "category"
    MODE = "mode"
    CONTEXT = "context"


@dataclass(frozen=True)
class ScorerSet:
    """A bank of binary scorers for one label namespace."""

    namespace: Namespace
    labels: tuple[str, ...]
    backend: object  # ClassifierBackend
    version: str = ""

    def backend_id(self) -> str:
        ver = self.version or getattr(self.backend, "version", "")
        return f"{getattr(self.backend, 'name', 'backend')}@{ver}"


def score_labels(coded_text: str, scorers: ScorerSet) -> list[ScoredLabel]:
    """Score every label in the set against the coded text.

    The positive flag comes from the backend's own decision boundary; the
    percentile cutoff is applied separately by apply_threshold.
    """
    if not coded_text:
        raise ValueError("coded_text must be nonempty")
    if not scorers.labels:
        return []
    raw = scorers.backend.score(coded_text, list(scorers.labels))
    boundary = getattr(scorers.backend, "decision_boundary", 0.5)
    return [
        ScoredLabel(label=lab, score=raw[lab], positive=raw[lab] > boundary)
        for lab in scorers.labels
    ]


# --- calibration --------------------------------------------------------------


def nearest_rank(sorted_scores: list[float], percentile: float) -> float:
    """Nearest-rank order statistic: the value at rank ceil(p/100 * n)."""
    n = len(sorted_scores)
    if n == 0:
        raise ValueError("empty sample")
    rank = math.ceil(percentile / 100.0 * n)
    rank = min(max(rank, 1), n)
    return sorted_scores[rank - 1]


@dataclass(frozen=True)
class LabelCalibration:
    cutoff: float
    percentile: float
    sample_size: int


@dataclass(frozen=True)
class CalibrationTable:
    """Per-label score cutoffs from the positive-score distribution.

    Labels whose sample was too small are carried in ``uncalibrated`` and fall
    back to the backend decision boundary at threshold time.
    """

    entries: dict[str, LabelCalibration]
    uncalibrated: frozenset[str] = frozenset()

    def cutoff_for(self, label: str) -> float | None:
        entry = self.entries.get(label)
        return entry.cutoff if entry else None

    def to_yaml(self) -> str:
        doc = {
            "labels": {
                lab: {
                    "cutoff": e.cutoff,
                    "percentile": e.percentile,
                    "sample_size": e.sample_size,
                }
                for lab, e in sorted(self.entries.items())
            },
            "uncalibrated": sorted(self.uncalibrated),
        }
        return yaml.safe_dump(doc, sort_keys=True)

    @classmethod
    def from_yaml(cls, text: str) -> "CalibrationTable":
        raw = yaml.safe_load(text) or {}
        entries = {
            lab: LabelCalibration(
                cutoff=float(e["cutoff"]),
                percentile=float(e["percentile"]),
                sample_size=int(e["sample_size"]),
            )
            for lab, e in (raw.get("labels") or {}).items()
        }
        return cls(entries=entries, uncalibrated=frozenset(raw.get("uncalibrated") or ()))


def calibrate(
    sample_scores: dict[str, list[float]],
    percentile: float = 90.0,
    min_sample: int = 10,
) -> CalibrationTable:
    """Set each label's cutoff to the nearest-rank percentile of its positive
    scores.

    Labels with fewer than ``min_sample`` positive scores are flagged
    uncalibrated rather than given an unstable cutoff.
    """
    if not (0.0 <= percentile <= 100.0):
        raise ValueError("percentile must be in [0, 100]")
    entries: dict[str, LabelCalibration] = {}
    uncalibrated = set()
    for label, scores in sample_scores.items():
        if len(scores) < min_sample:
            uncalibrated.add(label)
            logger.warning(
                "label %s has %d positive scores (< %d); left uncalibrated",
                label, len(scores), min_sample,
            )
            continue
        cutoff = nearest_rank(sorted(scores), percentile)
        entries[label] = LabelCalibration(cutoff, percentile, len(scores))
    return CalibrationTable(entries=entries, uncalibrated=frozenset(uncalibrated))


def apply_threshold(
    labels: list[ScoredLabel], calib: CalibrationTable
) -> list[ScoredLabel]:
    """Keep labels whose score reaches their calibrated cutoff.

    Uncalibrated labels fall back to the backend's positive flag.  Callers
    that need the full positive set for storage keep the input list; this
    function only narrows what gets reported.
    """
    kept = []
    for sl in labels:
        cutoff = calib.cutoff_for(sl.label)
        if cutoff is None:
            if sl.positive:
                kept.append(sl)
        elif sl.score >= cutoff:
            kept.append(sl)
    return kept


# --- keyword post-filter -------------------------------------------------------


class KeywordFilter:
    """Secondary keyword filter for over-classified labels.

    A label with a configured list survives only if one of its keywords (or
    bigrams) occurs in the text, case-folded and token-bounded.  Labels with
    no list pass through untouched.
    """

    def __init__(self, keywords_by_label: dict[str, list[str]]):
        for label, kws in keywords_by_label.items():
            if not kws:
                raise ValueError(f"empty keyword list for {label!r}")
        self._patterns = {
            label: _keyword_regex(kws) for label, kws in keywords_by_label.items()
        }

    @classmethod
    def from_text(cls, text: str) -> "KeywordFilter":
        return cls(parse_stanzas(text))

    def has_filter(self, label: str) -> bool:
        return label in self._patterns

    def matches(self, label: str, text: str) -> bool:
        pattern = self._patterns.get(label)
        return True if pattern is None else bool(pattern.search(text))


def _keyword_regex(keywords: list[str]) -> re.Pattern:
    alts = [re.escape(k.strip().lower()).replace(r"\ ", r"\s+") for k in keywords if k.strip()]
    return re.compile(r"(?<!\w)(?:" + "|".join(alts) + r")(?!\w)")


def parse_stanzas(text: str) -> dict[str, list[str]]:
    """Parse the stanza file format: ``[label]`` headers, one keyword per
    line, ``#`` comments."""
    out: dict[str, list[str]] = {}
    label = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            label = line[1:-1].strip()
            if not label:
                raise ValueError(f"line {lineno}: empty stanza label")
            out.setdefault(label, [])
        elif label is None:
            raise ValueError(f"line {lineno}: keyword before any [label] header")
        else:
            out[label].append(line)
    return out


def keyword_postfilter(
    labels: list[ScoredLabel], text: str, kf: KeywordFilter
) -> list[ScoredLabel]:
    """Drop labels whose keyword list finds no support in the text."""
    folded = text.lower()
    return [sl for sl in labels if kf.matches(sl.label, folded)]


# --- consensus model selection ---------------------------------------------------


def select_consensus_model(assignments: np.ndarray) -> int:
    """Pick the ensemble member that best mirrors the ensemble itself.

    ``assignments`` is a k x n binary matrix of per-model test-set decisions.
    The consensus model is the row with minimum Hamming distance to the
    majority vote; majority ties break toward positive, model ties toward the
    lowest index.
    """
    mat = np.asarray(assignments)
    if mat.ndim != 2 or mat.shape[0] < 1 or mat.shape[1] < 1:
        raise ValueError("assignments must be a k x n matrix with k, n >= 1")
    k = mat.shape[0]
    majority = (2 * mat.sum(axis=0) >= k).astype(mat.dtype)
    distances = (mat != majority).sum(axis=1)
    return int(np.argmin(distances))


# --- active-learning selection ---------------------------------------------------


def select_uncertain(
    labels_by_doc: dict[str, ScoredLabel], n: int, cutoff: float = 0.5
) -> list[str]:
    """Return the n documents whose score sits closest to the cutoff.

    These are the most informative documents to annotate next.  Ties break by
    document id so the batch is stable across runs.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    ranked = sorted(
        labels_by_doc.items(), key=lambda kv: (abs(kv[1].score - cutoff), kv[0])
    )
    return [doc_id for doc_id, _ in ranked[:n]]
