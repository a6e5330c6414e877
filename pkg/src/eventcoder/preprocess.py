"""Story cleaning and keep/drop filtering.

Raw wire stories carry datelines, editorial boilerplate and whole classes of
content (market tables, composite digests, apolitical crime) that waste the
downstream model budget.  This module strips the former, drops the latter, and
produces the truncated ``coded_text`` the classifiers and QA model consume.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum

import yaml

from .model import Document

logger = logging.getLogger(__name__)

CODED_TEXT_LIMIT = 1024  # chars; approximates the 512-token model window


class DropReason(Enum):
    OK = "ok"
    TOO_LONG = "too_long"
    TOO_SHORT = "too_short"
    MOSTLY_NUMERIC = "mostly_numeric"
    COMPOSITE = "composite"
    CRIME = "crime"
    DISASTER = "disaster"
    FINANCIAL = "financial"
    US_DOMESTIC_PENDING = "us_domestic_pending"


# Scored drop rules run after the cheap structural ones; this order is part of
# the filter_story contract.
RULE_ORDER = (
    DropReason.TOO_SHORT,
    DropReason.TOO_LONG,
    DropReason.MOSTLY_NUMERIC,
    DropReason.COMPOSITE,
    DropReason.FINANCIAL,
    DropReason.CRIME,
    DropReason.DISASTER,
)


@dataclass(frozen=True)
class FilterVerdict:
    keep: bool
    reason: DropReason

    def __post_init__(self) -> None:
        if self.keep != (self.reason == DropReason.OK):
            raise ValueError("keep must be True exactly when reason is OK")


@dataclass(frozen=True)
class CleanRules:
    """Cleaning patterns and filter thresholds.

    Patterns use Python ``re`` syntax and are compiled case-sensitively;
    dateline patterns are anchored at the start of the text and applied in
    order, boilerplate patterns are removed wherever they match.
    """

    dateline_patterns: tuple[str, ...] = ()
    boilerplate_patterns: tuple[str, ...] = ()
    composite_markers: tuple[str, ...] = ()
    min_chars: int = 100
    max_chars: int = 12000
    numeric_ratio_limit: float = 0.5

    def __post_init__(self) -> None:
        if self.min_chars >= self.max_chars:
            raise ValueError("min_chars must be < max_chars")
        if not (0.0 < self.numeric_ratio_limit < 1.0):
            raise ValueError("numeric_ratio_limit must be in (0, 1)")
        object.__setattr__(
            self, "_dateline_res", tuple(re.compile(p) for p in self.dateline_patterns)
        )
        object.__setattr__(
            self,
            "_boilerplate_res",
            tuple(re.compile(p, re.MULTILINE) for p in self.boilerplate_patterns),
        )
        object.__setattr__(
            self,
            "_composite_res",
            tuple(re.compile(p, re.MULTILINE) for p in self.composite_markers),
        )


def load_clean_rules(text: str) -> CleanRules:
    raw = yaml.safe_load(text) or {}
    return CleanRules(
        dateline_patterns=tuple(raw.get("dateline_patterns") or ()),
        boilerplate_patterns=tuple(raw.get("boilerplate_patterns") or ()),
        composite_markers=tuple(raw.get("composite_markers") or ()),
        min_chars=int(raw.get("min_chars", 100)),
        max_chars=int(raw.get("max_chars", 12000)),
        numeric_ratio_limit=float(raw.get("numeric_ratio_limit", 0.5)),
    )


class EmptyAfterCleaning(ValueError):
    """The story was nothing but dateline/boilerplate."""


def clean_text(raw_text: str, rules: CleanRules) -> str:
    """Strip datelines and boilerplate; collapse leftover blank runs."""
    text = raw_text
    for pattern in rules._dateline_res:
        m = pattern.match(text)
        if m and m.end() > 0:
            text = text[m.end():]
            break
    for pattern in rules._boilerplate_res:
        text = pattern.sub("", text)
    text = re.sub(r"[ \t]+\n", "\n", text)
    text = re.sub(r"\n{3,}", "\n\n", text)
    text = re.sub(r"[ \t]{2,}", " ", text)
    return text.strip()


def truncate_coded(cleaned: str) -> str:
    return cleaned[:CODED_TEXT_LIMIT]


def prepare_text(doc: Document, rules: CleanRules) -> Document:
    """Populate ``cleaned_text`` and ``coded_text`` on a copy of the document.

    Idempotent: running it on its own output changes nothing, so reprocessed
    checkpoints are safe.
    """
    if not doc.raw_text:
        raise EmptyAfterCleaning(f"{doc.id}: empty raw_text")
    cleaned = clean_text(doc.raw_text, rules)
    if not cleaned:
        raise EmptyAfterCleaning(f"{doc.id}: nothing left after cleaning")
    return doc.with_text(cleaned, truncate_coded(cleaned))


def _numeric_ratio(text: str) -> float:
    chars = [c for c in text if not c.isspace()]
    if not chars:
        return 0.0
    digits = sum(c.isdigit() for c in chars)
    return digits / len(chars)


def filter_story(
    doc: Document,
    rules: CleanRules,
    crime_scorer=None,
    disaster_scorer=None,
    financial_scorer=None,
) -> FilterVerdict:
    """Apply the keep/drop rules in their fixed order and report the first hit.

    The scorers follow the binary-scorer contract from
    :mod:`eventcoder.backends` (``score_one(text) -> ScoredLabel``).  A scorer
    that raises is treated as "no opinion" and the story is kept past that
    rule (fail-open), with a logged warning.
    """
    text = doc.cleaned_text or doc.raw_text
    for rule in RULE_ORDER:
        if rule is DropReason.TOO_SHORT and len(text) < rules.min_chars:
            return FilterVerdict(False, rule)
        if rule is DropReason.TOO_LONG and len(text) > rules.max_chars:
            return FilterVerdict(False, rule)
        if rule is DropReason.MOSTLY_NUMERIC and _numeric_ratio(text) > rules.numeric_ratio_limit:
            return FilterVerdict(False, rule)
        if rule is DropReason.COMPOSITE:
            # scan the raw text too: digest headers look like datelines and
            # may already have been stripped by cleaning
            if any(p.search(text) or (doc.raw_text and p.search(doc.raw_text))
                   for p in rules._composite_res):
                return FilterVerdict(False, rule)
        scorer = {
            DropReason.FINANCIAL: financial_scorer,
            DropReason.CRIME: crime_scorer,
            DropReason.DISASTER: disaster_scorer,
        }.get(rule)
        if scorer is not None:
            try:
                if scorer.score_one(doc.coded_text or text).positive:
                    return FilterVerdict(False, rule)
            except Exception:
                logger.warning("%s scorer failed on %s; keeping story", rule.value, doc.id)
    return FilterVerdict(True, DropReason.OK)


# --- negated-sentence removal ------------------------------------------------

_SENT_BOUNDARY = re.compile(r"(?<=[.!?])[\"')\]]*\s+")

# Cues that negate a verb directly.  Lexically negative verbs ("denied",
# "rejected") are events in their own right and must NOT match.
_NEGATION_CUE = re.compile(r"\b(?:not|never|cannot|no longer)\b|n[’']t\b", re.IGNORECASE)


@dataclass(frozen=True)
class SentenceFlag:
    start: int
    end: int
    negated: bool


class RegexNegationAnnotator:
    """Cue-based baseline for the sentence/negation annotator contract.

    A real syntactic annotator (part-of-speech driven) can be plugged in with
    the same ``sentences(text)`` signature.
    """

    name = "builtin-negation-regex"

    def sentences(self, text: str) -> list[SentenceFlag]:
        flags = []
        pos = 0
        for m in _SENT_BOUNDARY.finditer(text):
            flags.append(self._flag(text, pos, m.start() + _trailing_quote_len(text, m)))
            pos = m.end()
        if pos < len(text):
            flags.append(self._flag(text, pos, len(text)))
        return flags

    @staticmethod
    def _flag(text: str, start: int, end: int) -> SentenceFlag:
        return SentenceFlag(start, end, bool(_NEGATION_CUE.search(text[start:end])))


def _trailing_quote_len(text: str, match: re.Match) -> int:
    # keep closing quotes/brackets with their sentence
    extra = 0
    i = match.start()
    while i < len(text) and text[i] in "\"')]":
        extra += 1
        i += 1
    return extra


def remove_negated_sentences(text: str, annotator=None) -> str:
    """Delete sentences whose verb is negated; keep the rest in order.

    On annotator failure the input is returned unchanged (with a warning):
    losing negation handling for one story beats losing the story.
    """
    if not text:
        raise ValueError("text must be nonempty")
    annotator = annotator or RegexNegationAnnotator()
    try:
        flags = annotator.sentences(text)
    except Exception:
        logger.warning("negation annotator failed; text passed through")
        return text
    if not any(f.negated for f in flags):
        return text
    kept = [text[f.start:f.end].strip() for f in flags if not f.negated]
    return " ".join(s for s in kept if s)
