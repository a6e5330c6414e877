"""Toponym resolution: place-mention extraction, deterministic candidate
ranking with a pluggable reranker hook, and event-location selection by
overlap with the QA location span.

The ranker is a linear score over four features (name similarity, country
agreement with the document's other mentions, a feature-code prior, and log
population).  A trained reranker can be plugged in through the same candidate
payload; the linear score keeps the default path deterministic and testable.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass, field

import yaml

from .fuzzy import similarity, tokenize
from .kb import Gazetteer, GazetteerEntry
from .model import Span

logger = logging.getLogger(__name__)

DEFAULT_RESOLUTION_FLOOR = 0.2

# Populated places outrank administrative areas outrank everything else; spot
# features (buildings, farms) rank lowest.
DEFAULT_FEATURE_PRIORS = {
    "PPLC": 1.0,
    "PPLA": 0.95,
    "PPL": 0.9,
    "PCLI": 0.85,
    "ADM1": 0.8,
    "ADM2": 0.7,
    "ADM3": 0.6,
}
DEFAULT_FEATURE_PRIOR_FALLBACK = 0.4

_LOG_POP_CAP = 8.0  # log10 of a hundred-million-person place saturates the prior


@dataclass(frozen=True)
class GeoWeights:
    name_similarity: float = 0.5
    country_agreement: float = 0.2
    feature_prior: float = 0.2
    log_population: float = 0.1
    feature_priors: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_FEATURE_PRIORS))
    prior_fallback: float = DEFAULT_FEATURE_PRIOR_FALLBACK

    @classmethod
    def from_yaml(cls, text: str) -> "GeoWeights":
        raw = yaml.safe_load(text) or {}
        kwargs = {}
        for name in ("name_similarity", "country_agreement", "feature_prior", "log_population"):
            if name in raw:
                kwargs[name] = float(raw[name])
        if "feature_priors" in raw:
            kwargs["feature_priors"] = {k: float(v) for k, v in raw["feature_priors"].items()}
        if "prior_fallback" in raw:
            kwargs["prior_fallback"] = float(raw["prior_fallback"])
        return cls(**kwargs)

    def scaled(self, factor: float) -> "GeoWeights":
        return GeoWeights(
            name_similarity=self.name_similarity * factor,
            country_agreement=self.country_agreement * factor,
            feature_prior=self.feature_prior * factor,
            log_population=self.log_population * factor,
            feature_priors=dict(self.feature_priors),
            prior_fallback=self.prior_fallback,
        )


@dataclass(frozen=True)
class ScoredPlace:
    entry: GazetteerEntry
    score: float
    feature_breakdown: dict[str, float]


@dataclass(frozen=True)
class ResolvedLocation:
    mention: Span
    entry: GazetteerEntry | None
    score: float
    feature_breakdown: dict[str, float] = field(default_factory=dict)


# --- mention extraction -----------------------------------------------------------


class GazetteerMentionAnnotator:
    """Baseline place-mention annotator: longest-match scan against the
    gazetteer's known names.

    A real NER model slots in through the same ``mentions(text)`` contract;
    this baseline keeps the default pipeline deterministic and offline.
    """

    name = "builtin-gazetteer-scan"

    def __init__(self, gazetteer: Gazetteer, max_tokens: int = 3):
        self._names: set[str] = set(gazetteer._by_name) | set(gazetteer._by_alt)
        self._max_tokens = max_tokens

    def mentions(self, text: str) -> list[Span]:
        spans: list[Span] = []
        token_spans = _token_offsets(text)
        i = 0
        while i < len(token_spans):
            matched = None
            for width in range(min(self._max_tokens, len(token_spans) - i), 0, -1):
                start = token_spans[i][1]
                end = token_spans[i + width - 1][2]
                candidate = text[start:end]
                if candidate.casefold() in self._names and candidate[:1].isupper():
                    matched = (candidate, start, end, width)
                    break
            if matched:
                spans.append(Span(matched[0], matched[1], matched[2]))
                i += matched[3]
            else:
                i += 1
        return spans


_EDGE_PUNCT = ".,;:!?'\"()[]{}«»—–-"


def _token_offsets(text: str) -> list[tuple[str, int, int]]:
    out = []
    i = 0
    for token in text.split():
        start = text.index(token, i)
        i = start + len(token)
        stripped = token.strip(_EDGE_PUNCT)
        if not stripped:
            continue
        lead = len(token) - len(token.lstrip(_EDGE_PUNCT))
        out.append((stripped, start + lead, start + lead + len(stripped)))
    return out


def extract_place_mentions(text: str, annotator) -> list[Span]:
    """Run the annotator and deduplicate mentions by character offsets."""
    if not text:
        raise ValueError("text must be nonempty")
    try:
        raw = annotator.mentions(text)
    except Exception:
        logger.warning("place annotator failed; no mentions extracted")
        return []
    seen: set[tuple[int, int]] = set()
    out = []
    for span in raw:
        key = (span.char_start, span.char_end)
        if span.has_offsets() and key in seen:
            continue
        seen.add(key)
        out.append(span)
    return out


# --- candidate ranking -------------------------------------------------------------


def rank_place_candidates(
    mention: Span,
    doc_mentions: list[Span],
    candidates: list[GazetteerEntry],
    weights: GeoWeights | None = None,
    gazetteer: Gazetteer | None = None,
    reranker=None,
) -> list[ScoredPlace]:
    """Score and sort gazetteer candidates for one mention.

    The modal country of the document's *other* mentions (by their top
    gazetteer hit) feeds the country-agreement feature.  A ``reranker``
    callable receiving the scored candidates may reorder them; it sees the
    same payload this function returns.
    """
    weights = weights or GeoWeights()
    modal_country = _modal_country(mention, doc_mentions, gazetteer)
    scored = []
    for entry in candidates:
        breakdown = {
            "name_similarity": weights.name_similarity * _name_similarity(mention.text, entry),
            "country_agreement": weights.country_agreement
            * (1.0 if modal_country and entry.country_code == modal_country else 0.0),
            "feature_prior": weights.feature_prior
            * weights.feature_priors.get(entry.feature_code, weights.prior_fallback),
            "log_population": weights.log_population
            * min(1.0, math.log10(entry.population + 1) / _LOG_POP_CAP),
        }
        scored.append(ScoredPlace(entry, sum(breakdown.values()), breakdown))
    scored.sort(key=lambda sp: (-sp.score, sp.entry.geoname_id))
    if reranker is not None:
        scored = reranker(mention, scored)
    return scored


def _name_similarity(mention_text: str, entry: GazetteerEntry) -> float:
    # strip a leading compass qualifier so "northern Afghanistan" compares as
    # "Afghanistan"
    tokens = tokenize(mention_text)
    if len(tokens) > 1 and tokens[0] in (
        "northern", "southern", "eastern", "western", "central", "north",
        "south", "east", "west",
    ):
        mention_text = " ".join(tokens[1:])
    best = similarity(mention_text, entry.name)
    for alt in entry.alt_names:
        best = max(best, 0.95 * similarity(mention_text, alt))
    return best


def _modal_country(mention: Span, doc_mentions: list[Span],
                   gazetteer: Gazetteer | None) -> str | None:
    if gazetteer is None:
        return None
    votes: Counter[str] = Counter()
    for other in doc_mentions:
        if other.text == mention.text:
            continue
        hits = gazetteer.search_places(other.text, limit=1)
        if hits:
            votes[hits[0].country_code] += 1
    if not votes:
        return None
    # deterministic mode: highest count, alphabetical tie-break
    return sorted(votes.items(), key=lambda kv: (-kv[1], kv[0]))[0][0]


def resolve_location(
    mention: Span,
    doc_mentions: list[Span],
    gazetteer: Gazetteer,
    weights: GeoWeights | None = None,
    floor: float = DEFAULT_RESOLUTION_FLOOR,
    reranker=None,
) -> ResolvedLocation:
    """Rank the gazetteer candidates for a mention and keep the best if it
    clears the resolution floor."""
    candidates = gazetteer.search_places(mention.text, limit=10)
    scored = rank_place_candidates(mention, doc_mentions, candidates, weights,
                                   gazetteer=gazetteer, reranker=reranker)
    if not scored:
        return ResolvedLocation(mention, None, 0.0)
    top = scored[0]
    if top.score < floor:
        return ResolvedLocation(mention, None, top.score, top.feature_breakdown)
    return ResolvedLocation(mention, top.entry, top.score, top.feature_breakdown)


def select_event_location(
    resolved: list[ResolvedLocation],
    qa_location_span: Span | None,
) -> ResolvedLocation | None:
    """Pick the resolved mention overlapping the QA model's location span.

    No QA span or no overlap means no event location: conservative geocoding
    beats guessing the dateline city.
    """
    if qa_location_span is None or not qa_location_span.has_offsets():
        return None
    overlapping = [
        r for r in resolved
        if r.entry is not None and r.mention.overlaps(qa_location_span)
    ]
    if not overlapping:
        return None
    overlapping.sort(key=lambda r: (-r.score, r.mention.char_start))
    return overlapping[0]
