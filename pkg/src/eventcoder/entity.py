"""Entity resolution: map a proper-name mention to its canonical article.

Resolution is two-stage: a single exact title/redirect match wins outright;
otherwise the fuzzy candidates are reranked by embedding similarity between
the mention and each candidate's name-plus-summary.  Document context is
deliberately not consulted.

Also builds the redirect-pair contrastive dataset that trains a similarity
model offline (the training itself happens in the model sidecar).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from .backends import cosine
from .fuzzy import trigram_overlap
from .kb import EntityIndex, KBArticle
from .model import Span

logger = logging.getLogger(__name__)

DEFAULT_SIMILARITY_THRESHOLD = 0.6


class ResolutionMethod(Enum):
    EXACT = "exact"
    SIMILARITY = "similarity"
    UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class ResolvedEntity:
    mention: Span
    article_title: str | None
    confidence: float
    method: ResolutionMethod
    article: KBArticle | None = None

    def __post_init__(self) -> None:
        if (self.article_title is None) != (self.method is ResolutionMethod.UNRESOLVED):
            raise ValueError("article_title present iff resolved")
        if not (0.0 <= self.confidence <= 1.0):
            raise ValueError("confidence must be in [0, 1]")


def unresolved(mention: Span) -> ResolvedEntity:
    return ResolvedEntity(mention, None, 0.0, ResolutionMethod.UNRESOLVED)


def resolve_entity(
    mention: Span,
    kb: EntityIndex,
    embedder,
    k: int = 10,
    threshold: float = DEFAULT_SIMILARITY_THRESHOLD,
) -> ResolvedEntity:
    """Resolve one proper-name mention against the article index.

    A unique exact match on a title or redirect short-circuits with
    confidence 1.0 and never touches the embedder.  Ambiguous or fuzzy cases
    embed the mention against each candidate's "title + summary" text and take
    the best cosine, reported raw as the confidence; below ``threshold`` the
    mention stays unresolved.
    """
    exact = kb.exact_matches(mention.text)
    exact_titles = sorted({title for title, _field in exact})
    if len(exact_titles) == 1:
        title = exact_titles[0]
        return ResolvedEntity(mention, title, 1.0, ResolutionMethod.EXACT,
                              article=kb.get(title))

    hits = kb.search_entities(mention.text, limit=k)
    if not hits:
        return unresolved(mention)

    texts = [mention.text]
    texts += [f"{h.article.title}. {h.article.short_summary}" for h in hits]
    try:
        vectors = embedder.embed(texts)
    except Exception:
        logger.warning("embedder failed resolving %r; leaving unresolved", mention.text)
        return unresolved(mention)

    best_idx, best_sim = -1, -1.0
    for i in range(len(hits)):
        sim = cosine(vectors[0], vectors[1 + i])
        if sim > best_sim:
            best_idx, best_sim = i, sim
    if best_sim < threshold:
        return unresolved(mention)
    best = hits[best_idx]
    confidence = min(max(best_sim, 0.0), 1.0)
    return ResolvedEntity(mention, best.article.title, confidence,
                          ResolutionMethod.SIMILARITY, article=best.article)


# --- redirect-pair dataset --------------------------------------------------------


@dataclass(frozen=True)
class RedirectPair:
    query: str
    target_title: str
    label: str  # "positive" | "negative"

    def __post_init__(self) -> None:
        if self.label not in ("positive", "negative"):
            raise ValueError("label must be positive or negative")

    def as_line(self) -> str:
        return f"{self.query}\t{self.target_title}\t{self.label}"


def lexical_hard_negatives(query: str, candidates: list[str], n: int) -> list[str]:
    """Default hard-negative selector: the n lexically-closest wrong titles."""
    ranked = sorted(candidates, key=lambda t: (-trigram_overlap(query, t), t))
    return ranked[:n]


def build_redirect_pairs(
    redirect_map: dict[str, str],
    negatives_per_positive: int = 3,
    hard_negative_selector=lexical_hard_negatives,
    titles: list[str] | None = None,
):
    """Yield contrastive training pairs from the redirect map.

    Each redirect (query -> target) produces one positive pair and up to
    ``negatives_per_positive`` hard negatives: titles that look like the query
    but are not its target.  When the candidate pool runs out, fewer negatives
    are emitted.
    """
    if not redirect_map:
        raise ValueError("redirect_map must be nonempty")
    pool = sorted(set(titles if titles is not None else redirect_map.values()))
    for query in sorted(redirect_map):
        target = redirect_map[query]
        yield RedirectPair(query, target, "positive")
        candidates = [t for t in pool if t != target]
        for neg in hard_negative_selector(query, candidates, negatives_per_positive):
            yield RedirectPair(query, neg, "negative")


def write_redirect_pairs(pairs, path) -> int:
    """Write the tab-separated pair stream consumed by similarity training."""
    count = 0
    with open(path, "w", encoding="utf-8") as fh:
        for pair in pairs:
            fh.write(pair.as_line() + "\n")
            count += 1
    return count
