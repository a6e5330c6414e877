"""Actor coding: country + role-category codes for entity mentions.

Generic mentions ("Syrian civilians") are coded by stripping the country term
and matching the residual against the agent file by embedding similarity.
Mentions resolved to a knowledge-base article instead derive a role text from
the article (office held on the story date, summary, infobox type, or intro
sentence, in that order) and run the same similarity match on it.
"""

from __future__ import annotations

import datetime as dt
import logging
import re
from dataclasses import dataclass
from enum import Enum

import numpy as np
import yaml

from .backends import cosine
from .fuzzy import tokenize
from .kb import KBArticle
from .model import Span

logger = logging.getLogger(__name__)

DEFAULT_AGENT_THRESHOLD = 0.5  # with the builtin char-ngram embedder

_AGENT_LINE = re.compile(r"^(?P<pattern>[^\[\]]+?)\s*\[~(?P<code>[A-Za-z0-9]+)\]\s*$")

# function words trimmed from the edges of a residual before matching; the
# residual's internal token order is never touched
_EDGE_STOPWORDS = frozenset(
    "the a an of in at on for to from by with his her its their and".split()
)


class AgentFileError(ValueError):
    pass


@dataclass(frozen=True)
class AgentEntry:
    """One pattern -> actor-category mapping from the agent file."""

    pattern: str  # normalized: underscores to spaces, casefolded
    code: str

    def __post_init__(self) -> None:
        if not self.pattern or not self.code:
            raise ValueError("pattern and code must be nonempty")


class Basis(Enum):
    GENERIC = "generic"
    KB_OFFICE = "kb_office"
    KB_SUMMARY = "kb_summary"
    KB_INFOBOX_TYPE = "kb_infobox_type"
    KB_INTRO = "kb_intro"
    UNCODED = "uncoded"


@dataclass(frozen=True)
class ActorCode:
    country: str = ""  # ISO-3166 alpha-3 or empty
    category: str = ""
    basis: Basis = Basis.UNCODED

    def __post_init__(self) -> None:
        if self.basis is not Basis.UNCODED and not (self.country or self.category):
            raise ValueError("coded actors need a country or a category")

    def as_text(self) -> str:
        return " ".join(p for p in (self.country, self.category) if p) or "---"


def load_agent_file(text: str) -> list[AgentEntry]:
    """Parse the agent file: one ``NAME [~CODE]`` per line, ``#`` comments.

    Patterns are normalized (underscores to spaces, casefolded) and must be
    unique.  A malformed line fails the load with its line number: a broken
    agent file should never silently code actors.
    """
    entries: list[AgentEntry] = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _AGENT_LINE.match(line)
        if not m:
            raise AgentFileError(f"agent file line {lineno}: cannot parse {raw.strip()!r}")
        pattern = normalize_pattern(m.group("pattern"))
        if not pattern:
            raise AgentFileError(f"agent file line {lineno}: empty pattern")
        if pattern in seen:
            raise AgentFileError(
                f"agent file line {lineno}: duplicate pattern {pattern!r} "
                f"(first at line {seen[pattern]})"
            )
        seen[pattern] = lineno
        entries.append(AgentEntry(pattern=pattern, code=m.group("code").upper()))
    return entries


def normalize_pattern(raw: str) -> str:
    return " ".join(raw.replace("_", " ").casefold().split())


class AgentMatcher:
    """Agent entries with cached embeddings for similarity lookup."""

    def __init__(self, entries: list[AgentEntry], embedder):
        if not entries:
            raise AgentFileError("agent file has no entries")
        self.entries = entries
        self.embedder = embedder
        self._by_pattern = {}
        for entry in entries:
            self._by_pattern.setdefault(entry.pattern, entry)
        self._matrix = embedder.embed([e.pattern for e in entries])
        norms = np.linalg.norm(self._matrix, axis=1)
        norms[norms == 0.0] = 1.0
        self._matrix = self._matrix / norms[:, None]

    def exact(self, text: str) -> AgentEntry | None:
        return self._by_pattern.get(normalize_pattern(text))

    def nearest(self, text: str) -> tuple[AgentEntry, float]:
        """Closest entry by cosine; ties break toward agent-file order."""
        vec = self.embedder.embed([text])[0]
        norm = np.linalg.norm(vec)
        if norm > 0:
            vec = vec / norm
        sims = self._matrix @ vec
        best = int(np.argmax(sims))  # argmax takes the first (file-order) max
        return self.entries[best], float(sims[best])


# --- country detection ---------------------------------------------------------


class CountryTable:
    """Country names, demonyms and capital aliases mapped to alpha-3 codes.

    Capital aliases matter because news prose routinely uses the capital as a
    metonym for the government ("the Damascus regime").
    """

    def __init__(self, term_to_code: dict[str, str]):
        self._terms = {normalize_pattern(t): code.upper() for t, code in term_to_code.items()}
        self._max_tokens = max((len(t.split()) for t in self._terms), default=1)

    @classmethod
    def from_yaml(cls, text: str) -> "CountryTable":
        raw = yaml.safe_load(text) or {}
        terms: dict[str, str] = {}
        for rec in raw.get("countries") or []:
            code = rec["code"]
            for key in ("name", "capital"):
                if rec.get(key):
                    terms[rec[key]] = code
            for term in (rec.get("demonyms") or []) + (rec.get("aliases") or []):
                terms[term] = code
        return cls(terms)

    def code_for(self, term: str) -> str | None:
        return self._terms.get(normalize_pattern(term))

    def find_first(self, tokens: list[str]) -> tuple[str, int, int] | None:
        """Leftmost-longest country term in a token list: (code, start, end)."""
        for start in range(len(tokens)):
            for width in range(min(self._max_tokens, len(tokens) - start), 0, -1):
                code = self._terms.get(" ".join(tokens[start:start + width]))
                if code:
                    return code, start, start + width
        return None


def split_country(mention: str, country_table: CountryTable) -> tuple[str | None, str]:
    """Detect and remove the first country term from a mention.

    Returns (alpha-3 code or None, residual).  At most one term is removed and
    the remaining tokens keep their order.
    """
    tokens = tokenize(mention)
    hit = country_table.find_first(tokens)
    if hit is None:
        return None, mention.strip()
    code, start, end = hit
    residual = tokens[:start] + tokens[end:]
    return code, " ".join(residual)


def trim_residual(text: str) -> str:
    """Drop leading/trailing function words left behind by country removal."""
    tokens = text.split()
    while tokens and tokens[0] in _EDGE_STOPWORDS:
        tokens.pop(0)
    while tokens and tokens[-1] in _EDGE_STOPWORDS:
        tokens.pop()
    return " ".join(tokens)


# --- role extraction from a resolved article -------------------------------------

_COPULA = re.compile(
    r"\b(?:is|was|are|were|has been|have been)\s+(?:a|an|the)?\s*(?P<role>[^.;]+)",
    re.IGNORECASE,
)


def role_for_entity(article: KBArticle, story_date: dt.date) -> tuple[str, Basis]:
    """Derive the role text describing the entity as of the story date.

    Priority: an infobox office whose dates cover the story date, then the
    one-sentence summary, then the infobox type, then the first sentence of
    the intro paragraph.
    """
    for office in article.offices():
        if office.title and office.active_on(story_date):
            return office.title, Basis.KB_OFFICE
    if article.short_summary.strip():
        return _predicate_of(article.short_summary), Basis.KB_SUMMARY
    info_type = str(article.infobox.get("type") or "").strip()
    if info_type:
        return info_type, Basis.KB_INFOBOX_TYPE
    intro = article.intro_paragraph.strip()
    if intro:
        first = re.split(r"(?<=[.!?])\s+", intro, maxsplit=1)[0]
        return _predicate_of(first), Basis.KB_INTRO
    logger.warning("article %s has no role-bearing fields", article.title)
    return "", Basis.KB_INTRO


def _predicate_of(sentence: str) -> str:
    """The descriptive predicate of an "X is a Y" sentence, else the sentence."""
    m = _COPULA.search(sentence)
    if m:
        return m.group("role").strip().rstrip(".")
    return sentence.strip().rstrip(".")


# --- the coder -------------------------------------------------------------------


def code_actor(
    mention: Span,
    resolved,  # ResolvedEntity | None
    story_date: dt.date,
    agents: AgentMatcher,
    country_table: CountryTable,
    threshold: float = DEFAULT_AGENT_THRESHOLD,
) -> ActorCode:
    """Assign a country + category code to one mention.

    Resolved mentions take the knowledge-base path (role text and article
    country); everything else goes through country splitting and agent-file
    similarity.  An exact pattern match wins regardless of threshold.
    """
    article = getattr(resolved, "article", None)
    if article is not None:
        role, basis = role_for_entity(article, story_date)
        country = _article_country(article, country_table)
        role_country, residual = split_country(role, country_table)
        if not country and role_country:
            country = role_country
        residual = trim_residual(residual)
        category = _match_category(residual, agents, threshold)
        if not country and not category:
            return ActorCode(basis=Basis.UNCODED)
        return ActorCode(country=country, category=category, basis=basis)

    country, residual = split_country(mention.text, country_table)
    residual = trim_residual(residual)
    category = _match_category(residual, agents, threshold)
    if not country and not category:
        return ActorCode(basis=Basis.UNCODED)
    return ActorCode(country=country or "", category=category, basis=Basis.GENERIC)


def _article_country(article: KBArticle, country_table: CountryTable) -> str:
    raw = str(article.infobox.get("country") or "").strip()
    if not raw:
        return ""
    if re.fullmatch(r"[A-Z]{3}", raw):
        return raw
    return country_table.code_for(raw) or ""


def _match_category(residual: str, agents: AgentMatcher, threshold: float) -> str:
    if not residual:
        return ""
    exact = agents.exact(residual)
    if exact is not None:
        return exact.code
    try:
        entry, sim = agents.nearest(residual)
    except Exception:
        logger.warning("embedder failed coding %r; uncoded", residual)
        return ""
    if sim >= threshold:
        return entry.code
    return ""
