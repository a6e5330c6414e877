"""Offline knowledge-base indexes: an encyclopedia-derived entity index and a
gazetteer of places, both with fuzzy full-text search.

Everything is embedded and in-process (no search server, no network), so the
pipeline can run fully offline.  Build is single-writer; after ingestion the
indexes are read-only and safe for any number of concurrent readers.

Input formats (documented in docs/file_formats.md):

* article stream: one JSON record per line with title, page_kind, redirects,
  alt_names, short_summary, categories, infobox, intro_paragraph; redirect
  records instead carry redirect_to.
* gazetteer: tab-separated rows in the published Geonames column order.
"""

from __future__ import annotations

import datetime as dt
import json
import logging
from dataclasses import dataclass, field

from .fuzzy import levenshtein, tokenize, trigram_overlap

logger = logging.getLogger(__name__)

FIELD_WEIGHTS = {"title": 3.0, "redirect": 2.0, "alt_name": 1.0}

# version of the on-disk index directory layout (articles.jsonl/places.tsv
# plus meta.yaml); loaders refuse directories written by a newer layout
INDEX_FORMAT_VERSION = 1


@dataclass(frozen=True)
class Office:
    """One officeholder stint from an article infobox."""

    title: str
    start: dt.date | None = None
    end: dt.date | None = None

    def __post_init__(self) -> None:
        if self.start and self.end and self.start > self.end:
            raise ValueError(f"office {self.title!r}: start after end")

    def active_on(self, day: dt.date) -> bool:
        if self.start and day < self.start:
            return False
        if self.end and day > self.end:
            return False
        return True


@dataclass(frozen=True)
class KBArticle:
    title: str
    redirects: tuple[str, ...] = ()
    alt_names: tuple[str, ...] = ()
    short_summary: str = ""
    categories: tuple[str, ...] = ()
    infobox: dict = field(default_factory=dict)
    intro_paragraph: str = ""
    page_kind: str = "article"

    def offices(self) -> list[Office]:
        out = []
        for raw in self.infobox.get("offices", []):
            out.append(Office(
                title=raw.get("title", ""),
                start=_parse_date(raw.get("start")),
                end=_parse_date(raw.get("end")),
            ))
        return out

    def searchable_names(self) -> list[tuple[str, str]]:
        """(field kind, name) pairs that participate in lexical search."""
        pairs = [("title", self.title)]
        pairs += [("redirect", r) for r in self.redirects]
        pairs += [("alt_name", a) for a in self.alt_names]
        return pairs


def _parse_date(value) -> dt.date | None:
    if value in (None, ""):
        return None
    if isinstance(value, dt.date):
        return value
    return dt.date.fromisoformat(str(value))


@dataclass
class IngestStats:
    indexed: int = 0
    redirects: int = 0
    skipped_disambiguation: int = 0
    skipped_category: int = 0
    malformed: int = 0
    redirects_unattached: int = 0

    def as_dict(self) -> dict[str, int]:
        return dict(vars(self))


@dataclass(frozen=True)
class EntityHit:
    article: KBArticle
    score: float
    matched_field: str
    matched_name: str


class _NameEntry:
    __slots__ = ("title", "kind", "name", "tokens")

    def __init__(self, title: str, kind: str, name: str):
        self.title = title
        self.kind = kind
        self.name = name
        self.tokens = tokenize(name)


class EntityIndex:
    """Inverted index over article titles, redirects and alternative names."""

    def __init__(self):
        self.articles: dict[str, KBArticle] = {}
        self._names: list[_NameEntry] = []
        self._exact: dict[str, set[int]] = {}
        self._postings: dict[str, set[int]] = {}
        self._tokens_by_len: dict[int, list[str]] = {}

    # --- ingestion ---

    def ingest_articles(self, article_stream) -> IngestStats:
        """Index an iterable of parsed article records (dicts).

        Redirect records are folded into their target article's redirect list;
        disambiguation and category pages are skipped.  Re-ingesting the same
        stream is a no-op: articles key on title and redirect sets are
        deduplicated.
        """
        stats = IngestStats()
        pending_redirects: dict[str, list[str]] = {}
        for raw in article_stream:
            try:
                kind = raw["page_kind"]
                title = raw["title"].strip()
                if not title:
                    raise KeyError("title")
            except (KeyError, TypeError, AttributeError):
                stats.malformed += 1
                continue
            if kind == "disambiguation":
                stats.skipped_disambiguation += 1
            elif kind == "category":
                stats.skipped_category += 1
            elif kind == "redirect":
                target = (raw.get("redirect_to") or "").strip()
                if not target:
                    stats.malformed += 1
                    continue
                pending_redirects.setdefault(target, []).append(title)
                stats.redirects += 1
            elif kind == "article":
                try:
                    article = KBArticle(
                        title=title,
                        redirects=tuple(dict.fromkeys(raw.get("redirects") or ())),
                        alt_names=tuple(dict.fromkeys(raw.get("alt_names") or ())),
                        short_summary=raw.get("short_summary") or "",
                        categories=tuple(raw.get("categories") or ()),
                        infobox=raw.get("infobox") or {},
                        intro_paragraph=raw.get("intro_paragraph") or "",
                    )
                except (TypeError, ValueError):
                    stats.malformed += 1
                    continue
                self.articles[title] = article
                stats.indexed += 1
            else:
                stats.malformed += 1
        for target, names in pending_redirects.items():
            article = self.articles.get(target)
            if article is None:
                stats.redirects_unattached += len(names)
                continue
            merged = tuple(dict.fromkeys((*article.redirects, *names)))
            self.articles[target] = KBArticle(
                title=article.title, redirects=merged, alt_names=article.alt_names,
                short_summary=article.short_summary, categories=article.categories,
                infobox=article.infobox, intro_paragraph=article.intro_paragraph,
            )
        self._rebuild()
        return stats

    @classmethod
    def from_jsonl(cls, path) -> tuple["EntityIndex", IngestStats]:
        index = cls()
        with open(path, encoding="utf-8") as fh:
            stats = index.ingest_articles(
                json.loads(line) for line in fh if line.strip()
            )
        return index, stats

    def _rebuild(self) -> None:
        self._names = []
        self._exact = {}
        self._postings = {}
        for title in sorted(self.articles):
            for kind, name in self.articles[title].searchable_names():
                entry_id = len(self._names)
                self._names.append(_NameEntry(title, kind, name))
                self._exact.setdefault(name.casefold(), set()).add(entry_id)
                for token in set(self._names[entry_id].tokens):
                    self._postings.setdefault(token, set()).add(entry_id)
        self._tokens_by_len = {}
        for token in self._postings:
            self._tokens_by_len.setdefault(len(token), []).append(token)
        for bucket in self._tokens_by_len.values():
            bucket.sort()

    # --- lookup ---

    def get(self, title: str) -> KBArticle | None:
        return self.articles.get(title)

    def exact_matches(self, name: str) -> list[tuple[str, str]]:
        """(title, field) pairs whose title/redirect/alt name equals ``name``
        case-insensitively."""
        hits = []
        for entry_id in sorted(self._exact.get(name.casefold(), ())):
            entry = self._names[entry_id]
            hits.append((entry.title, entry.kind))
        return hits

    def search_entities(self, query: str, fuzziness: int = 2,
                        limit: int = 10) -> list[EntityHit]:
        """Field-weighted fuzzy search over titles, redirects and alt names.

        Fuzziness is a per-token edit tolerance (capped by token length, never
        above 2); query tokens that match nothing within tolerance fall back
        to character-trigram overlap.  Candidates rank by weighted lexical
        score, ties by title.
        """
        if not query.strip():
            raise ValueError("query must be nonempty")
        q_tokens = tokenize(query)
        if not q_tokens:
            return []

        token_matches: list[dict[str, float]] = []
        for q_tok in q_tokens:
            token_matches.append(self._match_token(q_tok, fuzziness))

        entry_scores: dict[int, float] = {}
        candidate_entries: set[int] = set()
        for matches in token_matches:
            for index_token in matches:
                candidate_entries |= self._postings.get(index_token, set())
        for entry_id in candidate_entries:
            entry = self._names[entry_id]
            qualities = []
            matched_name_tokens: set[str] = set()
            for matches in token_matches:
                best = 0.0
                for tok in entry.tokens:
                    q = matches.get(tok, 0.0)
                    if q > best:
                        best = q
                        if q >= 1.0:
                            break
                if best > 0.0:
                    matched_name_tokens |= {
                        t for t in entry.tokens if matches.get(t, 0.0) >= best
                    }
                qualities.append(best)
            coverage = sum(qualities) / len(q_tokens)
            if coverage == 0.0:
                continue
            completeness = len(matched_name_tokens) / max(len(entry.tokens), 1)
            name_score = coverage * (0.5 + 0.5 * completeness)
            score = FIELD_WEIGHTS[entry.kind] * name_score
            if score > entry_scores.get(entry_id, 0.0):
                entry_scores[entry_id] = score

        best_by_title: dict[str, tuple[float, int]] = {}
        for entry_id, score in entry_scores.items():
            title = self._names[entry_id].title
            if title not in best_by_title or score > best_by_title[title][0]:
                best_by_title[title] = (score, entry_id)
        ranked = sorted(best_by_title.items(), key=lambda kv: (-kv[1][0], kv[0]))
        hits = []
        for title, (score, entry_id) in ranked[:limit]:
            entry = self._names[entry_id]
            hits.append(EntityHit(self.articles[title], score, entry.kind, entry.name))
        return hits

    def _match_token(self, q_tok: str, fuzziness: int) -> dict[str, float]:
        """Index tokens matching one query token, with match quality."""
        tolerance = min(fuzziness, _length_tolerance(q_tok))
        matches: dict[str, float] = {}
        if q_tok in self._postings:
            matches[q_tok] = 1.0
        if tolerance > 0:
            for length in range(len(q_tok) - tolerance, len(q_tok) + tolerance + 1):
                for tok in self._tokens_by_len.get(length, ()):
                    if tok in matches:
                        continue
                    dist = levenshtein(q_tok, tok, max_dist=tolerance)
                    if dist <= tolerance:
                        matches[tok] = 1.0 - dist / max(len(q_tok), len(tok))
        if not matches:
            for bucket in self._tokens_by_len.values():
                for tok in bucket:
                    overlap = trigram_overlap(q_tok, tok)
                    if overlap >= 0.5:
                        matches[tok] = 0.8 * overlap
        return matches


def _length_tolerance(token: str) -> int:
    if len(token) <= 2:
        return 0
    if len(token) <= 4:
        return 1
    return 2


# --- gazetteer -------------------------------------------------------------------

# Column order of the published gazetteer dump format.
_GEONAMES_COLUMNS = 19


@dataclass(frozen=True)
class GazetteerEntry:
    geoname_id: int
    name: str
    alt_names: tuple[str, ...]
    latitude: float
    longitude: float
    feature_code: str
    country_code: str
    admin1: str
    population: int

    def __post_init__(self) -> None:
        if abs(self.latitude) > 90 or abs(self.longitude) > 180:
            raise ValueError(f"coordinates out of range for {self.name!r}")
        if self.population < 0:
            raise ValueError("population must be >= 0")


@dataclass
class GazetteerStats:
    indexed: int = 0
    malformed: int = 0
    duplicates: int = 0

    def as_dict(self) -> dict[str, int]:
        return dict(vars(self))


class Gazetteer:
    """Name-indexed offline place database."""

    def __init__(self):
        self.entries: dict[int, GazetteerEntry] = {}
        self._by_name: dict[str, set[int]] = {}
        self._by_alt: dict[str, set[int]] = {}

    def ingest_gazetteer(self, rows) -> GazetteerStats:
        """Index an iterable of tab-separated rows in the published column
        order.  Malformed rows and duplicate ids are counted and skipped."""
        stats = GazetteerStats()
        for row in rows:
            line = row.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) < _GEONAMES_COLUMNS:
                stats.malformed += 1
                continue
            try:
                entry = GazetteerEntry(
                    geoname_id=int(cols[0]),
                    name=cols[1].strip(),
                    alt_names=tuple(a.strip() for a in cols[3].split(",") if a.strip()),
                    latitude=float(cols[4]),
                    longitude=float(cols[5]),
                    feature_code=cols[7].strip(),
                    country_code=cols[8].strip(),
                    admin1=cols[10].strip(),
                    population=int(cols[14] or 0),
                )
                if not entry.name:
                    raise ValueError("empty name")
            except (ValueError, IndexError):
                stats.malformed += 1
                continue
            if entry.geoname_id in self.entries:
                stats.duplicates += 1
                continue
            self.entries[entry.geoname_id] = entry
            self._by_name.setdefault(entry.name.casefold(), set()).add(entry.geoname_id)
            for alt in entry.alt_names:
                self._by_alt.setdefault(alt.casefold(), set()).add(entry.geoname_id)
            stats.indexed += 1
        return stats

    @classmethod
    def from_path(cls, path) -> tuple["Gazetteer", GazetteerStats]:
        gaz = cls()
        with open(path, encoding="utf-8") as fh:
            stats = gaz.ingest_gazetteer(fh)
        return gaz, stats

    def search_places(self, name: str, limit: int = 10) -> list[GazetteerEntry]:
        """Candidates for a place name.

        Exact-name hits rank above alt-name hits above fuzzy hits; within a
        tier, larger populations first, then geoname id for stability.
        """
        folded = name.casefold().strip()
        if not folded:
            return []
        tiers: list[set[int]] = [
            set(self._by_name.get(folded, ())),
            set(self._by_alt.get(folded, ())),
        ]
        fuzzy: set[int] = set()
        if not tiers[0] and not tiers[1]:
            for key, ids in self._by_name.items():
                if levenshtein(folded, key, max_dist=2) <= 2:
                    fuzzy |= ids
            for key, ids in self._by_alt.items():
                if levenshtein(folded, key, max_dist=2) <= 2:
                    fuzzy |= ids
        tiers.append(fuzzy)

        seen: set[int] = set()
        out: list[GazetteerEntry] = []
        for tier in tiers:
            ranked = sorted(
                (self.entries[i] for i in tier - seen),
                key=lambda e: (-e.population, e.geoname_id),
            )
            out.extend(ranked)
            seen |= tier
            if len(out) >= limit:
                break
        return out[:limit]
