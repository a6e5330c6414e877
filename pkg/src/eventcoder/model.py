"""Shared data model: documents, spans, scored labels, event records, and the
data-driven coding ontology.

Everything here is immutable after construction so instances can be shared
freely across worker threads.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, field, replace

import yaml


class OntologyError(ValueError):
    """Raised when an ontology config fails structural validation."""


ATTRIBUTES = ("ACTOR", "RECIP", "LOCATION", "DATE")


@dataclass(frozen=True)
class Document:
    """One news story moving through the pipeline.

    ``raw_text`` is the story as ingested.  ``cleaned_text`` is set by
    preprocessing (datelines and boilerplate stripped, possibly with negated
    sentences removed) and ``coded_text`` is its first-1024-character prefix,
    the text actually shown to classifiers and the QA model.
    """

    id: str
    publication_date: dt.date
    source: str = ""
    headline: str = ""
    raw_text: str = ""
    cleaned_text: str = ""
    coded_text: str = ""

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("document id must be nonempty")
        if not isinstance(self.publication_date, dt.date):
            raise ValueError("publication_date must be a datetime.date")
        if self.coded_text and not self.cleaned_text.startswith(self.coded_text):
            raise ValueError("coded_text must be a prefix of cleaned_text")

    def with_text(self, cleaned_text: str, coded_text: str) -> "Document":
        return replace(self, cleaned_text=cleaned_text, coded_text=coded_text)


@dataclass(frozen=True)
class Span:
    """A phrase extracted from a document.

    Offsets index into the document's ``coded_text``.  Synthetic spans (for
    example, entries replayed from a recorded answer file) may omit offsets.
    """

    text: str
    char_start: int | None = None
    char_end: int | None = None

    def __post_init__(self) -> None:
        if (self.char_start is None) != (self.char_end is None):
            raise ValueError("char_start and char_end must be set together")
        if self.char_start is not None and self.char_start >= self.char_end:
            raise ValueError("char_start must be < char_end")

    def has_offsets(self) -> bool:
        return self.char_start is not None

    def overlaps(self, other: "Span") -> bool:
        """True when both spans carry offsets and share >= 1 character."""
        if not self.has_offsets() or not other.has_offsets():
            return False
        return self.char_start < other.char_end and other.char_start < self.char_end


@dataclass(frozen=True)
class ScoredLabel:
    """A (label, classifier score) pair from one binary scorer.

    ``score`` is carried raw in whatever range the backend declares; the
    ``positive`` flag reflects the backend's own decision boundary, before any
    percentile calibration is applied.
    """

    label: str
    score: float
    positive: bool

    def __post_init__(self) -> None:
        if not (self.score == self.score and abs(self.score) != float("inf")):
            raise ValueError(f"score for {self.label!r} is not finite")


@dataclass(frozen=True)
class AttributeSet:
    """The spans assigned to one event's attribute slots.

    ``assignment_score`` is the total of the optimal linear-sum assignment the
    slots were drawn from (before any per-attribute floor was applied).
    """

    actor: Span | None = None
    second_actor: Span | None = None
    recipient: Span | None = None
    location: Span | None = None
    date: Span | None = None
    assignment_score: float = 0.0

    def filled(self) -> dict[str, Span]:
        out = {}
        for name in ("actor", "second_actor", "recipient", "location", "date"):
            span = getattr(self, name)
            if span is not None:
                out[name] = span
        return out


@dataclass(frozen=True)
class EventRecord:
    """One coded event: who did what to whom, where and when.

    ``provenance`` maps pipeline stage -> backend identifier/version string.
    ``resolution`` carries the post-extraction results (actor codes, resolved
    entities, gazetteer entry, resolved date) keyed by slot; its exact layout
    is documented in docs/file_formats.md.
    """

    doc_id: str
    category: str
    mode: str | None = None
    contexts: frozenset[str] = frozenset()
    attributes: AttributeSet = field(default_factory=AttributeSet)
    category_score: float = 0.0
    provenance: dict[str, str] = field(default_factory=dict)
    resolution: dict[str, dict] = field(default_factory=dict)


@dataclass(frozen=True)
class Ontology:
    """The coding scheme: categories, per-category modes, contexts and
    per-category attribute multiplicity rules.

    The ontology is data, not code: it is loaded from a YAML config so the
    pipeline can be retargeted to other coding schemes without touching the
    coder itself.
    """

    categories: frozenset[str]
    modes_by_category: dict[str, tuple[str, ...]]
    contexts: frozenset[str]
    attribute_rules: dict[str, "AttributeRules"]

    def modes_for(self, category: str) -> tuple[str, ...]:
        return self.modes_by_category.get(category, ())

    def rules_for(self, category: str) -> "AttributeRules":
        return self.attribute_rules[category]


@dataclass(frozen=True)
class AttributeRules:
    """Attribute multiplicity rules for one category.

    ``dual_actor`` permits a second actor span to occupy the recipient's
    place, leaving the recipient slot empty (meetings and agreements read as
    symmetric in news prose).
    """

    dual_actor: bool = False


def load_ontology(config_doc: str) -> Ontology:
    """Parse and validate an ontology config.

    ``config_doc`` is YAML text with four sections: ``categories`` (list),
    ``modes`` (map category -> list), ``contexts`` (list) and
    ``attribute_rules`` (map category -> {dual_actor: bool}).  Categories
    missing from ``attribute_rules`` get the default rules.

    Raises OntologyError on parse failure, duplicate names, or a mode block
    naming a category that does not exist.
    """
    try:
        raw = yaml.safe_load(config_doc)
    except yaml.YAMLError as exc:
        raise OntologyError(f"ontology config does not parse: {exc}") from exc
    if not isinstance(raw, dict):
        raise OntologyError("ontology config must be a mapping")

    categories = _unique_names(raw.get("categories") or [], "category")
    contexts = _unique_names(raw.get("contexts") or [], "context")

    modes_raw = raw.get("modes") or {}
    if not isinstance(modes_raw, dict):
        raise OntologyError("'modes' must map category -> mode list")
    modes_by_category: dict[str, tuple[str, ...]] = {c: () for c in categories}
    for cat, mode_list in modes_raw.items():
        if cat not in categories:
            raise OntologyError(f"orphan mode block: category {cat!r} is not declared")
        modes = _unique_names(mode_list or [], f"mode under {cat}")
        modes_by_category[cat] = tuple(modes)

    rules_raw = raw.get("attribute_rules") or {}
    if not isinstance(rules_raw, dict):
        raise OntologyError("'attribute_rules' must be a mapping")
    attribute_rules: dict[str, AttributeRules] = {}
    for cat in categories:
        entry = rules_raw.get(cat, {})
        if not isinstance(entry, dict):
            raise OntologyError(f"attribute_rules[{cat!r}] must be a mapping")
        attribute_rules[cat] = AttributeRules(dual_actor=bool(entry.get("dual_actor", False)))
    for cat in rules_raw:
        if cat not in categories:
            raise OntologyError(f"attribute_rules names unknown category {cat!r}")

    return Ontology(
        categories=frozenset(categories),
        modes_by_category=modes_by_category,
        contexts=frozenset(contexts),
        attribute_rules=attribute_rules,
    )


def serialize_ontology(ont: Ontology) -> str:
    """Inverse of load_ontology: emit YAML that parses to an equal Ontology."""
    doc = {
        "categories": sorted(ont.categories),
        "modes": {c: list(m) for c, m in sorted(ont.modes_by_category.items()) if m},
        "contexts": sorted(ont.contexts),
        "attribute_rules": {
            c: {"dual_actor": r.dual_actor}
            for c, r in sorted(ont.attribute_rules.items())
            if r != AttributeRules()
        },
    }
    return yaml.safe_dump(doc, sort_keys=True)


def _unique_names(items: object, what: str) -> list[str]:
    if not isinstance(items, list):
        raise OntologyError(f"{what} section must be a list")
    names: list[str] = []
    seen = set()
    for item in items:
        name = str(item).strip()
        if not name:
            raise OntologyError(f"empty {what} name")
        if name in seen:
            raise OntologyError(f"duplicate {what} name {name!r}")
        seen.add(name)
        names.append(name)
    return names


def validate_record(rec: EventRecord, ont: Ontology) -> list[str]:
    """Check an event record against the ontology.

    Returns a list of violations; an empty list means the record is valid.
    Violations are returned rather than raised so callers can log and count
    them per batch.
    """
    violations: list[str] = []
    if rec.category not in ont.categories:
        violations.append(f"category {rec.category!r} not in ontology")
    else:
        if rec.mode is not None and rec.mode not in ont.modes_for(rec.category):
            violations.append(f"mode {rec.mode!r} not a mode of {rec.category}")
        rules = ont.rules_for(rec.category)
        if rec.attributes.second_actor is not None:
            if not rules.dual_actor:
                violations.append(f"second actor not allowed for {rec.category}")
            if rec.attributes.recipient is not None:
                violations.append("second actor may only replace the recipient")
    for ctx in rec.contexts:
        if ctx not in ont.contexts:
            violations.append(f"context {ctx!r} not in ontology")
    filled = rec.attributes.filled()
    texts = [s.text for s in filled.values()]
    if len(set(texts)) != len(texts):
        violations.append("the same span fills more than one attribute")
    return violations
