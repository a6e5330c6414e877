"""End-to-end orchestration: documents in, event records out.

The per-document flow: clean and truncate, keep/drop filters, negated-sentence
removal, category scoring and thresholding, mode and context scoring with the
keyword post-filter, QA attribute extraction per event, actor/recipient
resolution and coding, geolocation, date resolution, validation, emit.

Documents are processed in parallel batches; results are collected in input
order, so output is byte-identical at any worker count.  Checkpoints after
each batch make multi-hour runs resumable.
"""

from __future__ import annotations

import concurrent.futures
import datetime as dt
import json
import logging
from dataclasses import dataclass, field
from importlib import resources as importlib_resources
from pathlib import Path

import yaml

from . import attribute as attr_mod
from . import preprocess
from .actors import AgentMatcher, CountryTable, code_actor, load_agent_file
from .backends import (BackendError, BinaryScorer, CharNgramEmbedder,
                       HeuristicQABackend, LexiconClassifier, RecordedQABackend,
                       ServiceClassifier, ServiceEmbedder, ServiceQA)
from .classify import (CalibrationTable, KeywordFilter, Namespace, ScorerSet,
                       apply_threshold, keyword_postfilter, score_labels)
from .entity import ResolutionMethod, resolve_entity
from .geo import (GazetteerMentionAnnotator, GeoWeights, extract_place_mentions,
                  resolve_location, select_event_location)
from .kb import EntityIndex, Gazetteer
from .model import Document, EventRecord, Ontology, load_ontology, validate_record
from .dates import resolve_date

logger = logging.getLogger(__name__)

PIPELINE_VERSION = "0.1.0"


class ConfigError(ValueError):
    """Bad pipeline configuration (missing file, unknown backend spec)."""


def _packaged(name: str) -> str:
    return (importlib_resources.files("eventcoder") / "data" / name).read_text(encoding="utf-8")


@dataclass
class PipelineConfig:
    """Paths and knobs for a coding run.

    Backend specs are "builtin", "recorded:<path>" (QA only) or a service base
    URL ("http://host:port").  Unset paths fall back to the packaged defaults.
    """

    ontology_path: str | None = None
    clean_rules_path: str | None = None
    templates_path: str | None = None
    agent_file_path: str | None = None
    country_table_path: str | None = None
    keyword_filters_path: str | None = None
    calibration_path: str | None = None
    geo_weights_path: str | None = None
    category_lexicon_path: str | None = None
    mode_lexicon_path: str | None = None
    context_lexicon_path: str | None = None
    story_filter_lexicon_path: str | None = None
    entity_index_path: str | None = None
    gazetteer_path: str | None = None
    classifier_backend: str = "builtin"
    qa_backend: str = "builtin"
    embedder_backend: str = "builtin"
    attribute_floor: float = attr_mod.DEFAULT_ATTRIBUTE_FLOOR
    entity_threshold: float = 0.6
    actor_threshold: float = 0.5
    geo_floor: float = 0.2
    candidate_count: int = 10
    workers: int = 1
    batch_size: int = 500
    drop_us_domestic: bool = True

    @classmethod
    def from_yaml(cls, path: str | Path) -> "PipelineConfig":
        path = Path(path)
        try:
            raw = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
        except (OSError, yaml.YAMLError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls(**raw)
        cfg.validate(base_dir=path.parent)
        return cfg

    def validate(self, base_dir: Path | None = None) -> None:
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if self.batch_size < 1:
            raise ConfigError("batch_size must be >= 1")
        for name in (
            "ontology_path", "clean_rules_path", "templates_path",
            "agent_file_path", "country_table_path", "keyword_filters_path",
            "calibration_path", "geo_weights_path", "category_lexicon_path",
            "mode_lexicon_path", "context_lexicon_path",
            "story_filter_lexicon_path", "entity_index_path", "gazetteer_path",
        ):
            value = getattr(self, name)
            if value is None:
                continue
            resolved = Path(value)
            if base_dir is not None and not resolved.is_absolute():
                resolved = base_dir / resolved
                setattr(self, name, str(resolved))
            if not resolved.exists():
                raise ConfigError(f"{name} does not exist: {resolved}")


def _read(path: str | None, default_name: str) -> str:
    if path is None:
        return _packaged(default_name)
    return Path(path).read_text(encoding="utf-8")


def _index_file(path: str, record_name: str) -> Path:
    """Accept either a bare record file or a versioned index directory."""
    from .kb import INDEX_FORMAT_VERSION

    p = Path(path)
    if not p.is_dir():
        return p
    meta_path = p / "meta.yaml"
    if meta_path.exists():
        meta = yaml.safe_load(meta_path.read_text(encoding="utf-8")) or {}
        version = int(meta.get("format_version", 1))
        if version > INDEX_FORMAT_VERSION:
            raise ConfigError(
                f"index {p} uses layout version {version}; "
                f"this build reads up to {INDEX_FORMAT_VERSION}")
    return p / record_name


class Coder:
    """All loaded components for a run, shared read-only across workers."""

    def __init__(self, config: PipelineConfig):
        self.config = config
        self.ontology: Ontology = load_ontology(_read(config.ontology_path, "ontology.yaml"))
        self.clean_rules = preprocess.load_clean_rules(
            _read(config.clean_rules_path, "clean_rules.yaml"))
        self.templates = attr_mod.TemplateBank.from_text(
            _read(config.templates_path, "templates.tsv"))
        self.country_table = CountryTable.from_yaml(
            _read(config.country_table_path, "countries.yaml"))
        self.keyword_filter = KeywordFilter.from_text(
            _read(config.keyword_filters_path, "keyword_filters.txt"))
        self.geo_weights = GeoWeights.from_yaml(
            _read(config.geo_weights_path, "geo_weights.yaml"))
        if config.calibration_path:
            self.calibration = CalibrationTable.from_yaml(
                Path(config.calibration_path).read_text(encoding="utf-8"))
        else:
            self.calibration = CalibrationTable(entries={})

        self.embedder = self._build_embedder(config.embedder_backend)
        self.qa = self._build_qa(config.qa_backend)
        self._build_classifiers(config.classifier_backend)

        story_lex = LexiconClassifier.from_text(
            _read(config.story_filter_lexicon_path, "lexicons/story_filters.txt"))
        self.crime_scorer = BinaryScorer(story_lex, "crime")
        self.disaster_scorer = BinaryScorer(story_lex, "disaster")
        self.financial_scorer = BinaryScorer(story_lex, "financial")

        self.agents = AgentMatcher(
            load_agent_file(_read(config.agent_file_path, "agents.txt")), self.embedder)

        if config.entity_index_path:
            self.kb, _ = EntityIndex.from_jsonl(
                _index_file(config.entity_index_path, "articles.jsonl"))
        else:
            self.kb = EntityIndex()
        if config.gazetteer_path:
            self.gazetteer, _ = Gazetteer.from_path(
                _index_file(config.gazetteer_path, "places.tsv"))
        else:
            self.gazetteer = Gazetteer()
        self.place_annotator = GazetteerMentionAnnotator(self.gazetteer)
        self.negation_annotator = preprocess.RegexNegationAnnotator()

    # --- backend wiring ---

    def _build_embedder(self, spec: str):
        if spec == "builtin":
            return CharNgramEmbedder()
        if spec.startswith("http"):
            return ServiceEmbedder(spec)
        raise ConfigError(f"unknown embedder backend {spec!r}")

    def _build_qa(self, spec: str):
        if spec == "builtin":
            return HeuristicQABackend()
        if spec.startswith("recorded:"):
            return RecordedQABackend.from_path(spec.split(":", 1)[1])
        if spec.startswith("http"):
            return ServiceQA(spec)
        raise ConfigError(f"unknown QA backend {spec!r}")

    def _build_classifiers(self, spec: str) -> None:
        if spec == "builtin":
            cat = LexiconClassifier.from_text(
                _read(self.config.category_lexicon_path, "lexicons/categories.txt"))
            mode = LexiconClassifier.from_text(
                _read(self.config.mode_lexicon_path, "lexicons/modes.txt"))
            ctx = LexiconClassifier.from_text(
                _read(self.config.context_lexicon_path, "lexicons/contexts.txt"))
            self.category_backend, self.mode_backend, self.context_backend = cat, mode, ctx
        elif spec.startswith("http"):
            client = ServiceClassifier(spec)
            self.category_backend = self.mode_backend = self.context_backend = client
        else:
            raise ConfigError(f"unknown classifier backend {spec!r}")

    # --- per-document coding ---

    def code_document(self, doc: Document) -> "CodedDoc":
        try:
            return self._code(doc)
        except BackendError:
            raise
        except Exception as exc:
            logger.exception("document %s failed", doc.id)
            return CodedDoc(doc.id, error=f"{type(exc).__name__}: {exc}")

    def _code(self, doc: Document) -> "CodedDoc":
        cfg = self.config
        try:
            doc = preprocess.prepare_text(doc, self.clean_rules)
        except preprocess.EmptyAfterCleaning:
            return CodedDoc(doc.id, drop_reason="empty")
        verdict = preprocess.filter_story(
            doc, self.clean_rules, crime_scorer=self.crime_scorer,
            disaster_scorer=self.disaster_scorer, financial_scorer=self.financial_scorer)
        if not verdict.keep:
            return CodedDoc(doc.id, drop_reason=verdict.reason.value)
        cleaned = preprocess.remove_negated_sentences(doc.cleaned_text,
                                                      self.negation_annotator)
        if not cleaned.strip():
            return CodedDoc(doc.id, drop_reason="empty")
        doc = doc.with_text(cleaned, preprocess.truncate_coded(cleaned))

        positives: dict[str, list[list]] = {}
        cat_set = ScorerSet(Namespace.CATEGORY, tuple(sorted(self.ontology.categories)),
                            self.category_backend)
        cat_scored = score_labels(doc.coded_text, cat_set)
        positives["category"] = [[s.label, s.score] for s in cat_scored if s.positive]
        cat_kept = keyword_postfilter(
            apply_threshold(cat_scored, self.calibration), doc.coded_text,
            self.keyword_filter)
        if not cat_kept:
            return CodedDoc(doc.id, positives=positives)

        contexts = self._contexts(doc, positives)
        records = []
        wholly_us = []
        for cat_label in sorted(cat_kept, key=lambda s: (-s.score, s.label)):
            record = self._code_event(doc, cat_label, contexts, positives)
            if record is None:
                continue
            if cfg.drop_us_domestic and self._is_wholly_us(record):
                wholly_us.append(record)
                continue
            records.append(record)
        if not records and wholly_us:
            return CodedDoc(doc.id, drop_reason=preprocess.DropReason.US_DOMESTIC_PENDING.value,
                            positives=positives)
        return CodedDoc(doc.id, records=records, positives=positives)

    def _contexts(self, doc: Document, positives: dict) -> frozenset[str]:
        ctx_set = ScorerSet(Namespace.CONTEXT, tuple(sorted(self.ontology.contexts)),
                            self.context_backend)
        scored = score_labels(doc.coded_text, ctx_set)
        positives["context"] = [[s.label, s.score] for s in scored if s.positive]
        kept = keyword_postfilter(apply_threshold(scored, self.calibration),
                                  doc.coded_text, self.keyword_filter)
        return frozenset(s.label for s in kept)

    def _mode_for(self, doc: Document, category: str, positives: dict) -> str | None:
        modes = self.ontology.modes_for(category)
        if not modes:
            return None
        labels = tuple(f"{category}-{m}" for m in modes)
        mode_set = ScorerSet(Namespace.MODE, labels, self.mode_backend)
        scored = score_labels(doc.coded_text, mode_set)
        positives.setdefault("mode", []).extend(
            [s.label, s.score] for s in scored if s.positive)
        kept = keyword_postfilter(apply_threshold(scored, self.calibration),
                                  doc.coded_text, self.keyword_filter)
        if not kept:
            return None
        best = max(kept, key=lambda s: (s.score, s.label))
        return best.label.split("-", 1)[1]

    def _code_event(self, doc: Document, cat_label, contexts, positives) -> EventRecord | None:
        cfg = self.config
        category = cat_label.label
        mode = self._mode_for(doc, category, positives)
        rules = self.ontology.rules_for(category)
        attrs = attr_mod.extract_attributes(
            doc, category, mode, self.qa, self.templates, rules,
            floor=cfg.attribute_floor)

        resolution: dict[str, dict] = {}
        for slot in ("actor", "second_actor", "recipient"):
            span = getattr(attrs, slot)
            if span is None:
                continue
            resolution[slot] = self._code_actor_slot(span, doc.publication_date)

        doc_mentions = extract_place_mentions(doc.cleaned_text, self.place_annotator)
        resolved_places = [
            resolve_location(m, doc_mentions, self.gazetteer, self.geo_weights,
                             floor=cfg.geo_floor)
            for m in doc_mentions
        ]
        event_loc = select_event_location(resolved_places, attrs.location)
        if event_loc is not None:
            entry = event_loc.entry
            resolution["location"] = {
                "geoname_id": entry.geoname_id, "name": entry.name,
                "country": entry.country_code, "admin1": entry.admin1,
                "latitude": entry.latitude, "longitude": entry.longitude,
                "score": round(event_loc.score, 6),
            }
        if attrs.date is not None:
            resolved_date = resolve_date(attrs.date.text, doc.publication_date)
            if resolved_date is not None:
                resolution["date"] = {
                    "date": resolved_date.date.isoformat(),
                    "granularity": resolved_date.granularity.value,
                    "raw": resolved_date.raw,
                }

        record = EventRecord(
            doc_id=doc.id, category=category, mode=mode, contexts=contexts,
            attributes=attrs, category_score=cat_label.score,
            provenance={
                "category_scorer": _backend_id(self.category_backend),
                "mode_scorer": _backend_id(self.mode_backend),
                "context_scorer": _backend_id(self.context_backend),
                "qa": _backend_id(self.qa),
                "embedder": _backend_id(self.embedder),
                "pipeline": PIPELINE_VERSION,
            },
            resolution=resolution,
        )
        violations = validate_record(record, self.ontology)
        if violations:
            logger.warning("record for %s/%s invalid: %s", doc.id, category, violations)
            return None
        return record

    def _code_actor_slot(self, span, story_date: dt.date) -> dict:
        cfg = self.config
        resolved = None
        if self._looks_proper(span.text):
            resolved = resolve_entity(span, self.kb, self.embedder,
                                      k=cfg.candidate_count,
                                      threshold=cfg.entity_threshold)
            if resolved.method is ResolutionMethod.UNRESOLVED:
                resolved = None
        code = code_actor(span, resolved, story_date, self.agents,
                          self.country_table, threshold=cfg.actor_threshold)
        out = {
            "text": span.text, "country": code.country, "category": code.category,
            "code": code.as_text(), "basis": code.basis.value,
        }
        if resolved is not None:
            out["entity"] = resolved.article_title
            out["entity_method"] = resolved.method.value
            out["entity_confidence"] = round(resolved.confidence, 6)
        return out

    def _looks_proper(self, text: str) -> bool:
        """Candidate for knowledge-base resolution: any capitalized token that
        is not a country/demonym term (those go straight to the agent file)."""
        for token in text.split():
            stripped = token.strip(".,;:'\"()")
            if stripped[:1].isupper() and self.country_table.code_for(stripped) is None:
                return True
        return False

    def _is_wholly_us(self, record: EventRecord) -> bool:
        countries = set()
        for slot in ("actor", "second_actor", "recipient"):
            info = record.resolution.get(slot)
            if info and info.get("country"):
                countries.add(info["country"])
        loc = record.resolution.get("location")
        if loc and loc.get("country"):
            countries.add("USA" if loc["country"] == "US" else loc["country"])
        return bool(countries) and countries == {"USA"}


def _backend_id(backend) -> str:
    return f"{getattr(backend, 'name', 'backend')}@{getattr(backend, 'version', '?')}"


@dataclass
class CodedDoc:
    doc_id: str
    records: list[EventRecord] = field(default_factory=list)
    drop_reason: str | None = None
    positives: dict[str, list] = field(default_factory=dict)
    error: str | None = None


@dataclass
class RunReport:
    total_docs: int = 0
    emitted_records: int = 0
    dropped: dict[str, int] = field(default_factory=dict)
    failed: list[tuple[str, str]] = field(default_factory=list)
    zero_event_docs: int = 0
    stored_positives: dict[str, dict] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "total_docs": self.total_docs,
            "emitted_records": self.emitted_records,
            "dropped": dict(sorted(self.dropped.items())),
            "failed": [list(f) for f in self.failed],
            "zero_event_docs": self.zero_event_docs,
        }


# --- document and record serialization ---------------------------------------------


def parse_document(line: str) -> Document:
    raw = json.loads(line)
    return Document(
        id=str(raw["id"]),
        publication_date=dt.date.fromisoformat(str(raw["date"])),
        source=raw.get("source", ""),
        headline=raw.get("headline", ""),
        raw_text=raw["text"],
    )


def read_documents(path: str | Path):
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                yield parse_document(line)


def _span_dict(span) -> dict | None:
    if span is None:
        return None
    return {"text": span.text, "char_start": span.char_start, "char_end": span.char_end}


def record_to_dict(rec: EventRecord) -> dict:
    return {
        "doc_id": rec.doc_id,
        "category": rec.category,
        "mode": rec.mode,
        "contexts": sorted(rec.contexts),
        "category_score": round(rec.category_score, 6),
        "attributes": {
            "actor": _span_dict(rec.attributes.actor),
            "second_actor": _span_dict(rec.attributes.second_actor),
            "recipient": _span_dict(rec.attributes.recipient),
            "location": _span_dict(rec.attributes.location),
            "date": _span_dict(rec.attributes.date),
            "assignment_score": round(rec.attributes.assignment_score, 6),
        },
        "resolution": rec.resolution,
        "provenance": rec.provenance,
    }


def record_to_line(rec: EventRecord) -> str:
    return json.dumps(record_to_dict(rec), sort_keys=True, ensure_ascii=False)


# --- the run loop -------------------------------------------------------------------


def run_pipeline(
    docs,
    coder: Coder,
    out_path: str | Path | None = None,
    checkpoint_path: str | Path | None = None,
    resume: bool = False,
    sort_output: bool = False,
) -> tuple[list[EventRecord], RunReport]:
    """Code a document stream.

    Per-document failures are isolated and counted; a BackendError aborts the
    batch after writing a checkpoint so the run can resume.  Output order
    equals input order at any worker count (results are collected in
    submission order); ``sort_output`` additionally sorts by doc id.
    """
    docs = list(docs)
    report = RunReport(total_docs=len(docs))
    start_index = 0
    if resume and checkpoint_path and Path(checkpoint_path).exists():
        state = json.loads(Path(checkpoint_path).read_text(encoding="utf-8"))
        start_index = int(state.get("next_index", 0))
        logger.info("resuming at document %d", start_index)

    all_records: list[EventRecord] = []
    out_fh = None
    if out_path is not None:
        out_fh = open(out_path, "a" if start_index else "w", encoding="utf-8")
    try:
        cfg = coder.config
        for batch_start in range(start_index, len(docs), cfg.batch_size):
            batch = docs[batch_start:batch_start + cfg.batch_size]
            try:
                coded = _run_batch(batch, coder, cfg.workers)
            except BackendError:
                _write_checkpoint(checkpoint_path, batch_start)
                raise
            batch_records: list[EventRecord] = []
            for cd in coded:
                if cd.error is not None:
                    report.failed.append((cd.doc_id, cd.error))
                    continue
                if cd.positives:
                    report.stored_positives[cd.doc_id] = cd.positives
                if cd.drop_reason is not None:
                    report.dropped[cd.drop_reason] = report.dropped.get(cd.drop_reason, 0) + 1
                    continue
                if not cd.records:
                    report.zero_event_docs += 1
                    continue
                batch_records.extend(cd.records)
            all_records.extend(batch_records)
            if out_fh is not None and not sort_output:
                for rec in batch_records:
                    out_fh.write(record_to_line(rec) + "\n")
                out_fh.flush()
            _write_checkpoint(checkpoint_path, batch_start + len(batch))
        if sort_output:
            all_records.sort(key=lambda r: (r.doc_id, r.category, r.mode or ""))
            if out_fh is not None:
                for rec in all_records:
                    out_fh.write(record_to_line(rec) + "\n")
    finally:
        if out_fh is not None:
            out_fh.close()
    report.emitted_records = len(all_records)
    return all_records, report


def _run_batch(batch: list[Document], coder: Coder, workers: int) -> list[CodedDoc]:
    if workers <= 1:
        return [coder.code_document(d) for d in batch]
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(coder.code_document, d) for d in batch]
        return [f.result() for f in futures]


def _write_checkpoint(path, next_index: int) -> None:
    if path is None:
        return
    Path(path).write_text(json.dumps({"next_index": next_index}), encoding="utf-8")


# --- evaluation ---------------------------------------------------------------------

EVAL_TASKS = ("category", "mode", "context", "geolocation-admin1")


@dataclass
class EvalReport:
    task: str
    per_label: dict[str, dict] = field(default_factory=dict)
    macro: dict[str, float] = field(default_factory=dict)
    weighted: dict[str, float] = field(default_factory=dict)
    confusion: dict[str, dict[str, int]] | None = None
    excluded_undetected: int = 0

    def as_dict(self) -> dict:
        out = {
            "task": self.task,
            "per_label": self.per_label,
            "macro": self.macro,
            "weighted": self.weighted,
        }
        if self.confusion is not None:
            out["confusion"] = self.confusion
            out["excluded_undetected"] = self.excluded_undetected
        return out


def _labels_for(task: str, records: list[dict]) -> dict[str, set[str]]:
    by_doc: dict[str, set[str]] = {}
    for rec in records:
        doc = by_doc.setdefault(rec["doc_id"], set())
        if task == "category":
            doc.add(rec["category"])
        elif task == "mode":
            if rec.get("mode"):
                doc.add(f"{rec['category']}-{rec['mode']}")
        elif task == "context":
            doc.update(rec.get("contexts") or ())
    return by_doc


def _admin1_for(records: list[dict]) -> dict[str, str | None]:
    by_doc: dict[str, str | None] = {}
    for rec in records:
        doc_id = rec["doc_id"]
        loc = (rec.get("resolution") or {}).get("location")
        admin1 = loc.get("admin1") if loc else None
        if by_doc.get(doc_id) is None:
            by_doc[doc_id] = admin1
    return by_doc


def evaluate(predicted: list[dict], gold: list[dict], task: str) -> EvalReport:
    """Standard P/R/F1 against gold records; admin1 confusion for geolocation.

    Both sides must cover the same document ids.  A gold label never predicted
    reports precision 0 (undefined-as-zero, noted in the per-label entry).
    """
    if task not in EVAL_TASKS:
        raise ValueError(f"unknown task {task!r}; expected one of {EVAL_TASKS}")
    pred_ids = {r["doc_id"] for r in predicted}
    gold_ids = {r["doc_id"] for r in gold}
    if pred_ids != gold_ids:
        only_pred = sorted(pred_ids - gold_ids)[:20]
        only_gold = sorted(gold_ids - pred_ids)[:20]
        raise ValueError(
            f"document universes differ: only in predicted {only_pred}, "
            f"only in gold {only_gold}")

    if task == "geolocation-admin1":
        return _evaluate_admin1(predicted, gold)

    pred_by_doc = _labels_for(task, predicted)
    gold_by_doc = _labels_for(task, gold)
    labels = sorted(set().union(*gold_by_doc.values(), *pred_by_doc.values())
                    if gold_by_doc or pred_by_doc else set())
    report = EvalReport(task=task)
    supports, f1s, precisions, recalls = [], [], [], []
    for label in labels:
        tp = fp = fn = 0
        for doc_id in gold_ids:
            in_pred = label in pred_by_doc.get(doc_id, set())
            in_gold = label in gold_by_doc.get(doc_id, set())
            tp += in_pred and in_gold
            fp += in_pred and not in_gold
            fn += in_gold and not in_pred
        support = tp + fn
        precision = tp / (tp + fp) if (tp + fp) else 0.0
        recall = tp / support if support else 0.0
        f1 = 2 * precision * recall / (precision + recall) if (precision + recall) else 0.0
        entry = {"precision": round(precision, 6), "recall": round(recall, 6),
                 "f1": round(f1, 6), "support": support}
        if (tp + fp) == 0:
            entry["note"] = "no predictions; precision reported as 0"
        report.per_label[label] = entry
        supports.append(support)
        precisions.append(precision)
        recalls.append(recall)
        f1s.append(f1)
    n = len(labels)
    total_support = sum(supports)
    if n:
        report.macro = {
            "precision": round(sum(precisions) / n, 6),
            "recall": round(sum(recalls) / n, 6),
            "f1": round(sum(f1s) / n, 6),
        }
    if total_support:
        report.weighted = {
            "precision": round(sum(p * s for p, s in zip(precisions, supports)) / total_support, 6),
            "recall": round(sum(r * s for r, s in zip(recalls, supports)) / total_support, 6),
            "f1": round(sum(f * s for f, s in zip(f1s, supports)) / total_support, 6),
        }
    return report


def _evaluate_admin1(predicted: list[dict], gold: list[dict]) -> EvalReport:
    pred_by_doc = _admin1_for(predicted)
    gold_by_doc = _admin1_for(gold)
    confusion: dict[str, dict[str, int]] = {}
    excluded = 0
    for doc_id, gold_admin in gold_by_doc.items():
        if gold_admin is None:
            continue
        pred_admin = pred_by_doc.get(doc_id)
        if pred_admin is None:
            excluded += 1
            continue
        row = confusion.setdefault(gold_admin, {})
        row[pred_admin] = row.get(pred_admin, 0) + 1
    report = EvalReport(task="geolocation-admin1", confusion=confusion,
                        excluded_undetected=excluded)
    correct = sum(confusion.get(a, {}).get(a, 0) for a in confusion)
    total = sum(sum(row.values()) for row in confusion.values())
    if total:
        report.macro = {"accuracy": round(correct / total, 6)}
    return report
