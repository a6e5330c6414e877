"""Event attribute extraction: question rendering, three-round extractive QA,
score aggregation and optimal span-to-attribute assignment.

Each event/mode pair carries a bank of question templates.  Round 1 asks
generic questions; rounds 2 and 3 re-ask with the provisional actors and
recipients substituted in, which sharpens recipient identification in
particular.  All candidate answers from all rounds are pooled, scores are
summed per (span text, attribute), and a linear-sum assignment picks the best
one-to-one span/attribute matching.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linear_sum_assignment

from .model import ATTRIBUTES, AttributeRules, AttributeSet, Document, Span

logger = logging.getLogger(__name__)

ACTOR_PLACEHOLDER = "{actor_text}"
RECIP_PLACEHOLDER = "{recip_text}"

DEFAULT_ATTRIBUTE_FLOOR = 0.1
MAX_PRIORS_PER_ROUND = 2  # conditioned questions grow combinatorially; cap the seeds


@dataclass(frozen=True)
class QuestionTemplate:
    """One line of the template file.

    ``mode`` may be "*" for category-level generic templates, used when an
    event's mode has no templates of its own.
    """

    category: str
    mode: str
    attribute: str
    round: int
    text: str

    def __post_init__(self) -> None:
        if self.attribute not in ATTRIBUTES:
            raise ValueError(f"unknown attribute {self.attribute!r}")
        if self.round not in (1, 2, 3):
            raise ValueError("round must be 1, 2 or 3")
        has_placeholder = ACTOR_PLACEHOLDER in self.text or RECIP_PLACEHOLDER in self.text
        if self.round == 1 and has_placeholder:
            raise ValueError(f"round-1 template may not carry placeholders: {self.text!r}")
        if self.round > 1 and not has_placeholder:
            raise ValueError(f"round-{self.round} template needs a placeholder: {self.text!r}")

    def placeholders(self) -> tuple[str, ...]:
        out = []
        if ACTOR_PLACEHOLDER in self.text:
            out.append("ACTOR")
        if RECIP_PLACEHOLDER in self.text:
            out.append("RECIP")
        return tuple(out)


class TemplateBank:
    """All question templates, indexed by (category, mode)."""

    def __init__(self, templates: list[QuestionTemplate]):
        self._by_key: dict[tuple[str, str], list[QuestionTemplate]] = {}
        for t in templates:
            self._by_key.setdefault((t.category, t.mode), []).append(t)

    @classmethod
    def from_text(cls, text: str) -> "TemplateBank":
        """Parse the tab-separated template file.

        Columns: category, mode (or *), attribute, round, question text.
        """
        templates = []
        for lineno, line in enumerate(text.splitlines(), 1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 5:
                raise ValueError(f"template line {lineno}: expected 5 tab-separated fields")
            cat, mode, attr, rnd, qtext = (p.strip() for p in parts)
            try:
                templates.append(QuestionTemplate(cat, mode, attr, int(rnd), qtext))
            except ValueError as exc:
                raise ValueError(f"template line {lineno}: {exc}") from exc
        return cls(templates)

    def lookup(self, category: str, mode: str | None) -> list[QuestionTemplate]:
        """Templates for the event, falling back to the category's generic
        ("*" mode) bank when the specific mode has none."""
        if mode is not None:
            specific = self._by_key.get((category, mode))
            if specific:
                return specific
        return self._by_key.get((category, "*"), [])

    def coverage(self) -> set[tuple[str, str]]:
        return set(self._by_key)


@dataclass(frozen=True)
class RenderedQuestion:
    text: str
    attribute: str
    round: int
    question_id: str


@dataclass(frozen=True)
class QACandidate:
    """One answer span proposed for one attribute by one question."""

    span: Span
    attribute: str
    score: float
    question_id: str
    round: int

    def __post_init__(self) -> None:
        if not (self.score == self.score and abs(self.score) != float("inf")):
            raise ValueError("candidate score must be finite")


def render_questions(
    category: str,
    mode: str | None,
    round_no: int,
    prior: dict[str, list[str]],
    templates: TemplateBank,
) -> list[RenderedQuestion]:
    """Instantiate the round's templates, substituting prior answers.

    ``prior`` maps attribute name ("ACTOR"/"RECIP") to the provisional answer
    texts from earlier rounds (already capped at the top 2).  Templates whose
    placeholders have no prior answers are skipped.
    """
    rendered: list[RenderedQuestion] = []
    bank = templates.lookup(category, mode)
    for ti, tmpl in enumerate(bank):
        if tmpl.round != round_no:
            continue
        needed = tmpl.placeholders()
        if not needed:
            rendered.append(RenderedQuestion(
                tmpl.text, tmpl.attribute, round_no,
                f"{category}/{mode or '*'}/r{round_no}/t{ti}",
            ))
            continue
        pools = [prior.get(attr, []) for attr in needed]
        if any(not pool for pool in pools):
            continue
        for vi, values in enumerate(itertools.product(*pools)):
            text = tmpl.text
            for attr, value in zip(needed, values):
                placeholder = ACTOR_PLACEHOLDER if attr == "ACTOR" else RECIP_PLACEHOLDER
                text = text.replace(placeholder, value)
            rendered.append(RenderedQuestion(
                text, tmpl.attribute, round_no,
                f"{category}/{mode or '*'}/r{round_no}/t{ti}/p{vi}",
            ))
    return rendered


def collect_candidates(
    coded_text: str,
    questions: list[RenderedQuestion],
    qa_backend,
) -> list[QACandidate]:
    """Ask every question against the passage; unanswerable questions
    contribute nothing.

    A backend failure on one question is logged and skipped so a partial
    candidate pool survives.
    """
    if not questions:
        raise ValueError("questions must be nonempty")
    from .backends import BackendError

    candidates = []
    for q in questions:
        try:
            ans = qa_backend.answer(coded_text, q.text)
        except BackendError:
            raise  # transport outage after retries: abort, don't degrade
        except Exception:
            logger.warning("QA backend failed on %s; continuing with partial results",
                           q.question_id)
            continue
        if ans is None or not ans.answer_text.strip():
            continue
        span = _span_for(coded_text, ans)
        candidates.append(QACandidate(span, q.attribute, ans.score, q.question_id, q.round))
    return candidates


def _span_for(coded_text: str, ans) -> Span:
    # Trust offsets only when they slice to the answer text; otherwise locate
    # the text, or fall back to a synthetic span.
    if 0 <= ans.char_start < ans.char_end <= len(coded_text) and \
            coded_text[ans.char_start:ans.char_end] == ans.answer_text:
        return Span(ans.answer_text, ans.char_start, ans.char_end)
    found = coded_text.find(ans.answer_text)
    if found >= 0:
        return Span(ans.answer_text, found, found + len(ans.answer_text))
    return Span(ans.answer_text)


@dataclass
class ScoreMatrix:
    """Summed (span text x attribute) scores.

    Rows are distinct span strings in lexicographic order (exact string
    identity: overlapping variants like "Hindu nationalists" inside "A group
    of Hindu nationalists" stay separate rows).  ``span_objects`` keeps one
    offset-bearing Span per row for the final AttributeSet.
    """

    spans: list[str] = field(default_factory=list)
    attributes: tuple[str, ...] = ATTRIBUTES
    scores: np.ndarray = field(default_factory=lambda: np.zeros((0, len(ATTRIBUTES))))
    span_objects: dict[str, Span] = field(default_factory=dict)

    def is_empty(self) -> bool:
        return self.scores.size == 0 or not np.any(self.scores)

    def cell(self, span_text: str, attribute: str) -> float:
        return float(self.scores[self.spans.index(span_text),
                                 self.attributes.index(attribute)])


def aggregate_scores(candidates: list[QACandidate]) -> ScoreMatrix:
    """Sum QA scores per (span text, attribute) cell."""
    span_texts = sorted({c.span.text for c in candidates})
    row_of = {text: i for i, text in enumerate(span_texts)}
    col_of = {attr: j for j, attr in enumerate(ATTRIBUTES)}
    scores = np.zeros((len(span_texts), len(ATTRIBUTES)), dtype=np.float64)
    span_objects: dict[str, Span] = {}
    for c in candidates:
        scores[row_of[c.span.text], col_of[c.attribute]] += c.score
        best = span_objects.get(c.span.text)
        if best is None or (not best.has_offsets() and c.span.has_offsets()):
            span_objects[c.span.text] = c.span
    return ScoreMatrix(spans=span_texts, scores=scores, span_objects=span_objects)


def assign_spans(
    matrix: ScoreMatrix,
    rules: AttributeRules | None = None,
    floor: float = DEFAULT_ATTRIBUTE_FLOOR,
) -> AttributeSet:
    """Optimal one-to-one span/attribute assignment.

    Maximizes total summed score with at most one span per attribute and one
    attribute per span.  When the category permits a second actor, an
    alternative layout with the recipient slot replaced by a second-actor slot
    competes on total score.  Assigned cells below ``floor`` leave their
    attribute unfilled, so noise spans cannot occupy slots by default.
    """
    rules = rules or AttributeRules()
    if matrix.is_empty():
        return AttributeSet()

    slots = list(ATTRIBUTES)
    best = _solve(matrix, slots)
    if rules.dual_actor:
        alt_slots = ["ACTOR", "SECOND_ACTOR", "LOCATION", "DATE"]
        alt = _solve(matrix, alt_slots)
        # prefer the recipient layout on ties
        if alt[0] > best[0]:
            best, slots = alt, alt_slots

    total, chosen = best
    fields: dict[str, Span | None] = {
        "actor": None, "second_actor": None, "recipient": None,
        "location": None, "date": None,
    }
    slot_to_field = {
        "ACTOR": "actor", "SECOND_ACTOR": "second_actor", "RECIP": "recipient",
        "LOCATION": "location", "DATE": "date",
    }
    for slot, span_text, score in chosen:
        if score >= floor and score > 0.0:
            fields[slot_to_field[slot]] = matrix.span_objects[span_text]
    if fields["actor"] is None and fields["second_actor"] is not None:
        fields["actor"], fields["second_actor"] = fields["second_actor"], None
    return AttributeSet(assignment_score=float(total), **fields)


def _solve(matrix: ScoreMatrix, slots: list[str]) -> tuple[float, list[tuple[str, str, float]]]:
    """Run the assignment on the requested slot columns.

    SECOND_ACTOR reuses the ACTOR column scores: a second actor is scored as
    an actor.  Rows are already in lexicographic span order, which fixes the
    solver's tie-breaking deterministically.
    """
    col_of = {attr: j for j, attr in enumerate(ATTRIBUTES)}
    cols = [col_of["ACTOR"] if s == "SECOND_ACTOR" else col_of[s] for s in slots]
    sub = matrix.scores[:, cols]
    row_ind, col_ind = linear_sum_assignment(sub, maximize=True)
    chosen = []
    total = 0.0
    for j in np.argsort(col_ind):  # accumulate in slot order for stable totals
        r, c = int(row_ind[j]), int(col_ind[j])
        score = float(sub[r, c])
        total += score
        chosen.append((slots[c], matrix.spans[r], score))
    return total, chosen


def extract_attributes(
    doc: Document,
    category: str,
    mode: str | None,
    qa_backend,
    templates: TemplateBank,
    rules: AttributeRules | None = None,
    floor: float = DEFAULT_ATTRIBUTE_FLOOR,
) -> AttributeSet:
    """Run the full three-round questioning and return the final assignment.

    Round 1 asks the generic questions; the top provisional actors seed round
    2 and the top recipients (re-ranked after round 2) seed round 3.  All
    rounds' candidates stay in the pool for the final assignment, so extra
    rounds can only add evidence.
    """
    pool: list[QACandidate] = []
    prior: dict[str, list[str]] = {}
    for round_no in (1, 2, 3):
        questions = render_questions(category, mode, round_no, prior, templates)
        if questions:
            pool.extend(collect_candidates(doc.coded_text, questions, qa_backend))
        prior = {
            "ACTOR": _top_spans(pool, "ACTOR"),
            "RECIP": _top_spans(pool, "RECIP"),
        }
    return assign_spans(aggregate_scores(pool), rules, floor)


def _top_spans(pool: list[QACandidate], attribute: str,
               limit: int = MAX_PRIORS_PER_ROUND) -> list[str]:
    if not pool:
        return []
    matrix = aggregate_scores(pool)
    col = matrix.attributes.index(attribute)
    scored = [
        (float(matrix.scores[i, col]), text)
        for i, text in enumerate(matrix.spans)
        if matrix.scores[i, col] > 0.0
    ]
    scored.sort(key=lambda pair: (-pair[0], pair[1]))
    return [text for _, text in scored[:limit]]
