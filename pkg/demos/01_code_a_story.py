#!/usr/bin/env python3
"""Walk one news story through the whole coder, step by step.

Run from the repository root:

    python demos/01_code_a_story.py

Every stage uses the builtin deterministic backends, so this runs offline
with no model service.
"""

import datetime as dt
from importlib import resources

from eventcoder import preprocess
from eventcoder.attribute import TemplateBank, extract_attributes
from eventcoder.backends import HeuristicQABackend
from eventcoder.classify import Namespace, ScorerSet, score_labels
from eventcoder.backends import LexiconClassifier
from eventcoder.model import Document, load_ontology

STORY = """KARACHI (Reuters) - Thousands of demonstrators marched through the
city on Monday in a protest against rising fuel prices, and the rally ended
outside the provincial assembly. Police said the crowd dispersed peacefully
by nightfall."""


def data(name: str) -> str:
    return (resources.files("eventcoder") / "data" / name).read_text()


def main():
    doc = Document(id="demo-1", publication_date=dt.date(2023, 5, 8),
                   source="demo", raw_text=STORY)

    print("=== 1. cleaning and truncation ===")
    rules = preprocess.load_clean_rules(data("clean_rules.yaml"))
    doc = preprocess.prepare_text(doc, rules)
    print("dateline stripped ->", repr(doc.coded_text[:60]), "...")
    print("coded_text length:", len(doc.coded_text))

    print("\n=== 2. story filters ===")
    verdict = preprocess.filter_story(doc, rules)
    print("keep?", verdict.keep, "| reason:", verdict.reason.value)

    print("\n=== 3. category scoring ===")
    ontology = load_ontology(data("ontology.yaml"))
    scorer = LexiconClassifier.from_text(data("lexicons/categories.txt"))
    scored = score_labels(doc.coded_text, ScorerSet(
        Namespace.CATEGORY, tuple(sorted(ontology.categories)), scorer))
    positives = [s for s in scored if s.positive]
    for s in sorted(positives, key=lambda s: -s.score):
        print(f"  {s.label:<10} score={s.score:.3f}")

    print("\n=== 4. QA attribute extraction (three rounds) ===")
    templates = TemplateBank.from_text(data("templates.tsv"))
    attrs = extract_attributes(doc, "PROTEST", "demo", HeuristicQABackend(),
                               templates, ontology.rules_for("PROTEST"))
    for slot, span in attrs.filled().items():
        print(f"  {slot:<12} -> {span.text!r}")
    print(f"  assignment total: {attrs.assignment_score:.3f}")


if __name__ == "__main__":
    main()
