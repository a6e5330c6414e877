#!/usr/bin/env python3
"""The span-to-attribute assignment on the worked riot example.

A riot sentence is questioned over three rounds; every answer span lands in a
score table, scores are summed per (span, attribute), and a linear-sum
assignment picks one span per attribute.  The recorded answers reproduce the
reference score table exactly.

    python demos/02_span_assignment.py
"""

import datetime as dt
import json
from importlib import resources
from pathlib import Path

from eventcoder.attribute import (TemplateBank, aggregate_scores, assign_spans,
                                  collect_candidates, render_questions,
                                  _top_spans)
from eventcoder.backends import RecordedQABackend
from eventcoder.model import AttributeRules, Document

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def main():
    raw = json.loads((FIXTURES / "riot_doc.jsonl").read_text())
    doc = Document(id=raw["id"], publication_date=dt.date.fromisoformat(raw["date"]),
                   raw_text=raw["text"], cleaned_text=raw["text"],
                   coded_text=raw["text"])
    templates = TemplateBank.from_text(
        (resources.files("eventcoder") / "data" / "templates.tsv").read_text())
    backend = RecordedQABackend.from_path(FIXTURES / "riot_recorded_qa.jsonl")

    print("passage:", doc.coded_text.split(".")[0] + ".")
    pool, prior = [], {}
    for round_no in (1, 2, 3):
        questions = render_questions("PROTEST", "riot", round_no, prior, templates)
        print(f"\n--- round {round_no} ---")
        for q in questions:
            ans = backend.answer(doc.coded_text, q.text)
            shown = f"{ans.answer_text!r} ({ans.score})" if ans else "(no answer)"
            print(f"  [{q.attribute:<8}] {q.text}  ->  {shown}")
        pool.extend(collect_candidates(doc.coded_text, questions, backend))
        prior = {"ACTOR": _top_spans(pool, "ACTOR"), "RECIP": _top_spans(pool, "RECIP")}

    matrix = aggregate_scores(pool)
    print("\n--- summed score table (span x attribute) ---")
    header = "".join(f"{a:>10}" for a in matrix.attributes)
    print(f"{'span':<32}{header}")
    for i, span in enumerate(matrix.spans):
        cells = "".join(f"{matrix.scores[i, j]:>10.3f}"
                        for j in range(len(matrix.attributes)))
        print(f"{span:<32}{cells}")

    out = assign_spans(matrix, AttributeRules())
    print("\n--- optimal assignment ---")
    for slot, span in out.filled().items():
        print(f"  {slot:<10} -> {span.text!r}")
    print(f"  total: {out.assignment_score:.3f}")


if __name__ == "__main__":
    main()
