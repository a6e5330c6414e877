#!/usr/bin/env python3
"""Offline entity resolution and actor coding against the fixture index.

    python demos/03_entity_resolution.py
"""

import datetime as dt
from importlib import resources
from pathlib import Path

from eventcoder.actors import AgentMatcher, CountryTable, code_actor, load_agent_file
from eventcoder.backends import CharNgramEmbedder
from eventcoder.entity import resolve_entity
from eventcoder.kb import EntityIndex
from eventcoder.model import Span

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def main():
    kb, stats = EntityIndex.from_jsonl(FIXTURES / "articles.jsonl")
    print(f"index: {stats.indexed} articles, {stats.redirects} redirect records folded in")

    embedder = CharNgramEmbedder()
    print("\n--- resolution: exact redirects, fuzzy misspellings ---")
    for mention in ["ISIL", "President Obama", "Barrack Obama", "Joseph Biden",
                    "Zorblatt Quxon"]:
        out = resolve_entity(Span(mention), kb, embedder, threshold=0.5)
        print(f"  {mention!r:<20} -> {out.article_title!r:<18} "
              f"[{out.method.value}, confidence {out.confidence:.2f}]")

    print("\n--- actor coding: country + role category ---")
    agents = AgentMatcher(load_agent_file(
        (resources.files("eventcoder") / "data" / "agents.txt").read_text()), embedder)
    countries = CountryTable.from_yaml(
        (resources.files("eventcoder") / "data" / "countries.yaml").read_text())

    story_date = dt.date(2012, 6, 1)
    rows = [
        ("President Obama", resolve_entity(Span("President Obama"), kb, embedder)),
        ("Pentagon officials", resolve_entity(Span("Pentagon"), kb, embedder)),
        ("Syrian civilians", None),
        ("Damascus regime", None),
    ]
    for text, resolved in rows:
        code = code_actor(Span(text), resolved, story_date, agents, countries)
        entity = resolved.article_title if resolved else "--"
        print(f"  {text:<20} entity={entity:<15} code={code.as_text():<8} "
              f"basis={code.basis.value}")


if __name__ == "__main__":
    main()
