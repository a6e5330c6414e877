import pytest

from eventcoder.entity import (RedirectPair, ResolutionMethod,
                               build_redirect_pairs, lexical_hard_negatives,
                               resolve_entity, write_redirect_pairs)
from eventcoder.model import Span


class CountingEmbedder:
    """Wraps the char-ngram embedder and counts calls, so tests can observe
    the exact-match short-circuit."""

    def __init__(self, inner):
        self.inner = inner
        self.calls = 0

    def embed(self, texts):
        self.calls += 1
        return self.inner.embed(texts)


def test_exact_redirect_short_circuits(entity_index, embedder):
    counting = CountingEmbedder(embedder)
    out = resolve_entity(Span("ISIL"), entity_index, counting)
    assert out.article_title == "Islamic State"
    assert out.method is ResolutionMethod.EXACT
    assert out.confidence == 1.0
    assert counting.calls == 0


def test_president_obama_resolves_to_article(entity_index, embedder):
    out = resolve_entity(Span("President Obama"), entity_index, embedder)
    assert out.article_title == "Barack Obama"
    assert out.method is ResolutionMethod.EXACT
    assert out.article is not None and out.article.infobox.get("offices")


def test_absent_entity_unresolved(entity_index, embedder):
    out = resolve_entity(Span("Zorblatt Quxon"), entity_index, embedder)
    assert out.method is ResolutionMethod.UNRESOLVED
    assert out.article_title is None


def test_similarity_path_on_near_name(entity_index, embedder):
    counting = CountingEmbedder(embedder)
    out = resolve_entity(Span("Barrack Obama"), entity_index, counting,
                         threshold=0.5)
    assert counting.calls == 1
    assert out.method is ResolutionMethod.SIMILARITY
    assert out.article_title == "Barack Obama"
    assert 0.0 <= out.confidence <= 1.0


def test_similarity_below_threshold_unresolved(entity_index, embedder):
    out = resolve_entity(Span("Barrack Obama"), entity_index, embedder,
                         threshold=0.999)
    assert out.method is ResolutionMethod.UNRESOLVED


def test_never_returns_title_outside_candidates(entity_index, embedder):
    for query in ("Barrack Obama", "Emanuel Macron", "Talibann"):
        hits = entity_index.search_entities(query, limit=10)
        candidates = {h.article.title for h in hits}
        out = resolve_entity(Span(query), entity_index, embedder, threshold=0.3)
        if out.method is not ResolutionMethod.UNRESOLVED:
            assert out.article_title in candidates


def test_embedder_failure_leaves_unresolved(entity_index):
    class Broken:
        def embed(self, texts):
            raise RuntimeError("offline")

    out = resolve_entity(Span("Barrack Obama"), entity_index, Broken())
    assert out.method is ResolutionMethod.UNRESOLVED


def test_ambiguous_exact_match_falls_through_to_similarity(embedder):
    from eventcoder.kb import EntityIndex

    index = EntityIndex()
    index.ingest_articles([
        {"title": "Georgia", "page_kind": "article",
         "short_summary": "Georgia is a country in the Caucasus."},
        {"title": "Georgia (U.S. state)", "page_kind": "article",
         "redirects": ["Georgia"],
         "short_summary": "Georgia is a state in the United States."},
    ])
    counting = CountingEmbedder(embedder)
    out = resolve_entity(Span("Georgia"), index, counting, threshold=0.1)
    assert counting.calls == 1  # two exact matches -> similarity rerank
    assert out.method is ResolutionMethod.SIMILARITY


# --- redirect pairs -----------------------------------------------------------------


REDIRECTS = {"Joseph Biden": "Joe Biden", "Barry Obama": "Barack Obama"}
TITLES = ["Joe Biden", "Jill Biden", "Barack Obama", "Michelle Obama", "Hunter Biden"]


def test_positive_pairs_from_redirect_map():
    pairs = list(build_redirect_pairs(REDIRECTS, negatives_per_positive=2,
                                      titles=TITLES))
    positives = [p for p in pairs if p.label == "positive"]
    assert RedirectPair("Joseph Biden", "Joe Biden", "positive") in positives
    assert RedirectPair("Barry Obama", "Barack Obama", "positive") in positives


def test_hard_negatives_share_surface_form():
    pairs = list(build_redirect_pairs({"Joseph Biden": "Joe Biden"},
                                      negatives_per_positive=2, titles=TITLES))
    negatives = {p.target_title for p in pairs if p.label == "negative"}
    assert "Jill Biden" in negatives or "Hunter Biden" in negatives
    assert "Joe Biden" not in negatives


def test_negative_never_equals_target():
    pairs = list(build_redirect_pairs(REDIRECTS, negatives_per_positive=4,
                                      titles=TITLES))
    for p in pairs:
        if p.label == "negative":
            assert p.target_title != REDIRECTS[p.query]


def test_no_pair_both_positive_and_negative():
    pairs = list(build_redirect_pairs(REDIRECTS, negatives_per_positive=4,
                                      titles=TITLES))
    seen = {}
    for p in pairs:
        key = (p.query, p.target_title)
        assert seen.get(key, p.label) == p.label
        seen[key] = p.label


def test_exhaustion_emits_what_exists():
    pairs = list(build_redirect_pairs({"Joseph Biden": "Joe Biden"},
                                      negatives_per_positive=3,
                                      titles=["Joe Biden", "Jill Biden", "Hunter Biden"]))
    negatives = [p for p in pairs if p.label == "negative"]
    assert len(negatives) == 2


def test_empty_map_rejected():
    with pytest.raises(ValueError):
        list(build_redirect_pairs({}, 2))


def test_pair_stream_format(tmp_path):
    pairs = build_redirect_pairs(REDIRECTS, negatives_per_positive=1, titles=TITLES)
    path = tmp_path / "pairs.tsv"
    count = write_redirect_pairs(pairs, path)
    lines = path.read_text().splitlines()
    assert len(lines) == count
    for line in lines:
        query, target, label = line.split("\t")
        assert label in ("positive", "negative")


def test_fixture_redirect_map_pairs(entity_index):
    redirect_map = {}
    for title, art in entity_index.articles.items():
        for r in art.redirects[:2]:
            redirect_map[r] = title
    titles = sorted(entity_index.articles)
    pairs = list(build_redirect_pairs(redirect_map, negatives_per_positive=3,
                                      titles=titles))
    assert sum(p.label == "positive" for p in pairs) == len(redirect_map)
    assert all(p.label == "negative" or redirect_map[p.query] == p.target_title
               for p in pairs)
