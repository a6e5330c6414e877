"""Wire-protocol conformance: golden request/response validation, the
mandatory version header, offset validity, and inference determinism."""

import json
import math
from pathlib import Path

from toy_corpus import qa_property_pairs

GOLDENS = Path(__file__).resolve().parent / "goldens"

VERSION_HEADER = "X-Model-Version"


def load_golden(name: str) -> dict:
    return json.loads((GOLDENS / name).read_text())


def test_classify_golden_conformance(client):
    golden = load_golden("classify.json")
    resp = client.post(golden["endpoint"], json=golden["request"])
    assert resp.status_code == 200
    assert resp.headers.get(VERSION_HEADER)
    body = resp.json()
    assert sorted(body.keys()) == sorted(golden["response_keys"])
    assert body["unknown_labels"] == golden["expect"]["unknown_labels"]
    assert sorted(body["scores"].keys()) == sorted(golden["expect"]["scored_labels"])
    for value in body["scores"].values():
        assert isinstance(value, float) and 0.0 <= value <= 1.0


def test_classify_scores_separate_trained_labels(client):
    golden = load_golden("classify.json")
    resp = client.post("/classify", json=golden["request"])
    scores = resp.json()["scores"]
    assert scores["PROTEST"] > 0.5 > scores["CONSULT"]


def test_classify_empty_labels(client):
    resp = client.post("/classify", json={"text": "anything", "labels": []})
    assert resp.json() == {"scores": {}, "unknown_labels": []}


def test_qa_golden_conformance(client):
    golden = load_golden("qa.json")
    resp = client.post(golden["endpoint"], json=golden["request"])
    assert resp.status_code == 200
    assert resp.headers.get(VERSION_HEADER)
    body = resp.json()
    assert sorted(body.keys()) == sorted(golden["response_keys"])
    answer = body["answer"]
    assert answer is not None
    assert sorted(answer.keys()) == sorted(golden["answer_keys"])
    context = golden["request"]["context"]
    assert context[answer["char_start"]:answer["char_end"]] == answer["answer_text"]
    assert answer["answer_text"] == "A group of Hindu nationalists"


def test_qa_unanswerable_returns_null(client):
    golden = load_golden("qa.json")
    resp = client.post("/qa", json={
        "context": golden["request"]["context"],
        "question": "What did A group of Hindu nationalists target in the riot?",
    })
    assert resp.json()["answer"] is None


def test_qa_offsets_slice_on_100_pairs(client):
    """Whatever the model answers, offsets always slice to the answer text."""
    pairs = qa_property_pairs(100)
    assert len(pairs) == 100
    answered = 0
    for pair in pairs:
        resp = client.post("/qa", json=pair)
        assert resp.status_code == 200
        answer = resp.json()["answer"]
        if answer is None:
            continue
        answered += 1
        context = pair["context"]
        assert context[answer["char_start"]:answer["char_end"]] == answer["answer_text"]
        assert 0.0 <= answer["score"] <= 1.0


def test_qa_truncation_flagged(client):
    context = "word " * 4000 + "The riot happened in Dehli."
    resp = client.post("/qa", json={"context": context,
                                    "question": "Where did the riot take place?"})
    assert resp.json()["truncated"] is True


def test_embed_golden_conformance(client):
    golden = load_golden("embed.json")
    resp = client.post(golden["endpoint"], json=golden["request"])
    assert resp.status_code == 200
    assert resp.headers.get(VERSION_HEADER)
    body = resp.json()
    assert sorted(body.keys()) == sorted(golden["response_keys"])
    vectors = body["vectors"]
    assert len(vectors) == len(golden["request"]["texts"])
    assert all(len(v) == body["dim"] for v in vectors)


def test_embed_identical_texts_identical_vectors(client):
    resp = client.post("/embed", json={"texts": ["a", "a"]})
    vectors = resp.json()["vectors"]
    assert vectors[0] == vectors[1]


def test_embed_self_cosine_is_one(client):
    resp = client.post("/embed", json={"texts": ["defense minister"]})
    v = resp.json()["vectors"][0]
    norm = math.sqrt(sum(x * x for x in v))
    assert abs(sum(x * x for x in v) / (norm * norm) - 1.0) < 1e-9


def test_embed_spelling_variants_closer_than_strangers(client):
    resp = client.post("/embed", json={
        "texts": ["defense minister", "defence minister", "rebel leader"]})
    a, b, c = resp.json()["vectors"]

    def cos(u, v):
        dot = sum(x * y for x, y in zip(u, v))
        nu = math.sqrt(sum(x * x for x in u))
        nv = math.sqrt(sum(x * x for x in v))
        return dot / (nu * nv)

    assert cos(a, b) > cos(a, c)


def test_embed_dimension_constant_across_calls(client):
    dims = set()
    for texts in (["one"], ["two", "three"], ["four"]):
        dims.add(client.post("/embed", json={"texts": texts}).json()["dim"])
    assert len(dims) == 1


def test_inference_deterministic_byte_identical(client):
    for golden_name in ("classify.json", "qa.json", "embed.json"):
        golden = load_golden(golden_name)
        first = client.post(golden["endpoint"], json=golden["request"])
        second = client.post(golden["endpoint"], json=golden["request"])
        assert first.content == second.content, golden_name


def test_version_header_on_every_endpoint(client):
    assert client.get("/health").headers.get(VERSION_HEADER)
    for golden_name in ("classify.json", "qa.json", "embed.json"):
        golden = load_golden(golden_name)
        resp = client.post(golden["endpoint"], json=golden["request"])
        assert resp.headers.get(VERSION_HEADER), golden_name


def test_malformed_body_is_client_error(client):
    resp = client.post("/classify", json={"no_text": True})
    assert 400 <= resp.status_code < 500
