"""Backend units: builtin scorers/embedders/QA and the HTTP service clients
against a canned stub server."""

import json
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer

import numpy as np
import pytest

from eventcoder.backends import (BackendError, CharNgramEmbedder,
                                 HeuristicQABackend, LexiconClassifier,
                                 RecordedQABackend, ServiceClassifier,
                                 ServiceEmbedder, ServiceQA, cosine)
from eventcoder.classify import Namespace, ScorerSet, score_labels


# --- builtin units ---------------------------------------------------------------


def test_lexicon_classifier_tf_logistic():
    clf = LexiconClassifier({"PROTEST": ["riot", "rally"]})
    none = clf.score("quiet day", ["PROTEST"])["PROTEST"]
    one = clf.score("a riot started", ["PROTEST"])["PROTEST"]
    many = clf.score("riot riot rally riot", ["PROTEST"])["PROTEST"]
    assert none < 0.5 < one < many


def test_lexicon_phrase_matching():
    clf = LexiconClassifier({"CONSULT": ["phone call"]})
    assert clf.score("They spoke in a phone  call.", ["CONSULT"])["CONSULT"] > 0.5
    assert clf.score("phone the office", ["CONSULT"])["CONSULT"] < 0.5


def test_char_ngram_embedder_properties():
    emb = CharNgramEmbedder()
    vectors = emb.embed(["defense minister", "defense minister", ""])
    assert np.array_equal(vectors[0], vectors[1])
    assert cosine(vectors[0], vectors[0]) == pytest.approx(1.0)
    assert np.linalg.norm(vectors[2]) == 0.0  # empty text -> zero vector


def test_recorded_backend_context_and_question_keys(tmp_path):
    path = tmp_path / "rec.jsonl"
    path.write_text(json.dumps({
        "context": "ctx", "question": "Who?",
        "answer": {"answer_text": "A", "char_start": 0, "char_end": 1,
                   "score": 0.5}}) + "\n" + json.dumps({
        "question": "Where?", "answer": None}) + "\n")
    backend = RecordedQABackend.from_path(path)
    assert backend.answer("ctx", "Who?").answer_text == "A"
    assert backend.answer("other", "Who?") is None  # context mismatch
    assert backend.answer("anything", "Where?") is None  # recorded null
    assert backend.answer("ctx", "Unknown?") is None


def test_heuristic_qa_unanswerable():
    qa = HeuristicQABackend()
    assert qa.answer("Nothing relevant here.", "Who held a demonstration?") is None


# --- service clients ---------------------------------------------------------------

RECORDED_SCORES = {"PROTEST": 0.91, "CONSULT": 0.12}


class _StubHandler(BaseHTTPRequestHandler):
    flaky_remaining = 0
    omit_version_header = False

    def do_POST(self):
        length = int(self.headers["Content-Length"])
        body = json.loads(self.rfile.read(length))
        if _StubHandler.flaky_remaining > 0:
            _StubHandler.flaky_remaining -= 1
            self.send_response(503)
            self.end_headers()
            return
        if self.path == "/classify":
            payload = {"scores": {lab: RECORDED_SCORES[lab]
                                  for lab in body["labels"] if lab in RECORDED_SCORES},
                       "unknown_labels": [lab for lab in body["labels"]
                                          if lab not in RECORDED_SCORES]}
        elif self.path == "/qa":
            context = body["context"]
            if "John" in context:
                start = context.index("John")
                payload = {"answer": {"answer_text": "John", "char_start": start,
                                      "char_end": start + 4, "score": 0.97},
                           "truncated": False}
            else:
                payload = {"answer": None, "truncated": False}
        elif self.path == "/embed":
            payload = {"vectors": [[1.0, 0.0], [0.0, 1.0]][:len(body["texts"])],
                       "dim": 2}
        else:
            self.send_response(404)
            self.end_headers()
            return
        raw = json.dumps(payload).encode()
        self.send_response(200)
        if not _StubHandler.omit_version_header:
            self.send_header("X-Model-Version", "stub@1")
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(raw)))
        self.end_headers()
        self.wfile.write(raw)

    def log_message(self, *args):
        pass


@pytest.fixture()
def stub_server():
    server = HTTPServer(("127.0.0.1", 0), _StubHandler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    _StubHandler.flaky_remaining = 0
    _StubHandler.omit_version_header = False
    yield f"http://127.0.0.1:{server.server_port}"
    server.shutdown()
    thread.join()


def test_service_classifier_scores_match_recorded_response(stub_server):
    scorers = ScorerSet(Namespace.CATEGORY, ("PROTEST", "CONSULT"),
                        ServiceClassifier(stub_server))
    out = {sl.label: sl.score for sl in score_labels("fixture text", scorers)}
    assert out == RECORDED_SCORES


def test_service_classifier_unknown_label_scored_zero(stub_server):
    client = ServiceClassifier(stub_server)
    scores = client.score("text", ["PROTEST", "NOPE"])
    assert scores == {"PROTEST": 0.91, "NOPE": 0.0}


def test_service_qa_answer_and_null(stub_server):
    client = ServiceQA(stub_server)
    answer = client.answer("Police arrested John in Paris.", "Who was arrested?")
    assert answer.answer_text == "John"
    assert client.answer("Nothing here.", "Who was arrested?") is None
    assert client.version == "stub@1"


def test_service_embedder_parses_vectors(stub_server):
    client = ServiceEmbedder(stub_server)
    vectors = client.embed(["a", "b"])
    assert vectors.shape == (2, 2) and client.dim == 2


def test_service_retries_transient_failures(stub_server):
    _StubHandler.flaky_remaining = 2
    client = ServiceClassifier(stub_server, backoff=0.01)
    assert client.score("text", ["PROTEST"])["PROTEST"] == 0.91


def test_service_gives_up_after_retries(stub_server):
    _StubHandler.flaky_remaining = 99
    client = ServiceClassifier(stub_server, max_retries=2, backoff=0.01)
    with pytest.raises(BackendError):
        client.score("text", ["PROTEST"])


def test_service_requires_version_header(stub_server):
    _StubHandler.omit_version_header = True
    client = ServiceQA(stub_server, max_retries=1)
    with pytest.raises(BackendError, match="X-Model-Version"):
        client.answer("Police arrested John.", "Who was arrested?")


def test_service_unreachable_raises_backend_error():
    client = ServiceClassifier("http://127.0.0.1:9", max_retries=1, backoff=0.01)
    with pytest.raises(BackendError):
        client.score("text", ["PROTEST"])