import json
import sys
import warnings
from pathlib import Path

import pytest

warnings.filterwarnings("ignore", message=".*nested tensors.*")

sys.path.insert(0, str(Path(__file__).resolve().parent))

REPO_ROOT = Path(__file__).resolve().parents[2]
FIXTURES = REPO_ROOT / "fixtures"


def riot_qa_examples() -> list[dict]:
    examples = []
    for line in (FIXTURES / "riot_recorded_qa.jsonl").read_text().splitlines():
        rec = json.loads(line)
        example = {"context": rec["context"], "question": rec["question"]}
        if rec["answer"]:
            example["answer_text"] = rec["answer"]["answer_text"]
            example["char_start"] = rec["answer"]["char_start"]
        else:
            example["answer_text"] = None
        examples.append(example)
    return examples


@pytest.fixture(scope="session")
def model_dirs(tmp_path_factory) -> dict:
    """Train the tiny models once per session and lay out the registry dirs."""
    from eventcoder_sidecar.models import save_model
    from eventcoder_sidecar.training.classifier import train_labels
    from eventcoder_sidecar.training.qa import train_qa

    from toy_corpus import classifier_records

    base = tmp_path_factory.mktemp("models")

    classify_dir = base / "classify"
    records = classifier_records()
    summary = train_labels(
        records,
        ["PROTEST", "CONSULT", "ASSAULT", "COERCE", "PROTEST-riot", "PROTEST-demo"],
        classify_dir, epochs=3, ensemble=8)
    assert set(summary) == {"PROTEST", "CONSULT", "ASSAULT", "COERCE",
                            "PROTEST-riot", "PROTEST-demo"}

    qa_dir = base / "qa"
    qa_dir.mkdir()
    model, tokenizer = train_qa(riot_qa_examples(), epochs=120)
    tokenizer.save(qa_dir / "vocab.json")
    save_model(model, qa_dir / "qa.pt", {"version": "tiny-test"})

    registry_yaml = base / "registry.yaml"
    registry_yaml.write_text(
        "classify: {model_dir: classify, version: tiny-test}\n"
        "qa: {model_dir: qa, version: tiny-test}\n"
        "embed: {backend: char-ngram, dim: 512, version: ngram-1}\n")
    return {"base": base, "classify": classify_dir, "qa": qa_dir,
            "registry": registry_yaml}


@pytest.fixture(scope="session")
def client(model_dirs):
    from fastapi.testclient import TestClient

    from eventcoder_sidecar.registry import ModelRegistry
    from eventcoder_sidecar.server import create_app

    registry = ModelRegistry.from_config(model_dirs["registry"])
    return TestClient(create_app(registry))
