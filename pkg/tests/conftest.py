import json
from pathlib import Path

import pytest

from eventcoder.backends import CharNgramEmbedder
from eventcoder.kb import EntityIndex, Gazetteer

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def entity_index() -> EntityIndex:
    index, _stats = EntityIndex.from_jsonl(FIXTURES / "articles.jsonl")
    return index


@pytest.fixture(scope="session")
def gazetteer() -> Gazetteer:
    gaz, _stats = Gazetteer.from_path(FIXTURES / "gazetteer.tsv")
    return gaz


@pytest.fixture(scope="session")
def embedder() -> CharNgramEmbedder:
    return CharNgramEmbedder()


def read_jsonl(path: Path) -> list[dict]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                out.append(json.loads(line))
    return out
