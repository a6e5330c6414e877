"""Model registry: which model backs each endpoint, its version and score
range.  The version string travels in every response header."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .models import (NgramEmbedder, SimilarityEmbedder, TinyClassifier, TinyQA,
                     WordTokenizer, load_state)

logger = logging.getLogger(__name__)


@dataclass
class ClassifyEntry:
    models: dict  # label -> TinyClassifier
    tokenizer: WordTokenizer
    version: str = "tiny-0.1"
    score_range: tuple[float, float] = (0.0, 1.0)


@dataclass
class QAEntry:
    model: TinyQA
    tokenizer: WordTokenizer
    version: str = "tiny-0.1"


@dataclass
class EmbedEntry:
    backend: object  # NgramEmbedder | (SimilarityEmbedder, tokenizer)
    tokenizer: WordTokenizer | None = None
    dim: int = 512
    version: str = "ngram-1"


@dataclass
class ModelRegistry:
    classify: ClassifyEntry | None = None
    qa: QAEntry | None = None
    embed: EmbedEntry = field(default_factory=lambda: EmbedEntry(NgramEmbedder()))

    @classmethod
    def from_config(cls, path: str | Path) -> "ModelRegistry":
        """Load the registry from YAML:

        classify: {model_dir: ..., version: ...}
        qa:       {model_dir: ..., version: ...}
        embed:    {backend: char-ngram | model_dir-path, dim: 512, version: ...}
        """
        raw = yaml.safe_load(Path(path).read_text(encoding="utf-8")) or {}
        base = Path(path).parent
        registry = cls()
        if "classify" in raw:
            registry.classify = load_classify_dir(
                base / raw["classify"]["model_dir"],
                version=raw["classify"].get("version", "tiny-0.1"))
        if "qa" in raw:
            registry.qa = load_qa_dir(base / raw["qa"]["model_dir"],
                                      version=raw["qa"].get("version", "tiny-0.1"))
        if "embed" in raw:
            spec = raw["embed"]
            if spec.get("backend", "char-ngram") == "char-ngram":
                dim = int(spec.get("dim", 512))
                registry.embed = EmbedEntry(NgramEmbedder(dim=dim), dim=dim,
                                            version=spec.get("version", "ngram-1"))
            else:
                registry.embed = load_embed_dir(base / spec["backend"],
                                                version=spec.get("version", "sim-0.1"))
        return registry


def load_classify_dir(model_dir: Path, version: str = "tiny-0.1") -> ClassifyEntry:
    tokenizer = WordTokenizer.load(model_dir / "vocab.json")
    models = {}
    for path in sorted(model_dir.glob("*.pt")):
        state, meta = load_state(path)
        model = TinyClassifier(len(tokenizer.vocab))
        model.load_state_dict(state)
        model.eval()
        models[meta["label"]] = model
    if not models:
        raise FileNotFoundError(f"no classifier models in {model_dir}")
    logger.info("loaded %d classifier labels from %s", len(models), model_dir)
    return ClassifyEntry(models=models, tokenizer=tokenizer, version=version)


def load_qa_dir(model_dir: Path, version: str = "tiny-0.1") -> QAEntry:
    tokenizer = WordTokenizer.load(model_dir / "vocab.json")
    state, _meta = load_state(model_dir / "qa.pt")
    model = TinyQA(len(tokenizer.vocab))
    model.load_state_dict(state)
    model.eval()
    return QAEntry(model=model, tokenizer=tokenizer, version=version)


def load_embed_dir(model_dir: Path, version: str = "sim-0.1") -> EmbedEntry:
    tokenizer = WordTokenizer.load(model_dir / "vocab.json")
    state, _meta = load_state(model_dir / "similarity.pt")
    model = SimilarityEmbedder(len(tokenizer.vocab))
    model.load_state_dict(state)
    model.eval()
    return EmbedEntry(model, tokenizer=tokenizer, dim=model.dim, version=version)
