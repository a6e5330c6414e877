"""The inference service: /classify, /qa and /embed.

Implements the pipeline's wire protocol (see the main repo's
docs/wire_protocol.md): JSON bodies with fixed field names and a mandatory
X-Model-Version response header.  Inference is deterministic within a server
process: models run in eval mode with no dropout, and identical requests
produce identical responses.
"""

from __future__ import annotations

import argparse
import logging

from fastapi import FastAPI, Response
from pydantic import BaseModel

from .models import NgramEmbedder
from .registry import ModelRegistry

logger = logging.getLogger(__name__)

VERSION_HEADER = "X-Model-Version"


class ClassifyRequest(BaseModel):
    text: str
    labels: list[str]


class QARequest(BaseModel):
    context: str
    question: str


class EmbedRequest(BaseModel):
    texts: list[str]


def create_app(registry: ModelRegistry | None = None) -> FastAPI:
    registry = registry or ModelRegistry()
    app = FastAPI(title="eventcoder sidecar")
    app.state.registry = registry

    @app.get("/health")
    def health(response: Response):
        response.headers[VERSION_HEADER] = "sidecar@healthy"
        return {
            "classify": registry.classify.version if registry.classify else None,
            "qa": registry.qa.version if registry.qa else None,
            "embed": registry.embed.version,
        }

    @app.post("/classify")
    def classify(request: ClassifyRequest, response: Response):
        entry = registry.classify
        version = entry.version if entry else "none"
        response.headers[VERSION_HEADER] = f"sidecar-classify@{version}"
        known = entry.models if entry else {}
        scores = {}
        unknown = []
        for label in request.labels:
            model = known.get(label)
            if model is None:
                unknown.append(label)
                continue
            scores[label] = round(model.score(entry.tokenizer, request.text), 6)
        return {"scores": scores, "unknown_labels": unknown}

    @app.post("/qa")
    def qa(request: QARequest, response: Response):
        entry = registry.qa
        version = entry.version if entry else "none"
        response.headers[VERSION_HEADER] = f"sidecar-qa@{version}"
        if entry is None:
            return {"answer": None, "truncated": False}
        answer, truncated = entry.model.answer(entry.tokenizer, request.question,
                                               request.context)
        return {"answer": answer, "truncated": truncated}

    @app.post("/embed")
    def embed(request: EmbedRequest, response: Response):
        entry = registry.embed
        response.headers[VERSION_HEADER] = f"sidecar-embed@{entry.version}"
        if isinstance(entry.backend, NgramEmbedder):
            vectors = entry.backend.embed(request.texts)
        else:
            vectors = entry.backend.embed(entry.tokenizer, request.texts)
        return {"vectors": [[float(x) for x in row] for row in vectors],
                "dim": int(vectors.shape[1]) if len(request.texts) else entry.dim}

    return app


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Run the inference sidecar.")
    parser.add_argument("--config", help="registry YAML (omit for ngram-embed only)")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8900)
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO)

    import uvicorn

    registry = ModelRegistry.from_config(args.config) if args.config else ModelRegistry()
    uvicorn.run(create_app(registry), host=args.host, port=args.port,
                log_level="warning")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
