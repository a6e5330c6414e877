"""Inference sidecar for the event coding pipeline.

Serves the three wire-protocol endpoints (/classify, /qa, /embed) from a
model registry, and ships the training scripts that produce those models:
per-label binary classifiers (balanced sets, consensus ensemble), an
extractive QA model, and a redirect-pair similarity embedder.
"""

__version__ = "0.1.0"
