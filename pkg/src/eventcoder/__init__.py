"""Dictionary-free political event coding.

News documents go in; structured event records (category, mode, contexts,
actor, recipient, location, date) come out.  Classification, extractive QA
and embedding backends are pluggable; deterministic builtin baselines make
the whole pipeline runnable offline with no model service.
"""

from .model import (AttributeRules, AttributeSet, Document, EventRecord,
                    Ontology, ScoredLabel, Span, load_ontology, validate_record)

__version__ = "0.1.0"

__all__ = [
    "AttributeRules",
    "AttributeSet",
    "Document",
    "EventRecord",
    "Ontology",
    "ScoredLabel",
    "Span",
    "load_ontology",
    "validate_record",
    "__version__",
]
