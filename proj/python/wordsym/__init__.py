"""Factor frequencies, symmetries, and Rauzy graphs of substitution fixed points."""

from ._core import (
    HypothesisError,
    InvariantError,
    ParseError,
    Session,
    corpus_names,
)

__version__ = "0.1.0"

__all__ = [
    "Session",
    "corpus_names",
    "ParseError",
    "HypothesisError",
    "InvariantError",
    "__version__",
]
