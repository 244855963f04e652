"""Trace-driven dangling-pointer elimination runtime."""

from ._dangsim import (
    corpus,
    encode,
    generate,
    id_of,
    run_trace,
    size_class,
    strip,
)

__all__ = [
    "corpus",
    "encode",
    "generate",
    "id_of",
    "run_trace",
    "size_class",
    "strip",
]

__version__ = "0.1.0"
