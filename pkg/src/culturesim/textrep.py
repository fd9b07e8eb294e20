"""Tokenization and TF-IDF vector representation of utterances."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


def tokenize(text: str) -> list[str]:
    """Lowercase and split on runs of characters that are neither
    alphanumeric nor apostrophe; empty tokens are dropped."""
    tokens = []
    current: list[str] = []
    for ch in text.lower():
        if ch.isalnum() or ch == "'":
            current.append(ch)
        elif current:
            tokens.append("".join(current))
            current = []
    if current:
        tokens.append("".join(current))
    return tokens


@dataclass(frozen=True)
class SparseVector:
    """L2-normalized sparse vector; entries sorted by strictly increasing index."""

    dimension: int
    entries: tuple[tuple[int, float], ...]

    def __post_init__(self):
        last = -1
        for index, weight in self.entries:
            if index <= last or index >= self.dimension:
                raise ValueError("entries must have strictly increasing indices < dimension")
            if weight <= 0:
                raise ValueError("entry weights must be positive")
            last = index

    def is_zero(self) -> bool:
        return not self.entries

    def norm(self) -> float:
        return math.sqrt(sum(w * w for _, w in self.entries))

    def to_dense(self) -> np.ndarray:
        dense = np.zeros(self.dimension)
        for index, weight in self.entries:
            dense[index] = weight
        return dense


@dataclass(frozen=True)
class VectorizerModel:
    """Fitted TF-IDF vocabulary and inverse document frequencies.

    Immutable after fit; ``transform`` is read-only and safe to call
    concurrently.
    """

    vocabulary: dict[str, int]  # token -> contiguous column index 0..d-1
    idf: tuple[float, ...]
    fitted_on: int  # document count N

    @property
    def dimension(self) -> int:
        return len(self.vocabulary)

    def to_dict(self) -> dict:
        return {
            "vocabulary": dict(self.vocabulary),
            "idf": list(self.idf),
            "fitted_on": self.fitted_on,
        }

    @staticmethod
    def from_dict(data: dict) -> "VectorizerModel":
        return VectorizerModel(
            vocabulary={str(k): int(v) for k, v in data["vocabulary"].items()},
            idf=tuple(float(x) for x in data["idf"]),
            fitted_on=int(data["fitted_on"]),
        )


def fit_vectorizer(documents: list[list[str]]) -> VectorizerModel:
    """Fit vocabulary and smoothed idf weights on tokenized documents.

    idf(t) = ln((1 + N) / (1 + df(t))) + 1, where N is the document count
    and df(t) the number of documents containing t. The smoothing keeps
    every weight >= 1 and well defined for any df.
    """
    if not any(documents):
        raise ValueError("cannot fit vectorizer: all documents are empty")
    n_docs = len(documents)
    doc_freq: dict[str, int] = {}
    for doc in documents:
        for token in set(doc):
            doc_freq[token] = doc_freq.get(token, 0) + 1
    vocabulary = {token: i for i, token in enumerate(sorted(doc_freq))}
    idf = tuple(
        math.log((1 + n_docs) / (1 + doc_freq[token])) + 1.0 for token in sorted(doc_freq)
    )
    return VectorizerModel(vocabulary=vocabulary, idf=idf, fitted_on=n_docs)


def transform(model: VectorizerModel, text: str) -> SparseVector:
    """Map text to an L2-normalized TF-IDF vector.

    Raw weight is term count times idf. Tokens outside the vocabulary are
    ignored; text with no known tokens yields the zero vector.
    """
    counts: dict[int, int] = {}
    for token in tokenize(text):
        index = model.vocabulary.get(token)
        if index is not None:
            counts[index] = counts.get(index, 0) + 1
    if not counts:
        return SparseVector(dimension=model.dimension, entries=())
    raw = [(index, count * model.idf[index]) for index, count in sorted(counts.items())]
    norm = math.sqrt(sum(w * w for _, w in raw))
    return SparseVector(
        dimension=model.dimension,
        entries=tuple((index, w / norm) for index, w in raw),
    )
