"""Per-section expert models: fitted vectorizer plus multi-label classifier.

A bundle is trained on one section's examples, scores trainee utterances
for that section, and persists as a single JSON document. Bundles are
immutable once written; scoring is read-only and safe under arbitrary
concurrency.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import classifiers, textrep
from .classifiers import ClassifierModel, ScoreVector
from .corpus import AnnotatedExample
from .rand import mix_seed
from .textrep import VectorizerModel

FORMAT_VERSION = 1

DEFAULT_HYPERPARAMETERS = {
    "knn": {"neighbors": 1},
    "random_forest": {"trees": 40, "max_depth": 12},
    "mlp": {"hidden": 24, "lr": 0.5, "epochs": 400},
}


class BundleError(Exception):
    pass


def _digest(examples: Sequence[AnnotatedExample]) -> str:
    payload = json.dumps(
        [[ex.section_id, ex.text, list(ex.labels)] for ex in examples],
        ensure_ascii=False,
    )
    return "sha256:" + hashlib.sha256(payload.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class ExpertBundle:
    section_id: str
    vectorizer: VectorizerModel
    classifier: ClassifierModel
    feature_set_ref: str
    training_digest: str
    created_at: float | None = None


def train_section(
    examples: Sequence[AnnotatedExample],
    section_id: str,
    kind: str,
    hyperparameters: dict | None = None,
    seed: int = 0,
) -> ExpertBundle:
    """Fit the vectorizer on the section's texts, then the classifier on
    the transformed vectors; returns a sealed bundle."""
    if not examples:
        raise BundleError(f"no examples for section {section_id}")
    mixed = sorted({ex.section_id for ex in examples} - {section_id})
    if mixed:
        raise BundleError(
            f"examples from sections {mixed} mixed into training for {section_id}"
        )
    if kind not in classifiers.KINDS:
        raise BundleError(f"unknown classifier kind {kind!r}")

    params = dict(DEFAULT_HYPERPARAMETERS[kind])
    params.update(hyperparameters or {})

    vectorizer = textrep.fit_vectorizer([textrep.tokenize(ex.text) for ex in examples])
    X = [textrep.transform(vectorizer, ex.text) for ex in examples]
    Y = [list(ex.labels) for ex in examples]

    if kind == "knn":
        model = classifiers.train_knn(X, Y, neighbors=min(params["neighbors"], len(X)))
    elif kind == "random_forest":
        model = classifiers.train_rf(
            X, Y, trees=params["trees"], max_depth=params["max_depth"],
            seed=mix_seed(seed, hash_section(section_id)),
        )
    else:
        model = classifiers.train_mlp(
            X, Y, hidden=params["hidden"], lr=params["lr"], epochs=params["epochs"],
            seed=mix_seed(seed, hash_section(section_id)),
        )
    return ExpertBundle(
        section_id=section_id,
        vectorizer=vectorizer,
        classifier=model,
        feature_set_ref=section_id,
        training_digest=_digest(examples),
        created_at=time.time(),
    )


def hash_section(section_id: str) -> int:
    """Stable integer salt for a section id (hash() is process-random)."""
    return int.from_bytes(hashlib.sha256(section_id.encode()).digest()[:8], "big")


def score_response(bundle: ExpertBundle, text: str) -> ScoreVector:
    """Tokenize, vectorize, classify. Pure function of (bundle, text)."""
    vector = textrep.transform(bundle.vectorizer, text)
    predicted = classifiers.predict(bundle.classifier, vector)
    return ScoreVector(bits=predicted.bits, section_id=bundle.section_id)


def save_bundle(bundle: ExpertBundle, path: str | Path) -> None:
    document = {
        "format_version": FORMAT_VERSION,
        "section": bundle.section_id,
        "feature_set": bundle.feature_set_ref,
        "digest": bundle.training_digest,
        "vectorizer": bundle.vectorizer.to_dict(),
        "classifier": bundle.classifier.to_dict(),
    }
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(document, ensure_ascii=False, sort_keys=True), encoding="utf-8")


def load_bundle(path: str | Path) -> ExpertBundle:
    path = Path(path)
    if not path.exists():
        raise BundleError(f"bundle file not found: {path}")
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise BundleError(f"bundle file {path.name} is corrupt: {exc.msg}") from None
    if not isinstance(document, dict) or "format_version" not in document:
        raise BundleError(f"bundle file {path.name} is corrupt: not a bundle document")
    version = document["format_version"]
    if version != FORMAT_VERSION:
        raise BundleError(
            f"bundle format version {version} is not supported (expected {FORMAT_VERSION})"
        )
    try:
        return ExpertBundle(
            section_id=document["section"],
            vectorizer=VectorizerModel.from_dict(document["vectorizer"]),
            classifier=ClassifierModel.from_dict(document["classifier"]),
            feature_set_ref=document["feature_set"],
            training_digest=document["digest"],
            created_at=None,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise BundleError(f"bundle file {path.name} is corrupt: {exc}") from None


def load_bundle_dir(directory: str | Path) -> dict[str, ExpertBundle]:
    """Load every *.json bundle in a directory, keyed by section id."""
    directory = Path(directory)
    if not directory.is_dir():
        raise BundleError(f"model directory not found: {directory}")
    bundles = {}
    for path in sorted(directory.glob("*.json")):
        bundle = load_bundle(path)
        bundles[bundle.section_id] = bundle
    return bundles
