"""Annotated utterance corpus: loading, validation, splitting, synthesis.

The corpus file format is line-delimited JSON, one record per line with
keys ``section``, ``text``, ``labels`` and optional ``source`` and
``annotators``. All operations here are pure functions over immutable
value data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .rand import Lcg
from .scenario import FeatureSet

SOURCES = ("authored", "paraphrase-template", "scripted-replay")


class CorpusError(Exception):
    """Raised for malformed corpus files or invalid corpus operations."""


@dataclass(frozen=True)
class AnnotatedExample:
    """One utterance plus its binary feature-label vector for one section."""

    section_id: str
    text: str
    labels: tuple[int, ...]
    source: str = "authored"
    annotator_ids: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.text.strip():
            raise CorpusError(f"example for section {self.section_id} has empty text")
        if any(bit not in (0, 1) for bit in self.labels):
            raise CorpusError(f"labels must be 0 or 1, got {self.labels}")
        if self.source not in SOURCES:
            raise CorpusError(f"unknown source {self.source!r}")


def _check_arity(example: AnnotatedExample, schema: Mapping[str, FeatureSet], where: str) -> None:
    feature_set = schema.get(example.section_id)
    if feature_set is None:
        raise CorpusError(f"{where}: unknown section {example.section_id!r}")
    if len(example.labels) != feature_set.feature_count:
        raise CorpusError(
            f"{where}: section {example.section_id} expects "
            f"{feature_set.feature_count} labels, got {len(example.labels)}"
        )


def load_corpus(path: str | Path, schema: Mapping[str, FeatureSet]) -> list[AnnotatedExample]:
    """Load and validate a line-delimited JSON corpus file.

    Every record is validated against the section's declared feature count;
    errors name the offending line.
    """
    path = Path(path)
    if not path.exists():
        raise CorpusError(f"corpus file not found: {path}")
    examples = []
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"line {line_no}: malformed JSON ({exc.msg})") from None
            try:
                example = AnnotatedExample(
                    section_id=record["section"],
                    text=record["text"],
                    labels=tuple(int(x) for x in record["labels"]),
                    source=record.get("source", "authored"),
                    annotator_ids=tuple(record.get("annotators", ())),
                )
            except KeyError as exc:
                raise CorpusError(f"line {line_no}: missing key {exc}") from None
            except CorpusError as exc:
                raise CorpusError(f"line {line_no}: {exc}") from None
            _check_arity(example, schema, f"line {line_no}")
            examples.append(example)
    return examples


def save_corpus(path: str | Path, examples: list[AnnotatedExample]) -> None:
    """Write examples as line-delimited JSON; inverse of load_corpus."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as handle:
        for ex in examples:
            record = {
                "section": ex.section_id,
                "text": ex.text,
                "labels": list(ex.labels),
                "source": ex.source,
            }
            if ex.annotator_ids:
                record["annotators"] = list(ex.annotator_ids)
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")


@dataclass(frozen=True)
class CorpusSplit:
    train: tuple[AnnotatedExample, ...]
    test: tuple[AnnotatedExample, ...]
    seed: int
    test_fraction: float


def split_corpus(
    examples: list[AnnotatedExample], test_fraction: float, seed: int
) -> CorpusSplit:
    """Deterministic per-section stratified split.

    Each section contributes round(n * test_fraction) test examples,
    clamped so both sides stay non-empty. Sections with fewer than two
    examples are rejected.
    """
    if not 0 < test_fraction < 1:
        raise CorpusError("test_fraction must be in (0, 1)")
    by_section: dict[str, list[AnnotatedExample]] = {}
    for ex in examples:
        by_section.setdefault(ex.section_id, []).append(ex)
    for section, group in by_section.items():
        if len(group) < 2:
            raise CorpusError(f"section {section} has fewer than 2 examples, cannot split")
    rng = Lcg(seed)
    train: list[AnnotatedExample] = []
    test: list[AnnotatedExample] = []
    for section in sorted(by_section):
        group = list(by_section[section])
        indices = list(range(len(group)))
        rng.shuffle(indices)
        n_test = min(max(1, round(len(group) * test_fraction)), len(group) - 1)
        picked = set(indices[:n_test])
        for i, ex in enumerate(group):
            (test if i in picked else train).append(ex)
    return CorpusSplit(
        train=tuple(train), test=tuple(test), seed=seed, test_fraction=test_fraction
    )


@dataclass(frozen=True)
class PhraseTemplate:
    """A sentence skeleton pinned to one label vector.

    Each slot is a tuple of interchangeable phrases (the empty string
    means the slot is silent); realizations join the chosen phrases and
    always carry ``labels``.
    """

    section_id: str
    labels: tuple[int, ...]
    slots: tuple[tuple[str, ...], ...]

    def realize(self, rng: Lcg) -> str:
        parts = [rng.choice(slot) for slot in self.slots]
        return " ".join(p for p in parts if p).strip()


@dataclass(frozen=True)
class SectionTemplates:
    """Templates plus mandatory seed rows for one evaluation section."""

    section_id: str
    feature_count: int
    templates: tuple[PhraseTemplate, ...]
    seed_examples: tuple[AnnotatedExample, ...] = ()

    def __post_init__(self):
        for template in self.templates:
            if len(template.labels) != self.feature_count:
                raise CorpusError(
                    f"template for section {self.section_id} carries "
                    f"{len(template.labels)} labels, expected {self.feature_count}"
                )
        for ex in self.seed_examples:
            if len(ex.labels) != self.feature_count:
                raise CorpusError(
                    f"seed example for section {self.section_id} carries "
                    f"{len(ex.labels)} labels, expected {self.feature_count}"
                )


def synthesize_corpus(
    templates: Mapping[str, SectionTemplates], count_per_section: int, seed: int
) -> list[AnnotatedExample]:
    """Generate a deterministic synthetic corpus from phrase templates.

    Every section's mandatory seed rows are always emitted, followed by
    ``count_per_section`` template realizations cycled evenly over the
    section's templates. Identical seeds produce byte-identical corpora.
    """
    if count_per_section < 0:
        raise CorpusError("count_per_section must be >= 0")
    rng = Lcg(seed)
    out: list[AnnotatedExample] = []
    for section in sorted(templates):
        entry = templates[section]
        out.extend(entry.seed_examples)
        if not entry.templates:
            continue
        seen = {ex.text for ex in entry.seed_examples}
        for i in range(count_per_section):
            template = entry.templates[i % len(entry.templates)]
            text = template.realize(rng)
            # light dedup: retry a few times so tiny phrase banks still
            # produce some surface variety; duplicates beyond that are fine
            for _ in range(3):
                if text not in seen:
                    break
                text = template.realize(rng)
            seen.add(text)
            out.append(
                AnnotatedExample(
                    section_id=section,
                    text=text,
                    labels=template.labels,
                    source="paraphrase-template",
                )
            )
    return out
