"""Adaptive feedback generation.

Maps a score vector onto the section's feature descriptions and renders
the instructional paragraph telling the trainee what an appropriate
response should include, what they got right, and what to improve. The
rendering is a pure function of (feature set, score); the preamble is
kept lowercase and any display casing is left to the client.
"""

from __future__ import annotations

from typing import Sequence

from .classifiers import ScoreVector
from .scenario import FeatureSet


class FeedbackError(Exception):
    pass


def join_phrases(phrases: Sequence[str]) -> str:
    """English list join: two items with 'and', three or more with a
    serial comma before the final 'and'."""
    items = list(phrases)
    if not items:
        return ""
    if len(items) == 1:
        return items[0]
    if len(items) == 2:
        return f"{items[0]} and {items[1]}"
    return ", ".join(items[:-1]) + f", and {items[-1]}"


def _bits(feature_set: FeatureSet, score: ScoreVector | Sequence[int]) -> list[int]:
    bits = list(score.bits) if isinstance(score, ScoreVector) else list(score)
    if len(bits) != feature_set.feature_count:
        raise FeedbackError(
            f"score carries {len(bits)} bits but section "
            f"{feature_set.section_id} declares {feature_set.feature_count} features"
        )
    return bits


def generate_feedback(feature_set: FeatureSet, score: ScoreVector | Sequence[int]) -> str:
    bits = _bits(feature_set, score)
    features = feature_set.features
    preamble = (
        "a culturally appropriate response in this section should include "
        f"{join_phrases([f.description for f in features])}. "
    )
    succeeded = [f.success_text() for f, bit in zip(features, bits) if bit == 1]
    improvable = [f.improvement_text() for f, bit in zip(features, bits) if bit == 0]
    if not improvable:
        body = f"From your response, you succeeded in {join_phrases(succeeded)}. Well done."
    elif not succeeded:
        body = f"Your response could be improved by {join_phrases(improvable)}."
    else:
        body = (
            f"From your response, you succeeded in {join_phrases(succeeded)}, "
            f"but your response could be improved by {join_phrases(improvable)}."
        )
    return preamble + body


def feedback_mentions(
    feature_set: FeatureSet, score: ScoreVector | Sequence[int]
) -> dict[str, str]:
    """Map each feature code to the clause it lands in ('success' or
    'improvement'); test support for the rendering above."""
    bits = _bits(feature_set, score)
    return {
        f.code: "success" if bit == 1 else "improvement"
        for f, bit in zip(feature_set.features, bits)
    }
