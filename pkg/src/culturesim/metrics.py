"""Evaluation harness: micro-averaged classification metrics, section
report tables with mean/std aggregates, participant score aggregation,
and the noise sweep relating recognition error to model performance.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import asr, stats
from .classifiers import ScoreVector
from .corpus import CorpusSplit
from .expert import ExpertBundle, hash_section, score_response
from .rand import mix_seed

METRIC_COLUMNS = ("f1", "precision", "recall", "wer")


class MetricsError(Exception):
    pass


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


def _bits(vector) -> Sequence[int]:
    return vector.bits if isinstance(vector, ScoreVector) else vector


def micro_prf(
    predictions: Sequence, truths: Sequence
) -> tuple[float, float, float, ConfusionCounts]:
    """Precision, recall, and F1 with counts pooled over every label slot.

    Zero-denominator conventions: precision and recall are 1.0 when their
    denominator is 0; F1 is 0 when precision + recall is 0.
    """
    if len(predictions) != len(truths):
        raise MetricsError("predictions and truths must have equal length")
    tp = fp = fn = tn = 0
    for predicted, truth in zip(predictions, truths):
        p_bits, t_bits = _bits(predicted), _bits(truth)
        if len(p_bits) != len(t_bits):
            raise MetricsError("prediction/truth arity mismatch")
        for p, t in zip(p_bits, t_bits):
            if p == 1 and t == 1:
                tp += 1
            elif p == 1 and t == 0:
                fp += 1
            elif p == 0 and t == 1:
                fn += 1
            else:
                tn += 1
    precision = tp / (tp + fp) if (tp + fp) > 0 else 1.0
    recall = tp / (tp + fn) if (tp + fn) > 0 else 1.0
    f1 = 2 * precision * recall / (precision + recall) if (precision + recall) > 0 else 0.0
    return precision, recall, f1, ConfusionCounts(tp=tp, fp=fp, fn=fn, tn=tn)


@dataclass(frozen=True)
class ParticipantScores:
    """Per-participant score vectors keyed by section, with one shared
    section ordering across participants."""

    sections: tuple[str, ...]
    by_participant: Mapping[str, Mapping[str, ScoreVector]]

    def __post_init__(self):
        for participant, scores in self.by_participant.items():
            missing = set(self.sections) - set(scores)
            if missing:
                raise MetricsError(
                    f"participant {participant} is missing sections {sorted(missing)}"
                )


def aggregate_avg_score(scores: ParticipantScores, section: str) -> float:
    """Mean over participants of the per-participant mean feature hit rate
    at one section."""
    if not scores.by_participant:
        raise MetricsError("no participants")
    if section not in scores.sections:
        raise MetricsError(f"unknown section {section!r}")
    total = 0.0
    for participant_scores in scores.by_participant.values():
        bits = participant_scores[section].bits
        total += sum(bits) / len(bits)
    return total / len(scores.by_participant)


def table2_report(rows: Sequence[dict]) -> dict:
    """Append mean and sample standard deviation (n - 1) rows over the
    metric columns; values are percentages. Full precision is retained;
    rounding to one decimal happens only in the rendered table."""
    if len(rows) < 2:
        raise MetricsError("report needs at least 2 rows for a standard deviation")
    for row in rows:
        for column in METRIC_COLUMNS:
            if column not in row:
                raise MetricsError(f"row missing column {column!r}: {row}")
    mean_row = {c: statistics.fmean(row[c] for row in rows) for c in METRIC_COLUMNS}
    std_row = {c: statistics.stdev(row[c] for row in rows) for c in METRIC_COLUMNS}
    return {"rows": [dict(row) for row in rows], "mean": mean_row, "std": std_row}


def format_metrics_table(report: dict) -> str:
    """Aligned text table, one decimal per metric, mean/std footer rows."""
    header = ["Model Id", "Features", "F1 (%)", "Precision (%)", "Recall (%)", "WER (%)"]
    lines = []
    body = []
    for row in report["rows"]:
        body.append(
            [
                str(row.get("model_id", "")),
                str(row.get("features", "")),
                f"{row['f1']:.1f}",
                f"{row['precision']:.1f}",
                f"{row['recall']:.1f}",
                f"{row['wer']:.1f}",
            ]
        )
    for label, agg in (("Mean", report["mean"]), ("Std. Deviation", report["std"])):
        body.append(
            [
                label,
                "",
                f"{agg['f1']:.1f}",
                f"{agg['precision']:.1f}",
                f"{agg['recall']:.1f}",
                f"{agg['wer']:.1f}",
            ]
        )
    widths = [max(len(header[i]), *(len(r[i]) for r in body)) for i in range(len(header))]
    lines.append("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)))
    lines.append("  ".join("-" * w for w in widths))
    for r in body:
        lines.append("  ".join(r[i].ljust(widths[i]) for i in range(len(header))))
    return "\n".join(lines) + "\n"


def evaluate_bundles(
    split: CorpusSplit, bundles: Mapping[str, ExpertBundle]
) -> list[dict]:
    """Score the held-out test side per section; WER is 0 because the text
    reaches the models uncorrupted."""
    by_section: dict[str, list] = {}
    for example in split.test:
        by_section.setdefault(example.section_id, []).append(example)
    rows = []
    for index, section in enumerate(sorted(by_section), start=1):
        bundle = bundles.get(section)
        if bundle is None:
            raise MetricsError(f"no bundle for section {section}")
        examples = by_section[section]
        predictions = [score_response(bundle, ex.text) for ex in examples]
        truths = [ex.labels for ex in examples]
        precision, recall, f1, counts = micro_prf(predictions, truths)
        rows.append(
            {
                "model_id": index,
                "section": section,
                "features": bundle.classifier.k_labels,
                "f1": 100.0 * f1,
                "precision": 100.0 * precision,
                "recall": 100.0 * recall,
                "wer": 0.0,
                "confusion": {
                    "tp": counts.tp,
                    "fp": counts.fp,
                    "fn": counts.fn,
                    "tn": counts.tn,
                },
                "test_examples": len(examples),
            }
        )
    return rows


def _regressions(points: Sequence[dict]) -> dict:
    """F1-on-WER simple regression plus the two-predictor variant adding
    the section feature count; null when the predictors cannot support
    the fit (constant WER, too few points)."""
    wers = [p["wer"] for p in points]
    f1s = [p["f1"] for p in points]
    ks = [p["features"] for p in points]
    out: dict = {"simple": None, "multiple": None}
    if len(points) >= 3 and max(wers) - min(wers) > 1e-12:
        out["simple"] = stats.ols_simple(wers, f1s)
    if (
        len(points) >= 4
        and max(wers) - min(wers) > 1e-12
        and max(ks) - min(ks) > 0
    ):
        try:
            out["multiple"] = stats.ols_multiple(list(zip(ks, wers)), f1s)
        except stats.StatsError:
            out["multiple"] = None
    return out


def noise_sweep(
    split: CorpusSplit,
    bundles: Mapping[str, ExpertBundle],
    wer_targets: Sequence[float],
    seeds: Sequence[int],
) -> dict:
    """Corrupt the test texts at each target rate, rescore, and relate the
    realized word error rate to per-section F1.

    Deterministic given the seed list; aggregation is commutative so the
    (target, seed) evaluation order never matters.
    """
    by_section: dict[str, list] = {}
    for example in split.test:
        by_section.setdefault(example.section_id, []).append(example)
    sections = sorted(by_section)
    runs = []
    for target in wer_targets:
        for seed in seeds:
            for section in sections:
                bundle = bundles[section]
                examples = by_section[section]
                predictions = []
                rates = []
                for i, example in enumerate(examples):
                    noisy = asr.corrupt(example.text, target, seed=mix_seed(seed, i, hash_section(section)))
                    rates.append(asr.wer(example.text, noisy.transcript))
                    predictions.append(score_response(bundle, noisy.transcript))
                _, _, f1, _ = micro_prf(predictions, [ex.labels for ex in examples])
                runs.append(
                    {
                        "target": target,
                        "seed": seed,
                        "section": section,
                        "features": bundle.classifier.k_labels,
                        "wer": sum(rates) / len(rates),
                        "f1": f1,
                    }
                )
    summary = []
    for target in wer_targets:
        rows = [r for r in runs if r["target"] == target]
        summary.append(
            {
                "target": target,
                "mean_realized_wer": sum(r["wer"] for r in rows) / len(rows),
                "mean_f1": sum(r["f1"] for r in rows) / len(rows),
            }
        )
    return {
        "targets": list(wer_targets),
        "seeds": list(seeds),
        "runs": runs,
        "summary": summary,
        "regression": _regressions(runs),
    }
