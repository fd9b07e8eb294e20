"""Operator command line: synthesize corpora, train and evaluate models,
run noise sweeps, replay scripted sessions, and serve the HTTP API.

Every subcommand is deterministic given explicit seeds. Exit codes:
0 success, 1 runtime error, 2 usage error.
"""

from __future__ import annotations

import json
import sys
from importlib import resources
from pathlib import Path

import click

from . import corpus as corpus_mod
from . import dme, engine, expert, metrics
from .asr import AsrError
from .corpus import CorpusError
from .expert import BundleError
from .metrics import MetricsError
from .scenario import ScenarioError, load_scenario
from .stats import StatsError

_RUNTIME_ERRORS = (
    CorpusError,
    ScenarioError,
    BundleError,
    MetricsError,
    AsrError,
    StatsError,
    engine.EngineError,
    OSError,
)


def bundled_scenario_path() -> Path:
    return Path(str(resources.files("culturesim").joinpath("data/scenario_dme.json")))


def bundled_script_path() -> Path:
    return Path(str(resources.files("culturesim").joinpath("data/replay_script.txt")))


@click.group()
def main():
    """Cultural awareness training simulator."""


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


@main.command()
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True)
@click.option("--count", default=128, show_default=True, help="Generated examples per section.")
@click.option("--seed", default=42, show_default=True)
def synth(out: Path, count: int, seed: int):
    """Synthesize the bundled training corpus to a JSONL file."""
    try:
        examples = corpus_mod.synthesize_corpus(dme.default_templates(), count, seed)
        corpus_mod.save_corpus(out, examples)
    except _RUNTIME_ERRORS as exc:
        _fail(str(exc))
    click.echo(f"wrote {len(examples)} examples to {out}")


def _load_corpus_against(scenario_path: Path, corpus_path: Path):
    scenario = load_scenario(scenario_path)
    examples = corpus_mod.load_corpus(corpus_path, scenario.feature_sets())
    return scenario, examples


@main.command()
@click.option("--corpus", "corpus_path", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--scenario", "scenario_path", type=click.Path(path_type=Path), default=None,
              help="Scenario file; defaults to the bundled scenario.")
@click.option("--model", "kind", type=click.Choice(["knn", "rf", "mlp"]), default="rf",
              show_default=True)
@click.option("--out", "out_dir", type=click.Path(file_okay=False, path_type=Path), required=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--split", "holdout", type=float, default=0.0, show_default=True,
              help="Hold out this test fraction and train on the remainder only.")
def train(corpus_path: Path, scenario_path: Path | None, kind: str, out_dir: Path,
          seed: int, holdout: float):
    """Train one expert bundle per evaluation section."""
    kind_full = {"knn": "knn", "rf": "random_forest", "mlp": "mlp"}[kind]
    written: list[Path] = []
    try:
        scenario, examples = _load_corpus_against(
            scenario_path or bundled_scenario_path(), corpus_path
        )
        if holdout:
            examples = list(corpus_mod.split_corpus(examples, holdout, seed).train)
        by_section: dict[str, list] = {}
        for example in examples:
            by_section.setdefault(example.section_id, []).append(example)
        missing = [ep.section_id for ep in scenario.evaluation_points
                   if ep.section_id not in by_section]
        if missing:
            raise CorpusError(f"corpus has no examples for sections {missing}")
        out_dir.mkdir(parents=True, exist_ok=True)
        for section in sorted(by_section):
            bundle = expert.train_section(by_section[section], section, kind_full, seed=seed)
            path = out_dir / f"{section}.json"
            expert.save_bundle(bundle, path)
            written.append(path)
            click.echo(
                f"{section}: trained {kind_full} on {len(by_section[section])} examples "
                f"({bundle.classifier.k_labels} labels, vocab {bundle.vectorizer.dimension})"
            )
    except _RUNTIME_ERRORS as exc:
        for path in written:
            path.unlink(missing_ok=True)
        _fail(str(exc))
    click.echo(f"wrote {len(written)} bundles to {out_dir}")


def _write_report(report: dict, report_path: Path, table: str) -> None:
    report_path.parent.mkdir(parents=True, exist_ok=True)
    report_path.write_text(
        json.dumps(report, ensure_ascii=False, sort_keys=True, indent=2) + "\n",
        encoding="utf-8",
    )
    report_path.with_suffix(".txt").write_text(table, encoding="utf-8")


@main.command()
@click.option("--corpus", "corpus_path", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--models", "models_dir", type=click.Path(exists=True, file_okay=False, path_type=Path),
              required=True)
@click.option("--scenario", "scenario_path", type=click.Path(path_type=Path), default=None)
@click.option("--split", type=float, default=0.2, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--report", "report_path", type=click.Path(dir_okay=False, path_type=Path),
              required=True)
def evaluate(corpus_path: Path, models_dir: Path, scenario_path: Path | None,
             split: float, seed: int, report_path: Path):
    """Score the held-out split per section and write the metrics report."""
    try:
        _, examples = _load_corpus_against(scenario_path or bundled_scenario_path(), corpus_path)
        corpus_split = corpus_mod.split_corpus(examples, split, seed)
        bundles = expert.load_bundle_dir(models_dir)
        rows = metrics.evaluate_bundles(corpus_split, bundles)
        report = metrics.table2_report(rows)
        report["regression"] = {"simple": None, "multiple": None}
        report["split"] = {"test_fraction": split, "seed": seed}
        table = metrics.format_metrics_table(report)
        _write_report(report, report_path, table)
    except _RUNTIME_ERRORS as exc:
        _fail(str(exc))
    click.echo(table, nl=False)
    click.echo(f"report written to {report_path}")


@main.command("noise-sweep")
@click.option("--corpus", "corpus_path", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--models", "models_dir", type=click.Path(exists=True, file_okay=False, path_type=Path),
              required=True)
@click.option("--scenario", "scenario_path", type=click.Path(path_type=Path), default=None)
@click.option("--wer", "wer_targets", default="0,0.1,0.2,0.3,0.5", show_default=True,
              help="Comma-separated target word error rates.")
@click.option("--seeds", "seed_count", default=10, show_default=True)
@click.option("--split", type=float, default=0.2, show_default=True)
@click.option("--seed", default=0, show_default=True, help="Base seed for split and noise.")
@click.option("--report", "report_path", type=click.Path(dir_okay=False, path_type=Path),
              required=True)
def noise_sweep(corpus_path: Path, models_dir: Path, scenario_path: Path | None,
                wer_targets: str, seed_count: int, split: float, seed: int,
                report_path: Path):
    """Corrupt held-out texts at each target rate, rescore, and regress
    F1 on the realized word error rate."""
    try:
        targets = [float(part) for part in wer_targets.split(",") if part.strip() != ""]
        _, examples = _load_corpus_against(scenario_path or bundled_scenario_path(), corpus_path)
        corpus_split = corpus_mod.split_corpus(examples, split, seed)
        bundles = expert.load_bundle_dir(models_dir)
        report = metrics.noise_sweep(
            corpus_split, bundles, targets, seeds=[seed + i for i in range(seed_count)]
        )
        lines = ["target  realized_wer  mean_f1"]
        for row in report["summary"]:
            lines.append(
                f"{row['target']:<6.2f}  {row['mean_realized_wer']:<12.4f}  {row['mean_f1']:.4f}"
            )
        table = "\n".join(lines) + "\n"
        _write_report(report, report_path, table)
    except (_RUNTIME_ERRORS, ValueError) as exc:
        _fail(str(exc))
    click.echo(table, nl=False)
    click.echo(f"report written to {report_path}")


@main.command()
@click.option("--scenario", "scenario_path", type=click.Path(path_type=Path), default=None)
@click.option("--script", "script_path", type=click.Path(path_type=Path), default=None,
              help="Trainee lines, one per evaluation point; defaults to the bundled script.")
@click.option("--models", "models_dir", type=click.Path(exists=True, file_okay=False, path_type=Path),
              required=True)
@click.option("--alpha", default=0.5, show_default=True)
@click.option("--log", "log_path", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the session log as JSONL.")
def simulate(scenario_path: Path | None, script_path: Path | None, models_dir: Path,
             alpha: float, log_path: Path | None):
    """Replay a scripted session and print the transcript with scores."""
    try:
        scenario = load_scenario(scenario_path or bundled_scenario_path())
        lines = [
            line
            for line in (script_path or bundled_script_path()).read_text(encoding="utf-8").splitlines()
            if line.strip()
        ]
        bundles = expert.load_bundle_dir(models_dir)
        config = engine.SessionConfig(alpha=alpha)
        state, events = engine.start_session(scenario, bundles, config)
        remaining = list(lines)
        _print_events(events)
        while state.phase is engine.Phase.AWAITING_PLAYER:
            if not remaining:
                raise engine.EngineError("script exhausted before the scenario ended")
            line = remaining.pop(0)
            events = engine.submit_input(state, engine.recognize_passthrough(line))
            record = state.log[-1]
            score = list(record.score.bits) if record.score else None
            click.echo(f"Participant: {line}  (score {score})")
            _print_events(events)
        if log_path is not None:
            engine.write_log(log_path, state.log)
            click.echo(f"session log written to {log_path}")
    except _RUNTIME_ERRORS as exc:
        _fail(str(exc))


def _print_events(events) -> None:
    for event in events:
        if isinstance(event, engine.AvatarEvent):
            click.echo(f"{event.speaker}: {event.text}")
        elif isinstance(event, engine.GuideEvent):
            click.echo(f"[Guide] {event.text}")
        elif isinstance(event, engine.RepeatEvent):
            click.echo(f"[Repeat] {event.text}")
        elif isinstance(event, engine.FeedbackEvent):
            click.echo(f"[Feedback] {event.text}")
        elif isinstance(event, engine.SessionEndedEvent):
            click.echo("[Session ended]")


@main.command()
@click.option("--port", default=8000, show_default=True, envvar="APP_PORT")
@click.option("--host", default="127.0.0.1", show_default=True, envvar="APP_HOST")
@click.option("--alpha", default=0.5, show_default=True, envvar="APP_ALPHA")
@click.option("--models", "models_dir", type=click.Path(exists=True, file_okay=False, path_type=Path),
              required=True, envvar="APP_MODELS")
@click.option("--scenario", "scenario_path", type=click.Path(path_type=Path), default=None,
              envvar="APP_SCENARIO")
@click.option("--data", "data_dir", type=click.Path(file_okay=False, path_type=Path),
              default=Path("data"), show_default=True, envvar="APP_DATA")
@click.option("--static", "static_dir", type=click.Path(file_okay=False, path_type=Path),
              default=None, envvar="APP_STATIC", help="Optional built UI to serve at /.")
def serve(port: int, host: str, alpha: float, models_dir: Path,
          scenario_path: Path | None, data_dir: Path, static_dir: Path | None):
    """Run the HTTP API."""
    import uvicorn

    from .service import create_app

    try:
        app = create_app(
            scenario_path or bundled_scenario_path(),
            models_dir,
            data_dir,
            default_alpha=alpha,
            static_dir=static_dir,
        )
    except _RUNTIME_ERRORS as exc:
        _fail(str(exc))
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
