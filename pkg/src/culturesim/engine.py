"""Session state machine with gated turn taking.

The engine walks scenario nodes, emits avatar lines and guide notes,
pauses at evaluation points for trainee input, and gates low-confidence
recognition results behind repeat prompts. Accepted input at an
evaluation point is scored by the section's expert bundle, answered with
adaptive feedback, and logged.

Operations on one session are strictly serialized (caller contract);
distinct sessions share immutable scenario and bundle objects freely.
"""

from __future__ import annotations

import json
import time
import uuid
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Sequence

from .asr import AsrResult, recognize_passthrough
from .classifiers import ScoreVector
from .expert import ExpertBundle, score_response
from .feedback import generate_feedback
from .scenario import (
    AvatarLine,
    EndNode,
    EvaluationPoint,
    GuideNote,
    Scenario,
    validate_against_models,
)


class EngineError(Exception):
    pass


class TurnGateError(EngineError):
    """Input submitted while the session is not awaiting the player."""


class Phase(str, Enum):
    AWAITING_PLAYER = "awaiting_player"
    EMITTING = "emitting"
    ENDED = "ended"


@dataclass(frozen=True)
class SessionConfig:
    alpha: float = 0.5  # recognition confidence threshold
    max_repeats: int = 2
    asr_mode: str = "passthrough"
    debug_scores: bool = False

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise EngineError(f"alpha must be in [0, 1], got {self.alpha}")
        if self.max_repeats < 1:
            raise EngineError("max_repeats must be >= 1")


@dataclass(frozen=True)
class AvatarEvent:
    speaker: str
    text: str


@dataclass(frozen=True)
class GuideEvent:
    text: str


@dataclass(frozen=True)
class RepeatEvent:
    text: str


@dataclass(frozen=True)
class FeedbackEvent:
    text: str
    score: ScoreVector


@dataclass(frozen=True)
class SessionEndedEvent:
    pass


Event = AvatarEvent | GuideEvent | RepeatEvent | FeedbackEvent | SessionEndedEvent


@dataclass
class TurnRecord:
    node_id: str
    section_id: str
    raw_input: str
    transcript: str
    confidence: float
    score: ScoreVector | None
    feedback_text: str | None
    timestamp: float

    def to_dict(self) -> dict:
        return {
            "node_id": self.node_id,
            "section": self.section_id,
            "raw_input": self.raw_input,
            "transcript": self.transcript,
            "confidence": self.confidence,
            "score": list(self.score.bits) if self.score is not None else None,
            "feedback": self.feedback_text,
            "timestamp": self.timestamp,
        }

    @staticmethod
    def from_dict(data: dict) -> "TurnRecord":
        score = data.get("score")
        return TurnRecord(
            node_id=data["node_id"],
            section_id=data["section"],
            raw_input=data["raw_input"],
            transcript=data["transcript"],
            confidence=float(data["confidence"]),
            score=ScoreVector(bits=tuple(score), section_id=data["section"])
            if score is not None
            else None,
            feedback_text=data.get("feedback"),
            timestamp=float(data["timestamp"]),
        )


@dataclass
class SessionState:
    session_id: str
    scenario: Scenario
    bundles: dict[str, ExpertBundle]
    config: SessionConfig
    cursor: str  # current node id
    pending_repeats: int = 0
    log: list[TurnRecord] = field(default_factory=list)
    phase: Phase = Phase.EMITTING


def _emit_until_input(state: SessionState) -> list[Event]:
    """Advance from the cursor, emitting output nodes, until an evaluation
    point awaits input or the scenario ends."""
    events: list[Event] = []
    node = state.scenario.node(state.cursor)
    while True:
        if isinstance(node, AvatarLine):
            events.append(AvatarEvent(speaker=node.speaker, text=node.text))
        elif isinstance(node, GuideNote):
            events.append(GuideEvent(text=node.text))
        elif isinstance(node, EvaluationPoint):
            state.cursor = node.id
            state.phase = Phase.AWAITING_PLAYER
            state.pending_repeats = 0
            return events
        elif isinstance(node, EndNode):
            state.cursor = node.id
            state.phase = Phase.ENDED
            events.append(SessionEndedEvent())
            return events
        node = state.scenario.successor(node)


def start_session(
    scenario: Scenario,
    bundles: dict[str, ExpertBundle],
    config: SessionConfig,
    session_id: str | None = None,
) -> tuple[SessionState, list[Event]]:
    """Validate the scenario against the bundles and emit every leading
    output up to the first node that awaits input."""
    mismatches = validate_against_models(scenario, bundles)
    if mismatches:
        raise EngineError("scenario/model mismatch: " + "; ".join(mismatches))
    state = SessionState(
        session_id=session_id or uuid.uuid4().hex,
        scenario=scenario,
        bundles=bundles,
        config=config,
        cursor=scenario.first_node().id,
    )
    return state, _emit_until_input(state)


def submit_input(
    state: SessionState, asr_result: AsrResult, raw_input: str | None = None
) -> list[Event]:
    """Process one trainee input at the current evaluation point.

    ``raw_input`` is the utterance as the trainee produced it, kept in the
    log alongside the recognized transcript; it defaults to the transcript
    when recognition was lossless.

    Low-confidence input is answered with the node's repeat prompt until
    max_repeats is exhausted; after that the dialogue advances without a
    score so the session can never hang (feedback stays withheld because
    the utterance was never reliably heard). Accepted input is scored,
    answered with feedback, and the walk continues to the next input node
    or the end.
    """
    if state.phase is not Phase.AWAITING_PLAYER:
        raise TurnGateError(
            f"session {state.session_id} is not awaiting input (phase={state.phase.value})"
        )
    node = state.scenario.node(state.cursor)
    assert isinstance(node, EvaluationPoint)
    config = state.config
    if raw_input is None:
        raw_input = asr_result.transcript

    if asr_result.confidence < config.alpha:
        if state.pending_repeats < config.max_repeats:
            state.pending_repeats += 1
            return [RepeatEvent(text=node.repeat_prompt)]
        # Repeats exhausted: advance unscored.
        state.log.append(
            TurnRecord(
                node_id=node.id,
                section_id=node.section_id,
                raw_input=raw_input,
                transcript=asr_result.transcript,
                confidence=asr_result.confidence,
                score=None,
                feedback_text=None,
                timestamp=time.time(),
            )
        )
        state.phase = Phase.EMITTING
        state.cursor = state.scenario.successor(node).id
        events: list[Event] = [
            GuideEvent(text="Your response could not be assessed this time. Let us continue.")
        ]
        events.extend(_emit_until_input(state))
        return events

    bundle = state.bundles[node.section_id]
    score = score_response(bundle, asr_result.transcript)
    feedback_text = generate_feedback(node.feature_set, score)
    state.log.append(
        TurnRecord(
            node_id=node.id,
            section_id=node.section_id,
            raw_input=raw_input,
            transcript=asr_result.transcript,
            confidence=asr_result.confidence,
            score=score,
            feedback_text=feedback_text,
            timestamp=time.time(),
        )
    )
    state.phase = Phase.EMITTING
    state.cursor = state.scenario.successor(node).id
    events = [FeedbackEvent(text=feedback_text, score=score)]
    events.extend(_emit_until_input(state))
    return events


def replay_script(
    scenario: Scenario,
    bundles: dict[str, ExpertBundle],
    config: SessionConfig,
    lines: Sequence[str],
) -> SessionState:
    """Feed scripted lines through passthrough recognition until the
    session ends; returns the final state with its complete log."""
    state, _ = start_session(scenario, bundles, config)
    remaining = list(lines)
    while state.phase is Phase.AWAITING_PLAYER:
        if not remaining:
            raise EngineError(
                f"script exhausted before the scenario ended "
                f"(awaiting input at node {state.cursor})"
            )
        submit_input(state, recognize_passthrough(remaining.pop(0)))
    return state


def write_log(path: str | Path, records: Sequence[TurnRecord]) -> None:
    """Persist a session log as line-delimited JSON, one record per line."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record.to_dict(), ensure_ascii=False) + "\n")


def append_log(path: str | Path, record: TurnRecord) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("a", encoding="utf-8") as handle:
        handle.write(json.dumps(record.to_dict(), ensure_ascii=False) + "\n")
        handle.flush()


def read_log(path: str | Path) -> list[TurnRecord]:
    path = Path(path)
    records = []
    with path.open(encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line:
                records.append(TurnRecord.from_dict(json.loads(line)))
    return records
