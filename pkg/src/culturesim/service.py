"""HTTP facade over the dialogue engine.

Exposes session lifecycle, turn submission, session logs, scenario
summaries, and the latest model metrics report. Scenario and model
bundles are loaded once at startup and shared immutably across sessions;
per-session mutation is serialized with a non-blocking lock, so a second
concurrent input to the same session receives 409. Turn records are
appended to the session's JSONL file and flushed before the response is
sent, which makes acknowledged log entries survive a restart.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from . import engine
from .asr import corrupt, recognize_passthrough
from .engine import (
    AvatarEvent,
    FeedbackEvent,
    GuideEvent,
    Phase,
    RepeatEvent,
    SessionConfig,
    SessionEndedEvent,
    SessionState,
    TurnGateError,
)
from .expert import ExpertBundle, load_bundle_dir
from .rand import Lcg, mix_seed
from .scenario import Scenario, load_scenario


class CreateSessionRequest(BaseModel):
    scenario_id: str
    alpha: float | None = Field(default=None, ge=0.0, le=1.0)
    asr_mode: Literal["passthrough", "simulated_noise", "external"] = "passthrough"
    debug_scores: bool = False
    noise_wer: float = Field(default=0.2, ge=0.0, le=0.9)
    seed: int | None = None


class EventOut(BaseModel):
    kind: Literal["avatar_lines", "guide_note", "repeat_request", "feedback", "session_ended"]
    text: str | None = None
    speaker: str | None = None
    score: list[int] | None = None


class CreateSessionResponse(BaseModel):
    session_id: str
    events: list[EventOut]


class TurnRequest(BaseModel):
    text: str
    simulate_wer: float | None = Field(default=None, ge=0.0, le=0.9)
    seed: int | None = None


class TurnResponse(BaseModel):
    events: list[EventOut]


class TurnRecordOut(BaseModel):
    node_id: str
    section: str
    raw_input: str
    transcript: str
    confidence: float
    score: list[int] | None
    feedback: str | None
    timestamp: float


class SessionLogResponse(BaseModel):
    session_id: str
    records: list[TurnRecordOut]


class ScenarioSummary(BaseModel):
    id: str
    scenes: int
    evaluation_points: list[str]


def _event_out(event: engine.Event, debug_scores: bool) -> EventOut:
    if isinstance(event, AvatarEvent):
        return EventOut(kind="avatar_lines", speaker=event.speaker, text=event.text)
    if isinstance(event, GuideEvent):
        return EventOut(kind="guide_note", text=event.text)
    if isinstance(event, RepeatEvent):
        return EventOut(kind="repeat_request", text=event.text)
    if isinstance(event, FeedbackEvent):
        return EventOut(
            kind="feedback",
            text=event.text,
            score=list(event.score.bits) if debug_scores else None,
        )
    if isinstance(event, SessionEndedEvent):
        return EventOut(kind="session_ended")
    raise TypeError(f"unknown event {event!r}")


@dataclass
class _LiveSession:
    state: SessionState
    lock: threading.Lock = field(default_factory=threading.Lock)
    rng: Lcg | None = None
    noise_wer: float = 0.2
    turn_counter: int = 0


@dataclass
class ServiceContext:
    scenario: Scenario
    bundles: dict[str, ExpertBundle]
    data_dir: Path
    default_alpha: float = 0.5
    sessions: dict[str, _LiveSession] = field(default_factory=dict)
    registry_lock: threading.Lock = field(default_factory=threading.Lock)

    def log_path(self, session_id: str) -> Path:
        return self.data_dir / "sessions" / f"{session_id}.jsonl"

    def report_path(self) -> Path:
        return self.data_dir / "reports" / "models.json"


def create_app(
    scenario_path: str | Path,
    models_dir: str | Path,
    data_dir: str | Path,
    default_alpha: float = 0.5,
    static_dir: str | Path | None = None,
) -> FastAPI:
    scenario = load_scenario(scenario_path)
    bundles = load_bundle_dir(models_dir)
    context = ServiceContext(
        scenario=scenario,
        bundles=bundles,
        data_dir=Path(data_dir),
        default_alpha=default_alpha,
    )
    app = FastAPI(title="culturesim", version="0.1.0")
    app.state.context = context

    @app.get("/api/scenarios", response_model=list[ScenarioSummary])
    def list_scenarios():
        return [
            ScenarioSummary(
                id=context.scenario.id,
                scenes=len(context.scenario.scenes),
                evaluation_points=[
                    ep.section_id for ep in context.scenario.evaluation_points
                ],
            )
        ]

    @app.post("/api/sessions", response_model=CreateSessionResponse, status_code=201)
    def create_session(request: CreateSessionRequest):
        if request.scenario_id != context.scenario.id:
            raise HTTPException(status_code=404, detail=f"unknown scenario {request.scenario_id!r}")
        if not context.bundles:
            raise HTTPException(status_code=503, detail="models are not loaded")
        config = SessionConfig(
            alpha=request.alpha if request.alpha is not None else context.default_alpha,
            asr_mode=request.asr_mode,
            debug_scores=request.debug_scores,
        )
        session_id = uuid.uuid4().hex
        try:
            state, events = engine.start_session(
                context.scenario, context.bundles, config, session_id=session_id
            )
        except engine.EngineError as exc:
            raise HTTPException(status_code=503, detail=str(exc)) from None
        live = _LiveSession(state=state)
        live.rng = Lcg(request.seed if request.seed is not None else int(session_id, 16))
        live.noise_wer = request.noise_wer
        with context.registry_lock:
            context.sessions[session_id] = live
        return CreateSessionResponse(
            session_id=session_id,
            events=[_event_out(e, config.debug_scores) for e in events],
        )

    def _live(session_id: str) -> _LiveSession:
        with context.registry_lock:
            live = context.sessions.get(session_id)
        if live is None:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id!r}")
        return live

    @app.post("/api/sessions/{session_id}/input", response_model=TurnResponse)
    def submit_turn(session_id: str, request: TurnRequest):
        live = _live(session_id)
        if not live.lock.acquire(blocking=False):
            raise HTTPException(
                status_code=409, detail="session is processing another turn"
            )
        try:
            state = live.state
            if state.phase is Phase.ENDED:
                raise HTTPException(status_code=410, detail="session has ended")
            config = state.config
            if config.asr_mode == "external":
                raise HTTPException(
                    status_code=501,
                    detail="no external speech recognition client is configured",
                )
            wer_target = request.simulate_wer
            if wer_target is None and config.asr_mode == "simulated_noise":
                wer_target = live.noise_wer
            live.turn_counter += 1
            if wer_target:
                seed = (
                    request.seed
                    if request.seed is not None
                    else mix_seed(live.rng.randint(1 << 30), live.turn_counter)
                )
                asr_result = corrupt(request.text, wer_target, seed=seed)
            else:
                asr_result = recognize_passthrough(request.text)
            log_mark = len(state.log)
            try:
                events = engine.submit_input(state, asr_result, raw_input=request.text)
            except TurnGateError as exc:
                raise HTTPException(status_code=409, detail=str(exc)) from None
            for record in state.log[log_mark:]:
                engine.append_log(context.log_path(session_id), record)
            return TurnResponse(
                events=[_event_out(e, config.debug_scores) for e in events]
            )
        finally:
            live.lock.release()

    @app.get("/api/sessions/{session_id}/log", response_model=SessionLogResponse)
    def session_log(session_id: str):
        # Disk is the source of truth so acknowledged records survive restarts.
        path = context.log_path(session_id)
        known = session_id in context.sessions
        if not path.exists():
            if not known:
                raise HTTPException(status_code=404, detail=f"unknown session {session_id!r}")
            return SessionLogResponse(session_id=session_id, records=[])
        records = [
            TurnRecordOut(
                node_id=r.node_id,
                section=r.section_id,
                raw_input=r.raw_input,
                transcript=r.transcript,
                confidence=r.confidence,
                score=list(r.score.bits) if r.score is not None else None,
                feedback=r.feedback_text,
                timestamp=r.timestamp,
            )
            for r in engine.read_log(path)
        ]
        return SessionLogResponse(session_id=session_id, records=records)

    @app.get("/api/reports/models")
    def models_report():
        path = context.report_path()
        if not path.exists():
            raise HTTPException(
                status_code=404,
                detail=(
                    "no metrics report has been generated yet; run the evaluate "
                    "command and write its report under the service data directory"
                ),
            )
        return json.loads(path.read_text(encoding="utf-8"))

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
