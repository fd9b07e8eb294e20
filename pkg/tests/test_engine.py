import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from culturesim import dme
from culturesim.asr import AsrResult, recognize_passthrough
from culturesim.corpus import AnnotatedExample
from culturesim.engine import (
    AvatarEvent,
    EngineError,
    FeedbackEvent,
    GuideEvent,
    Phase,
    RepeatEvent,
    SessionConfig,
    SessionEndedEvent,
    TurnGateError,
    read_log,
    replay_script,
    start_session,
    submit_input,
    write_log,
)
from culturesim.expert import train_section
from culturesim.scenario import (
    AvatarLine,
    EndNode,
    EvaluationPoint,
    Feature,
    FeatureSet,
    GuideNote,
    Scenario,
    Scene,
)


def _tiny_setup(sections=("sA", "sB")):
    """Two-evaluation-point scenario with trained knn bundles."""
    def fs(section):
        return FeatureSet(
            section_id=section,
            features=(Feature(code="A", description=f"doing the {section} thing"),),
        )

    nodes = [AvatarLine(id="intro", speaker="Avatar", text="Welcome.")]
    for i, section in enumerate(sections):
        nodes.append(
            EvaluationPoint(
                id=f"ep-{section}",
                section_id=section,
                feature_set=fs(section),
                repeat_prompt=f"Please repeat ({section}).",
            )
        )
        nodes.append(AvatarLine(id=f"mid-{i}", speaker="Avatar", text=f"Noted {i}."))
    nodes.append(EndNode(id="end"))
    scenario = Scenario(id="tiny", scenes=(Scene(id="only", nodes=tuple(nodes)),))

    bundles = {}
    for section in sections:
        rows = [
            AnnotatedExample(section_id=section, text="yes indeed truly", labels=(1,)),
            AnnotatedExample(section_id=section, text="no never nothing", labels=(0,)),
        ]
        bundles[section] = train_section(rows, section, "knn", {"neighbors": 1})
    return scenario, bundles


class TestStartSession:
    def test_bundled_scenario_opens_with_briefing_and_guide(self, bundled_scenario, rf_bundles):
        state, events = start_session(bundled_scenario, rf_bundles, SessionConfig())
        assert isinstance(events[0], AvatarEvent)
        assert events[0].speaker == "Captain Heist"
        assert events[0].text.startswith("Good Morning. As you know")
        assert any(isinstance(e, GuideEvent) for e in events)
        assert state.phase is Phase.AWAITING_PLAYER
        assert state.scenario.node(state.cursor).section_id == "s01"

    def test_output_only_scenario_ends_immediately(self):
        scenario = Scenario(
            id="mini",
            scenes=(Scene(id="a", nodes=(AvatarLine(id="l", speaker="X", text="hi"),
                                         EndNode(id="end"))),),
        )
        state, events = start_session(scenario, {}, SessionConfig())
        assert state.phase is Phase.ENDED
        assert [type(e) for e in events] == [AvatarEvent, SessionEndedEvent]
        assert state.log == []

    def test_missing_bundle_fails_before_any_output(self):
        scenario, bundles = _tiny_setup()
        bundles.pop("sB")
        with pytest.raises(EngineError, match="missing model bundle"):
            start_session(scenario, bundles, SessionConfig())

    def test_config_validation(self):
        with pytest.raises(EngineError):
            SessionConfig(alpha=1.5)
        with pytest.raises(EngineError):
            SessionConfig(max_repeats=0)


class TestGating:
    def test_low_confidence_requests_repeat_without_scoring(self):
        scenario, bundles = _tiny_setup()
        state, _ = start_session(scenario, bundles, SessionConfig(alpha=0.5))
        cursor_before = state.cursor
        events = submit_input(state, AsrResult(transcript="yes indeed truly", confidence=0.30))
        assert [type(e) for e in events] == [RepeatEvent]
        assert events[0].text == "Please repeat (sA)."
        assert state.cursor == cursor_before
        assert state.pending_repeats == 1
        assert all(r.score is None for r in state.log)

    def test_fail_open_after_exhausted_repeats_advances_unscored(self):
        scenario, bundles = _tiny_setup()
        state, _ = start_session(scenario, bundles, SessionConfig(alpha=0.9, max_repeats=2))
        low = AsrResult(transcript="mumble", confidence=0.10)
        assert isinstance(submit_input(state, low)[0], RepeatEvent)
        assert isinstance(submit_input(state, low)[0], RepeatEvent)
        events = submit_input(state, low)  # third low-confidence input
        assert not any(isinstance(e, RepeatEvent) for e in events)
        assert not any(isinstance(e, FeedbackEvent) for e in events)
        assert state.scenario.node(state.cursor).section_id == "sB"
        assert len(state.log) == 1
        assert state.log[0].score is None and state.log[0].feedback_text is None

    def test_accepted_input_scores_and_advances(self):
        scenario, bundles = _tiny_setup()
        state, _ = start_session(scenario, bundles, SessionConfig(alpha=0.5))
        events = submit_input(state, recognize_passthrough("yes indeed truly"))
        assert isinstance(events[0], FeedbackEvent)
        assert events[0].score.bits == (1,)
        assert isinstance(events[1], AvatarEvent)
        record = state.log[0]
        assert record.score.bits == (1,) and record.feedback_text
        assert state.scenario.node(state.cursor).section_id == "sB"

    def test_repeat_counter_resets_per_evaluation_point(self):
        scenario, bundles = _tiny_setup()
        state, _ = start_session(scenario, bundles, SessionConfig(alpha=0.5, max_repeats=2))
        submit_input(state, AsrResult(transcript="x", confidence=0.1))
        submit_input(state, recognize_passthrough("yes indeed truly"))
        assert state.pending_repeats == 0

    def test_terminal_input_ends_session(self):
        scenario, bundles = _tiny_setup(sections=("sA",))
        state, _ = start_session(scenario, bundles, SessionConfig())
        events = submit_input(state, recognize_passthrough("no never nothing"))
        assert isinstance(events[-1], SessionEndedEvent)
        assert state.phase is Phase.ENDED

    def test_submit_after_end_is_turn_gate_violation(self):
        scenario, bundles = _tiny_setup(sections=("sA",))
        state, _ = start_session(scenario, bundles, SessionConfig())
        submit_input(state, recognize_passthrough("yes indeed truly"))
        with pytest.raises(TurnGateError):
            submit_input(state, recognize_passthrough("anything"))


class TestReplay:
    def test_bundled_script_completes_with_scores_everywhere(self, bundled_scenario, rf_bundles):
        state = replay_script(bundled_scenario, rf_bundles, SessionConfig(), dme.replay_lines())
        assert state.phase is Phase.ENDED
        assert len(state.log) == 14
        sections = [r.section_id for r in state.log]
        assert sections == [f"s{i:02d}" for i in range(1, 15)]
        for record in state.log:
            assert record.score is not None
            assert record.feedback_text
            assert record.confidence == 1.0

    def test_short_script_raises(self, bundled_scenario, rf_bundles):
        with pytest.raises(EngineError, match="exhausted"):
            replay_script(bundled_scenario, rf_bundles, SessionConfig(), dme.replay_lines()[:3])

    def test_replay_deterministic_modulo_timestamps(self, bundled_scenario, rf_bundles):
        a = replay_script(bundled_scenario, rf_bundles, SessionConfig(), dme.replay_lines())
        b = replay_script(bundled_scenario, rf_bundles, SessionConfig(), dme.replay_lines())

        def strip(records):
            return [
                {**r.to_dict(), "timestamp": None} for r in records
            ]

        assert strip(a.log) == strip(b.log)


class TestLogPersistence:
    def test_jsonl_round_trip(self, tmp_path, bundled_scenario, rf_bundles):
        state = replay_script(bundled_scenario, rf_bundles, SessionConfig(), dme.replay_lines())
        path = tmp_path / "session.jsonl"
        write_log(path, state.log)
        restored = read_log(path)
        assert [r.to_dict() for r in restored] == [r.to_dict() for r in state.log]


class TestTurnProperties:
    @given(st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1, max_size=30))
    @settings(max_examples=60, deadline=None)
    def test_random_confidence_streams_respect_gating(self, confidences):
        scenario, bundles = _tiny_setup()
        alpha = 0.5
        config = SessionConfig(alpha=alpha, max_repeats=2)
        state, _ = start_session(scenario, bundles, config)
        repeats_here = 0
        for confidence in confidences:
            if state.phase is not Phase.AWAITING_PLAYER:
                break
            events = submit_input(
                state, AsrResult(transcript="yes indeed truly", confidence=confidence)
            )
            assert events, "accepted submissions always produce output"
            if isinstance(events[0], RepeatEvent):
                repeats_here += 1
                assert confidence < alpha
                assert repeats_here <= config.max_repeats
            else:
                repeats_here = 0
        # Gating invariant: no record carries a score below the threshold.
        for record in state.log:
            if record.confidence < alpha:
                assert record.score is None
            else:
                assert record.score is not None

    def test_session_always_terminates_under_low_confidence_flood(self):
        scenario, bundles = _tiny_setup()
        config = SessionConfig(alpha=0.9, max_repeats=2)
        state, _ = start_session(scenario, bundles, config)
        guard = 0
        while state.phase is Phase.AWAITING_PLAYER:
            submit_input(state, AsrResult(transcript="x", confidence=0.0))
            guard += 1
            assert guard < 20, "session failed to terminate"
        assert state.phase is Phase.ENDED
