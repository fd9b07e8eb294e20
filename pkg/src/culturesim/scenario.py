"""Branching dialogue scenario: data model, loader, and validation.

A scenario is an ordered list of scenes, each holding ordered nodes.
Control flows from node to node in order; an evaluation point may name an
explicit successor with ``next``. Validation is total: a structurally
well-formed file yields either a Scenario or a precise error, never a
partial object.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path


class ScenarioError(Exception):
    """Raised for any structural or referential defect in a scenario."""


@dataclass(frozen=True)
class Feature:
    code: str
    description: str  # gerund phrase interpolated verbatim into feedback
    success_phrase: str = ""
    improvement_phrase: str = ""

    def success_text(self) -> str:
        return self.success_phrase or self.description

    def improvement_text(self) -> str:
        return self.improvement_phrase or self.description


@dataclass(frozen=True)
class FeatureSet:
    section_id: str
    features: tuple[Feature, ...]

    def __post_init__(self):
        if len(self.features) < 1:
            raise ScenarioError(f"feature set for {self.section_id} must have >= 1 feature")
        codes = [f.code for f in self.features]
        if len(set(codes)) != len(codes):
            raise ScenarioError(f"duplicate feature codes in section {self.section_id}")
        for f in self.features:
            if not f.description.strip():
                raise ScenarioError(f"empty feature description in section {self.section_id}")

    @property
    def feature_count(self) -> int:
        return len(self.features)


@dataclass(frozen=True)
class AvatarLine:
    id: str
    speaker: str
    text: str


@dataclass(frozen=True)
class GuideNote:
    id: str
    text: str


@dataclass(frozen=True)
class EvaluationPoint:
    id: str
    section_id: str
    feature_set: FeatureSet
    repeat_prompt: str
    next: str | None = None  # defaults to the following node in order


@dataclass(frozen=True)
class EndNode:
    id: str


Node = AvatarLine | GuideNote | EvaluationPoint | EndNode


@dataclass(frozen=True)
class Scene:
    id: str
    nodes: tuple[Node, ...]


@dataclass(frozen=True)
class Scenario:
    id: str
    scenes: tuple[Scene, ...]
    _by_id: dict = field(default_factory=dict, repr=False, compare=False)
    _order: list = field(default_factory=list, repr=False, compare=False)
    _pos: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        order = [node for scene in self.scenes for node in scene.nodes]
        by_id = {}
        for node in order:
            if node.id in by_id:
                raise ScenarioError(f"duplicate node id {node.id!r}")
            by_id[node.id] = node
        object.__setattr__(self, "_order", order)
        object.__setattr__(self, "_by_id", by_id)
        object.__setattr__(self, "_pos", {node.id: i for i, node in enumerate(order)})
        _validate(self)

    def node(self, node_id: str) -> Node:
        return self._by_id[node_id]

    def first_node(self) -> Node:
        return self._order[0]

    def successor(self, node: Node) -> Node:
        """The node control flows to after ``node``."""
        if isinstance(node, EndNode):
            raise ScenarioError("End node has no successor")
        if isinstance(node, EvaluationPoint) and node.next is not None:
            return self._by_id[node.next]
        return self._order[self._pos[node.id] + 1]

    @property
    def evaluation_points(self) -> list[EvaluationPoint]:
        return [n for n in self._order if isinstance(n, EvaluationPoint)]

    def feature_sets(self) -> dict[str, FeatureSet]:
        return {ep.section_id: ep.feature_set for ep in self.evaluation_points}

    def scene_of(self, node_id: str) -> str:
        for scene in self.scenes:
            if any(n.id == node_id for n in scene.nodes):
                return scene.id
        raise KeyError(node_id)


def _validate(scenario: Scenario) -> None:
    order = scenario._order
    by_id = scenario._by_id
    if not order:
        raise ScenarioError("scenario has no nodes")

    ends = [n for n in order if isinstance(n, EndNode)]
    if len(ends) != 1:
        raise ScenarioError(f"scenario must have exactly one End node, found {len(ends)}")

    sections = [n.section_id for n in order if isinstance(n, EvaluationPoint)]
    dupes = {s for s in sections if sections.count(s) > 1}
    if dupes:
        raise ScenarioError(f"duplicate evaluation section ids: {sorted(dupes)}")

    for node in order:
        if isinstance(node, EvaluationPoint) and node.next is not None:
            if node.next not in by_id:
                raise ScenarioError(
                    f"node {node.id!r} references missing node {node.next!r}"
                )

    # Walk from the first node; the single-successor chain must reach End
    # without revisiting a node, and must cover every node.
    visited = set()
    node = order[0]
    while True:
        if node.id in visited:
            raise ScenarioError(f"cycle detected at node {node.id!r}")
        visited.add(node.id)
        if isinstance(node, EndNode):
            break
        try:
            node = scenario.successor(node)
        except IndexError:
            raise ScenarioError(
                f"path falls off the scenario after node {node.id!r} without reaching End"
            ) from None
    unreachable = [n.id for n in order if n.id not in visited]
    if unreachable:
        raise ScenarioError(f"unreachable nodes: {unreachable}")


# --- JSON (de)serialization -------------------------------------------------

def _node_from_dict(data: dict) -> Node:
    kind = data.get("kind")
    try:
        if kind == "avatar_line":
            return AvatarLine(id=data["id"], speaker=data["speaker"], text=data["text"])
        if kind == "guide_note":
            return GuideNote(id=data["id"], text=data["text"])
        if kind == "evaluation_point":
            features = tuple(
                Feature(
                    code=f["code"],
                    description=f["description"],
                    success_phrase=f.get("success_phrase", ""),
                    improvement_phrase=f.get("improvement_phrase", ""),
                )
                for f in data["feature_set"]["features"]
            )
            return EvaluationPoint(
                id=data["id"],
                section_id=data["section"],
                feature_set=FeatureSet(section_id=data["section"], features=features),
                repeat_prompt=data["repeat_prompt"],
                next=data.get("next"),
            )
        if kind == "end":
            return EndNode(id=data["id"])
    except KeyError as exc:
        raise ScenarioError(f"node {data.get('id', '?')!r} is missing field {exc}") from None
    raise ScenarioError(f"unknown node kind {kind!r}")


def _node_to_dict(node: Node) -> dict:
    if isinstance(node, AvatarLine):
        return {"kind": "avatar_line", "id": node.id, "speaker": node.speaker, "text": node.text}
    if isinstance(node, GuideNote):
        return {"kind": "guide_note", "id": node.id, "text": node.text}
    if isinstance(node, EvaluationPoint):
        out = {
            "kind": "evaluation_point",
            "id": node.id,
            "section": node.section_id,
            "repeat_prompt": node.repeat_prompt,
            "feature_set": {
                "features": [
                    {
                        "code": f.code,
                        "description": f.description,
                        "success_phrase": f.success_phrase,
                        "improvement_phrase": f.improvement_phrase,
                    }
                    for f in node.feature_set.features
                ]
            },
        }
        if node.next is not None:
            out["next"] = node.next
        return out
    return {"kind": "end", "id": node.id}


def parse_scenario(data: dict) -> Scenario:
    try:
        scenes = tuple(
            Scene(id=s["id"], nodes=tuple(_node_from_dict(n) for n in s["nodes"]))
            for s in data["scenes"]
        )
        return Scenario(id=data["id"], scenes=scenes)
    except KeyError as exc:
        raise ScenarioError(f"scenario is missing field {exc}") from None


def scenario_to_dict(scenario: Scenario) -> dict:
    return {
        "id": scenario.id,
        "scenes": [
            {"id": s.id, "nodes": [_node_to_dict(n) for n in s.nodes]} for s in scenario.scenes
        ],
    }


def load_scenario(path: str | Path) -> Scenario:
    """Parse and fully validate a scenario file."""
    path = Path(path)
    if not path.exists():
        raise ScenarioError(f"scenario file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"scenario file is not valid JSON: {exc}") from None
    return parse_scenario(data)


def validate_against_models(scenario: Scenario, bundles: dict) -> list[str]:
    """Check that every evaluation point has a model bundle of matching arity.

    Returns a list of human-readable mismatch entries; empty when complete.
    """
    mismatches = []
    for point in scenario.evaluation_points:
        bundle = bundles.get(point.section_id)
        if bundle is None:
            mismatches.append(f"missing model bundle for section {point.section_id}")
            continue
        k = bundle.classifier.k_labels
        expected = point.feature_set.feature_count
        if k != expected:
            mismatches.append(
                f"section {point.section_id}: bundle predicts {k} labels, "
                f"feature set declares {expected}"
            )
    return mismatches
