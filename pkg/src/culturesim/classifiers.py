"""Multi-label classifiers mapping TF-IDF vectors to binary score vectors.

Three model families are implemented from first principles: k-nearest
neighbours with cosine similarity, random forests under a binary-relevance
decomposition, and a single-hidden-layer perceptron with a shared trunk
and per-label sigmoid outputs. All training is deterministic given the
seed, and trained models are frozen.

Vote ties (a KNN weighted vote of exactly 0.5, an even forest split)
resolve to 1: a false positive merely withholds corrective feedback,
while a false negative wrongly scolds the trainee.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .rand import Lcg, mix_seed
from .textrep import SparseVector

KINDS = ("knn", "random_forest", "mlp")


class TrainingError(Exception):
    pass


@dataclass(frozen=True)
class ScoreVector:
    """Ordered binary feature hits for one utterance at one section."""

    bits: tuple[int, ...]
    section_id: str = ""

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"score bits must be 0 or 1, got {self.bits}")

    def __len__(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class KnnParams:
    matrix: np.ndarray  # (n, d) unit rows (zero rows allowed)
    labels: np.ndarray  # (n, k) 0/1

    def to_dict(self) -> dict:
        return {"matrix": self.matrix.tolist(), "labels": self.labels.astype(int).tolist()}


@dataclass(frozen=True)
class ForestParams:
    forests: tuple[tuple[dict, ...], ...]  # one tree tuple per label

    def to_dict(self) -> dict:
        return {"forests": [list(trees) for trees in self.forests]}


@dataclass(frozen=True)
class MlpParams:
    w1: np.ndarray  # (hidden, d)
    b1: np.ndarray  # (hidden,)
    w2: np.ndarray  # (k, hidden)
    b2: np.ndarray  # (k,)

    def to_dict(self) -> dict:
        return {
            "w1": self.w1.tolist(),
            "b1": self.b1.tolist(),
            "w2": self.w2.tolist(),
            "b2": self.b2.tolist(),
        }


@dataclass(frozen=True)
class ClassifierModel:
    kind: str
    k_labels: int
    dimension: int
    hyperparameters: dict = field(compare=False)
    parameters: KnnParams | ForestParams | MlpParams = field(compare=False)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "k_labels": self.k_labels,
            "dimension": self.dimension,
            "hyperparameters": dict(self.hyperparameters),
            "parameters": self.parameters.to_dict(),
        }

    @staticmethod
    def from_dict(data: dict) -> "ClassifierModel":
        kind = data["kind"]
        raw = data["parameters"]
        params: KnnParams | ForestParams | MlpParams
        if kind == "knn":
            params = KnnParams(
                matrix=np.asarray(raw["matrix"], dtype=float),
                labels=np.asarray(raw["labels"], dtype=int),
            )
        elif kind == "random_forest":
            params = ForestParams(
                forests=tuple(tuple(trees) for trees in raw["forests"])
            )
        elif kind == "mlp":
            params = MlpParams(
                w1=np.asarray(raw["w1"], dtype=float),
                b1=np.asarray(raw["b1"], dtype=float),
                w2=np.asarray(raw["w2"], dtype=float),
                b2=np.asarray(raw["b2"], dtype=float),
            )
        else:
            raise TrainingError(f"unknown classifier kind {kind!r}")
        return ClassifierModel(
            kind=kind,
            k_labels=int(data["k_labels"]),
            dimension=int(data["dimension"]),
            hyperparameters=dict(data["hyperparameters"]),
            parameters=params,
        )


def _as_matrix(X: Sequence[SparseVector]) -> np.ndarray:
    if not X:
        raise TrainingError("empty training set")
    d = X[0].dimension
    mat = np.zeros((len(X), d))
    for i, vec in enumerate(X):
        if vec.dimension != d:
            raise TrainingError("inconsistent vector dimensions")
        for index, weight in vec.entries:
            mat[i, index] = weight
    return mat


def _as_labels(Y: Sequence[Sequence[int]]) -> np.ndarray:
    arr = np.asarray(Y, dtype=int)
    if arr.ndim != 2:
        raise TrainingError("label vectors must share one arity")
    if not np.isin(arr, (0, 1)).all():
        raise TrainingError("labels must be 0 or 1")
    return arr


def predict(model: ClassifierModel, x: SparseVector) -> ScoreVector:
    if model.kind == "knn":
        return predict_knn(model, x)
    if model.kind == "random_forest":
        return predict_rf(model, x)
    return predict_mlp(model, x)


# --- k-nearest neighbours ----------------------------------------------------

def train_knn(
    X: Sequence[SparseVector], Y: Sequence[Sequence[int]], neighbors: int
) -> ClassifierModel:
    """Lazy learner: stores the training data verbatim."""
    mat = _as_matrix(X)
    labels = _as_labels(Y)
    if len(mat) != len(labels):
        raise TrainingError("X and Y length mismatch")
    if not 1 <= neighbors <= len(mat):
        raise TrainingError(f"neighbors must be in [1, {len(mat)}], got {neighbors}")
    return ClassifierModel(
        kind="knn",
        k_labels=labels.shape[1],
        dimension=mat.shape[1],
        hyperparameters={"neighbors": neighbors},
        parameters=KnnParams(matrix=mat, labels=labels),
    )


def predict_knn(model: ClassifierModel, x: SparseVector) -> ScoreVector:
    """Similarity-weighted vote over the nearest training points.

    Similarity is cosine (a dot product, rows being unit vectors); ties on
    similarity break toward the lower training index. A zero query vector,
    or a neighbourhood with zero total similarity, yields all-zero.
    """
    params: KnnParams = model.parameters  # type: ignore[assignment]
    k = model.k_labels
    if x.is_zero():
        return ScoreVector(bits=(0,) * k)
    sims = params.matrix @ x.to_dense()
    n_neighbors = model.hyperparameters["neighbors"]
    order = np.argsort(-sims, kind="stable")[:n_neighbors]
    total = float(sims[order].sum())
    if total <= 0.0:
        return ScoreVector(bits=(0,) * k)
    bits = []
    for j in range(k):
        weighted = float(sims[order] @ params.labels[order, j])
        bits.append(1 if weighted / total >= 0.5 else 0)
    return ScoreVector(bits=tuple(bits))


# --- random forest -----------------------------------------------------------

def _gini(counts: np.ndarray) -> float:
    total = counts.sum()
    if total == 0:
        return 0.0
    p = counts / total
    return float(1.0 - (p * p).sum())


def _leaf(y: np.ndarray) -> dict:
    ones = int(y.sum())
    zeros = len(y) - ones
    return {"leaf": 1 if ones >= zeros else 0}  # tie resolves to 1


def build_tree(
    X: np.ndarray,
    y: np.ndarray,
    rng: Lcg,
    max_depth: int,
    max_features: int,
    depth: int = 0,
) -> dict:
    """Grow one binary decision tree greedily by Gini impurity.

    At each node ``max_features`` candidate columns are drawn without
    replacement; thresholds are midpoints between consecutive distinct
    values. Rows with value <= threshold go left. Among equal-cost splits
    the first encountered wins (candidate order, then ascending threshold).
    """
    if depth >= max_depth or y.min() == y.max():
        return _leaf(y)
    n, d = X.shape
    candidates = rng.sample_indices(d, min(max_features, d))
    best_cost = math.inf
    best: tuple[int, float] | None = None
    for feature in candidates:
        values = np.unique(X[:, feature])
        if len(values) < 2:
            continue
        for lo, hi in zip(values[:-1], values[1:]):
            threshold = (lo + hi) / 2.0
            mask = X[:, feature] <= threshold
            left, right = y[mask], y[~mask]
            cost = (
                len(left) * _gini(np.bincount(left, minlength=2))
                + len(right) * _gini(np.bincount(right, minlength=2))
            ) / n
            if cost < best_cost:
                best_cost = cost
                best = (feature, threshold)
    if best is None:
        return _leaf(y)
    feature, threshold = best
    mask = X[:, feature] <= threshold
    return {
        "f": int(feature),
        "t": float(threshold),
        "l": build_tree(X[mask], y[mask], rng, max_depth, max_features, depth + 1),
        "r": build_tree(X[~mask], y[~mask], rng, max_depth, max_features, depth + 1),
    }


def _tree_predict(tree: dict, x: np.ndarray) -> int:
    node = tree
    while "leaf" not in node:
        node = node["l"] if x[node["f"]] <= node["t"] else node["r"]
    return node["leaf"]


def train_rf(
    X: Sequence[SparseVector],
    Y: Sequence[Sequence[int]],
    trees: int,
    max_depth: int,
    seed: int,
) -> ClassifierModel:
    """Binary-relevance random forest: one independent forest per label.

    Each tree fits a seeded bootstrap sample and searches ceil(sqrt(d))
    random candidate features per node.
    """
    mat = _as_matrix(X)
    labels = _as_labels(Y)
    if len(mat) != len(labels):
        raise TrainingError("X and Y length mismatch")
    if len(mat) < 2:
        raise TrainingError("random forest needs at least 2 training examples")
    if trees < 1:
        raise TrainingError("trees must be >= 1")
    n, d = mat.shape
    max_features = max(1, math.ceil(math.sqrt(d)))
    forests = []
    for j in range(labels.shape[1]):
        grown = []
        for t in range(trees):
            rng = Lcg(mix_seed(seed, j, t))
            sample = np.array([rng.randint(n) for _ in range(n)])
            grown.append(
                build_tree(mat[sample], labels[sample, j], rng, max_depth, max_features)
            )
        forests.append(tuple(grown))
    return ClassifierModel(
        kind="random_forest",
        k_labels=labels.shape[1],
        dimension=d,
        hyperparameters={
            "trees": trees,
            "max_depth": max_depth,
            "max_features": max_features,
            "seed": seed,
        },
        parameters=ForestParams(forests=tuple(forests)),
    )


def predict_rf(model: ClassifierModel, x: SparseVector) -> ScoreVector:
    """Per-label majority vote across trees; an exact tie yields 1."""
    params: ForestParams = model.parameters  # type: ignore[assignment]
    dense = x.to_dense()
    bits = []
    for trees in params.forests:
        votes = sum(_tree_predict(tree, dense) for tree in trees)
        bits.append(1 if 2 * votes >= len(trees) else 0)
    return ScoreVector(bits=tuple(bits))


# --- multi-layer perceptron --------------------------------------------------

_EPS = 1e-12


def _sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def _forward(params: MlpParams, X: np.ndarray):
    z1 = X @ params.w1.T + params.b1
    h = np.maximum(z1, 0.0)
    z2 = h @ params.w2.T + params.b2
    return z1, h, _sigmoid(z2)


def mlp_loss(model: ClassifierModel, X: Sequence[SparseVector], Y: Sequence[Sequence[int]]) -> float:
    """Mean binary cross-entropy over every (example, label) slot."""
    params: MlpParams = model.parameters  # type: ignore[assignment]
    mat = _as_matrix(X)
    labels = _as_labels(Y).astype(float)
    _, _, p = _forward(params, mat)
    p = np.clip(p, _EPS, 1.0 - _EPS)
    return float(-np.mean(labels * np.log(p) + (1.0 - labels) * np.log(1.0 - p)))


def _gradients(params: MlpParams, X: np.ndarray, Y: np.ndarray):
    n, k = Y.shape
    z1, h, p = _forward(params, X)
    dz2 = (p - Y) / (n * k)
    dw2 = dz2.T @ h
    db2 = dz2.sum(axis=0)
    dh = dz2 @ params.w2
    dz1 = dh * (z1 > 0)
    dw1 = dz1.T @ X
    db1 = dz1.sum(axis=0)
    return dw1, db1, dw2, db2


def train_mlp(
    X: Sequence[SparseVector],
    Y: Sequence[Sequence[int]],
    hidden: int,
    lr: float,
    epochs: int,
    seed: int,
) -> ClassifierModel:
    """Full-batch gradient descent on a d -> hidden (ReLU) -> k (sigmoid) net.

    Weights start uniform in [-0.5, 0.5] / sqrt(fan_in) from the seeded
    generator; biases start at zero. Training is deterministic given seed.
    """
    mat = _as_matrix(X)
    labels = _as_labels(Y).astype(float)
    if len(mat) != len(labels):
        raise TrainingError("X and Y length mismatch")
    if hidden < 1:
        raise TrainingError("hidden must be >= 1")
    if lr <= 0:
        raise TrainingError("learning rate must be positive")
    n, d = mat.shape
    k = labels.shape[1]
    rng = Lcg(mix_seed(seed, 0x6D6C70))
    scale1 = 0.5 / math.sqrt(d)
    scale2 = 0.5 / math.sqrt(hidden)
    w1 = np.array([[rng.uniform(-scale1, scale1) for _ in range(d)] for _ in range(hidden)])
    w2 = np.array([[rng.uniform(-scale2, scale2) for _ in range(hidden)] for _ in range(k)])
    b1 = np.zeros(hidden)
    b2 = np.zeros(k)
    for _ in range(epochs):
        dw1, db1, dw2, db2 = _gradients(MlpParams(w1, b1, w2, b2), mat, labels)
        w1 -= lr * dw1
        b1 -= lr * db1
        w2 -= lr * dw2
        b2 -= lr * db2
    return ClassifierModel(
        kind="mlp",
        k_labels=k,
        dimension=d,
        hyperparameters={"hidden": hidden, "lr": lr, "epochs": epochs, "seed": seed},
        parameters=MlpParams(w1=w1, b1=b1, w2=w2, b2=b2),
    )


def predict_mlp(model: ClassifierModel, x: SparseVector) -> ScoreVector:
    """Forward pass; an output of exactly 0.5 rounds up to 1."""
    params: MlpParams = model.parameters  # type: ignore[assignment]
    _, _, p = _forward(params, x.to_dense().reshape(1, -1))
    return ScoreVector(bits=tuple(1 if v >= 0.5 else 0 for v in p[0]))


def gradient_check(
    model: ClassifierModel,
    X: Sequence[SparseVector],
    Y: Sequence[Sequence[int]],
    epsilon: float,
    perturb: float = 0.0,
) -> float:
    """Max relative discrepancy between analytic and central-difference
    gradients of the BCE loss over every parameter.

    ``perturb`` offsets each analytic component and exists as a negative
    control for the check itself.
    """
    if not 1e-7 <= epsilon <= 1e-3:
        raise ValueError("epsilon must be in [1e-7, 1e-3]")
    if model.kind != "mlp":
        raise TrainingError("gradient_check applies to mlp models")
    params: MlpParams = model.parameters  # type: ignore[assignment]
    mat = _as_matrix(X)
    labels = _as_labels(Y).astype(float)

    def loss_at(arrays: list[np.ndarray]) -> float:
        p = _forward(MlpParams(*arrays), mat)[2]
        p = np.clip(p, _EPS, 1.0 - _EPS)
        return float(-np.mean(labels * np.log(p) + (1.0 - labels) * np.log(1.0 - p)))

    arrays = [params.w1.copy(), params.b1.copy(), params.w2.copy(), params.b2.copy()]
    analytic = [g + perturb for g in _gradients(MlpParams(*arrays), mat, labels)]
    worst = 0.0
    for a_idx, arr in enumerate(arrays):
        flat = arr.reshape(-1)
        grad = analytic[a_idx].reshape(-1)
        for i in range(flat.size):
            original = flat[i]
            flat[i] = original + epsilon
            up = loss_at(arrays)
            flat[i] = original - epsilon
            down = loss_at(arrays)
            flat[i] = original
            numeric = (up - down) / (2.0 * epsilon)
            scale = max(abs(grad[i]) + abs(numeric), 1e-8)
            worst = max(worst, abs(grad[i] - numeric) / scale)
    return worst
