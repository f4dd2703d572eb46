"""Four-classifier ensemble with weighted category voting.

The base learners are standard models (hinge-loss SGD, max-margin linear,
a (5,2) ReLU perceptron, a random forest); the value added here is
the weighted vote: each classifier casts its weight for one category, the
weights sum to 7, and the winning category has the largest total.
"""

from __future__ import annotations

import json
import pickle
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from sklearn.ensemble import RandomForestClassifier
from sklearn.linear_model import SGDClassifier
from sklearn.neural_network import MLPClassifier
from sklearn.svm import LinearSVC

from ..errors import ConfigError, DataError

__all__ = [
    "EnsembleConfig",
    "Ensemble",
    "train_ensemble",
    "ensemble_predict",
    "ensemble_predict_batch",
    "classify_user",
    "save_ensemble",
    "load_ensemble",
]

CLASSIFIER_ORDER = ("sgd", "svc", "mlp", "forest")
DEFAULT_WEIGHTS = (1, 1, 3, 2)


@dataclass(frozen=True)
class EnsembleConfig:
    weights: tuple[int, int, int, int] = DEFAULT_WEIGHTS
    seed: int = 0
    sgd_alpha: float = 1e-4
    svc_c: float = 1.0
    mlp_hidden: tuple[int, int] = (5, 2)
    mlp_learning_rate: float = 0.01
    mlp_epochs: int = 50
    mlp_batch: int = 32
    forest_trees: int = 100

    def validate(self) -> None:
        if len(self.weights) != 4 or any(w <= 0 or int(w) != w for w in self.weights):
            raise ConfigError(f"weights must be four positive integers, got {self.weights}")
        if sum(self.weights) != 7:
            raise ConfigError(f"classifier weights must sum to 7, got {self.weights}")


@dataclass
class Ensemble:
    models: dict = field(repr=False)
    weights: tuple[int, int, int, int]
    categories: tuple[int, ...]
    dim: int
    config: EnsembleConfig

    def __post_init__(self):
        self._cat_pos = {cat: i for i, cat in enumerate(self.categories)}


def _build_models(cfg: EnsembleConfig) -> dict:
    return {
        "sgd": SGDClassifier(loss="hinge", alpha=cfg.sgd_alpha, random_state=cfg.seed),
        "svc": LinearSVC(C=cfg.svc_c, random_state=cfg.seed),
        "mlp": MLPClassifier(
            hidden_layer_sizes=cfg.mlp_hidden,
            activation="relu",
            solver="sgd",
            learning_rate_init=cfg.mlp_learning_rate,
            max_iter=cfg.mlp_epochs,
            batch_size=cfg.mlp_batch,
            shuffle=True,
            random_state=cfg.seed,
        ),
        "forest": RandomForestClassifier(
            n_estimators=cfg.forest_trees,
            max_features="sqrt",
            random_state=cfg.seed,
            n_jobs=1,
        ),
    }


def train_ensemble(train_x: np.ndarray, train_y: np.ndarray,
                   config: EnsembleConfig | None = None) -> Ensemble:
    """Fit all four classifiers on the same data; deterministic given the seed."""
    cfg = config or EnsembleConfig()
    cfg.validate()
    train_x = np.asarray(train_x, dtype=np.float32)
    train_y = np.asarray(train_y, dtype=np.int64)
    if train_x.ndim != 2 or train_x.shape[0] != train_y.shape[0]:
        raise DataError("training matrix and labels are misaligned")
    categories = tuple(int(c) for c in np.unique(train_y))
    if len(categories) < 2:
        raise DataError(f"need at least 2 categories, got {categories}")
    models = _build_models(cfg)
    with warnings.catch_warnings():
        # The perceptron legitimately stops at the configured epoch budget.
        warnings.filterwarnings("ignore", message=".*Maximum iterations.*")
        warnings.filterwarnings("ignore", message=".*max_iter.*")
        for model in models.values():
            model.fit(train_x, train_y)
    return Ensemble(models=models, weights=cfg.weights, categories=categories,
                    dim=int(train_x.shape[1]), config=cfg)


def _vote(e: Ensemble, picks: np.ndarray) -> tuple[int, np.ndarray]:
    """Resolve one message's four category picks into a weighted decision.

    Ties go to the category backed by the highest-weight classifier among
    the tied ones, then to the smaller category index.
    """
    counts = np.zeros(len(e.categories), dtype=np.int64)
    top_weight = np.zeros(len(e.categories), dtype=np.int64)
    for k in range(4):
        pos = e._cat_pos[int(picks[k])]
        wk = e.weights[k]
        counts[pos] += wk
        if wk > top_weight[pos]:
            top_weight[pos] = wk
    best = int(counts.max())
    tied = np.flatnonzero(counts == best)
    if tied.size == 1:
        return e.categories[tied[0]], counts
    strongest = top_weight[tied].max()
    winner = int(tied[np.flatnonzero(top_weight[tied] == strongest)[0]])
    return e.categories[winner], counts


def ensemble_predict_batch(e: Ensemble, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Predict many messages at once: (categories, per-category weighted votes)."""
    x = np.asarray(x, dtype=np.float32)
    if x.ndim != 2 or x.shape[1] != e.dim:
        raise DataError(f"expected vectors of dim {e.dim}")
    picks = np.stack([e.models[name].predict(x) for name in CLASSIFIER_ORDER], axis=1)
    n = x.shape[0]
    cats = np.zeros(n, dtype=np.int64)
    votes = np.zeros((n, len(e.categories)), dtype=np.int64)
    for i in range(n):
        cats[i], votes[i] = _vote(e, picks[i])
    return cats, votes


def ensemble_predict(e: Ensemble, v: np.ndarray) -> tuple[int, dict[int, int]]:
    """Predict one message: (category, per-category weighted vote counts)."""
    v = np.asarray(v, dtype=np.float32)
    if v.ndim != 1 or v.shape[0] != e.dim:
        raise DataError(f"expected a vector of dim {e.dim}")
    if not np.all(np.isfinite(v)):
        raise DataError("non-finite input vector")
    cats, votes = ensemble_predict_batch(e, v.reshape(1, -1))
    return int(cats[0]), {cat: int(votes[0][i]) for i, cat in enumerate(e.categories)}


def aggregate_user(e: Ensemble, cats: np.ndarray, votes: np.ndarray) -> tuple[int, dict[int, int]]:
    """Modal category over a user's per-message predictions.

    Ties go to the category with the larger summed weighted vote mass over
    all the user's messages, then to the smaller category index.
    """
    if cats.size == 0:
        raise DataError("user has no messages")
    histogram: dict[int, int] = {}
    for c in cats.tolist():
        histogram[c] = histogram.get(c, 0) + 1
    best = max(histogram.values())
    tied = sorted(c for c, k in histogram.items() if k == best)
    if len(tied) == 1:
        return tied[0], histogram
    mass = votes.sum(axis=0)
    winner = tied[0]
    winner_mass = int(mass[e._cat_pos[winner]])
    for c in tied[1:]:
        m = int(mass[e._cat_pos[c]])
        if m > winner_mass:
            winner, winner_mass = c, m
    return winner, histogram


def classify_user(e: Ensemble, message_vectors: np.ndarray) -> tuple[int, dict[int, int]]:
    """Classify a user from their message vectors: (category, tweet histogram)."""
    x = np.asarray(message_vectors, dtype=np.float32)
    if x.ndim != 2 or x.shape[0] == 0:
        raise DataError("need a non-empty (k, dim) matrix of message vectors")
    cats, votes = ensemble_predict_batch(e, x)
    return aggregate_user(e, cats, votes)


def save_ensemble(e: Ensemble, directory: str | Path) -> None:
    """Model bundle: one pickle per classifier plus a JSON manifest."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for name in CLASSIFIER_ORDER:
        with open(directory / f"{name}.pkl", "wb") as fh:
            pickle.dump(e.models[name], fh, protocol=4)
    manifest = {
        "dim": e.dim,
        "categories": list(e.categories),
        "weights": list(e.weights),
        "seeds": {"ensemble": e.config.seed},
        "config": {
            "sgd_alpha": e.config.sgd_alpha,
            "svc_c": e.config.svc_c,
            "mlp_hidden": list(e.config.mlp_hidden),
            "mlp_learning_rate": e.config.mlp_learning_rate,
            "mlp_epochs": e.config.mlp_epochs,
            "mlp_batch": e.config.mlp_batch,
            "forest_trees": e.config.forest_trees,
        },
    }
    (directory / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def load_ensemble(directory: str | Path) -> Ensemble:
    directory = Path(directory)
    manifest = json.loads((directory / "manifest.json").read_text(encoding="utf-8"))
    models = {}
    for name in CLASSIFIER_ORDER:
        with open(directory / f"{name}.pkl", "rb") as fh:
            models[name] = pickle.load(fh)
    cfg = EnsembleConfig(
        weights=tuple(manifest["weights"]),
        seed=manifest["seeds"]["ensemble"],
        sgd_alpha=manifest["config"]["sgd_alpha"],
        svc_c=manifest["config"]["svc_c"],
        mlp_hidden=tuple(manifest["config"]["mlp_hidden"]),
        mlp_learning_rate=manifest["config"]["mlp_learning_rate"],
        mlp_epochs=manifest["config"]["mlp_epochs"],
        mlp_batch=manifest["config"]["mlp_batch"],
        forest_trees=manifest["config"]["forest_trees"],
    )
    return Ensemble(models=models, weights=cfg.weights,
                    categories=tuple(manifest["categories"]),
                    dim=int(manifest["dim"]), config=cfg)
