"""End-to-end evaluation of one (algorithm, parameter) pair.

Runs the community detection, truncates, builds balanced datasets from the
anchor split, trains the ensemble, classifies tested users, and assembles
the report.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..cda import truncate_partition
from ..cda.partition import LabeledPartition
from ..graph import AnchorSplit, Graph
from ..nlp.corpus import Corpus
from ..nlp.embeddings import EmbeddingStore
from ..nlp.ensemble import (
    Ensemble,
    EnsembleConfig,
    aggregate_user,
    ensemble_predict_batch,
    train_ensemble,
)
from .datasets import BalancedDatasets, build_datasets
from .metrics import agreement_precision, binned_agreement, coverage, f_beta, user_entropy
from .runner import quality_of, run_algorithm

__all__ = ["UserResult", "EvaluationOutcome", "evaluate_algorithm"]


@dataclass
class UserResult:
    user_id: str
    cda_category: int
    nlpca_category: int
    tweet_count: int
    histogram: dict[int, int]
    entropy_bits: float
    distinct: int


@dataclass
class EvaluationOutcome:
    algorithm: str
    parameter: float | None
    labeled: LabeledPartition
    datasets: BalancedDatasets
    ensemble: Ensemble
    users: list[UserResult]
    report: dict

    def user_records(self) -> dict[str, tuple[int, int]]:
        return {u.user_id: (u.cda_category, u.nlpca_category) for u in self.users}


def _entropy_curve(users: list[UserResult]) -> list[dict]:
    by_count: dict[int, list[UserResult]] = {}
    for u in users:
        by_count.setdefault(u.tweet_count, []).append(u)
    curve = []
    for k in sorted(by_count):
        rows = by_count[k]
        curve.append({
            "tweets": k,
            "users": len(rows),
            "mean_entropy": float(np.mean([r.entropy_bits for r in rows])),
            "mean_distinct": float(np.mean([r.distinct for r in rows])),
        })
    return curve


def evaluate_algorithm(
    g: Graph,
    corpus: Corpus,
    store: EmbeddingStore,
    split: AnchorSplit,
    algorithm: str,
    parameter: float | None,
    n_cut: int,
    n_train: int,
    n_test: int,
    betas: tuple[float, ...] = (0.1, 0.25, 0.75),
    ensemble_config: EnsembleConfig | None = None,
    seed: int = 0,
) -> EvaluationOutcome:
    partition = run_algorithm(g, algorithm, parameter, seed)
    lp = truncate_partition(partition, n_cut)
    ds = build_datasets(corpus, store, lp, split, n_train, n_test, seed=seed + 1)
    cfg = ensemble_config or EnsembleConfig(seed=seed + 3)
    ensemble = train_ensemble(ds.train_x, ds.train_y, cfg)

    cats, votes = ensemble_predict_batch(ensemble, ds.test_x)
    rows_by_user: dict[str, list[int]] = {}
    for i, uid in enumerate(ds.test_users):
        rows_by_user.setdefault(uid, []).append(i)

    users: list[UserResult] = []
    for uid in sorted(rows_by_user):
        rows = rows_by_user[uid]
        user_cats = cats[rows]
        nlp_cat, histogram = aggregate_user(ensemble, user_cats, votes[rows])
        h, distinct = user_entropy(histogram)
        users.append(UserResult(
            user_id=uid,
            cda_category=int(ds.test_y[rows[0]]),
            nlpca_category=nlp_cat,
            tweet_count=len(rows),
            histogram=histogram,
            entropy_bits=h,
            distinct=distinct,
        ))

    records = [(u.cda_category, u.nlpca_category) for u in users]
    precision, err = agreement_precision(records, seed=seed + 2)
    bins = binned_agreement([(u.tweet_count, u.cda_category, u.nlpca_category) for u in users])
    cov = coverage(lp)
    anchors_in_test = sum(1 for uid in rows_by_user if uid in split.anchors)
    train_set = set(ds.train_ids)
    leaked = sum(1 for mid in ds.test_ids if mid in train_set)

    report = {
        "algorithm": algorithm,
        "parameter": parameter,
        "N_cut": n_cut,
        "m": lp.base.m,
        "precision": precision,
        "precision_err": err,
        "coverage": cov,
        "f_beta": {str(b): f_beta(precision, cov, b) for b in betas},
        "bins": bins,
        "entropy_curve": _entropy_curve(users),
        "seeds": {
            "algorithm": seed,
            "datasets": seed + 1,
            "jackknife": seed + 2,
            "ensemble": cfg.seed,
        },
        "tested_users": len(users),
        "n_train_per_cat": ds.n_train_per_cat,
        "n_test_per_cat": ds.n_test_per_cat,
        "quality": quality_of(g, partition, algorithm, parameter),
        "audit": {
            "anchor_users_in_test": anchors_in_test,
            "train_messages_in_test": leaked,
        },
    }
    return EvaluationOutcome(
        algorithm=algorithm,
        parameter=parameter,
        labeled=lp,
        datasets=ds,
        ensemble=ensemble,
        users=users,
        report=report,
    )
