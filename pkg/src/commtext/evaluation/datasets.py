"""Balanced train/test dataset construction.

Training items are anchor-user messages labeled by the anchor's category;
test items come from tested users.  Both sides are subsampled per category
to equal counts.  Training shortfall is an error; the test side degrades
to the minimum available count across categories (with a warning).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from ..cda.partition import LabeledPartition
from ..errors import ConfigError, DataError, ShortfallError
from ..graph.centrality import AnchorSplit
from ..nlp.corpus import Corpus
from ..nlp.embeddings import EmbeddingStore

__all__ = ["BalancedDatasets", "build_datasets"]


@dataclass
class BalancedDatasets:
    n_train_per_cat: int
    n_test_per_cat: int
    train_ids: list[str]
    train_x: np.ndarray
    train_y: np.ndarray
    test_ids: list[str]
    test_users: list[str]
    test_x: np.ndarray
    test_y: np.ndarray
    categories: tuple[int, ...]

    def train_counts(self) -> dict[int, int]:
        return {int(c): int(n) for c, n in zip(*np.unique(self.train_y, return_counts=True))}

    def test_counts(self) -> dict[int, int]:
        return {int(c): int(n) for c, n in zip(*np.unique(self.test_y, return_counts=True))}


def build_datasets(corpus: Corpus, store: EmbeddingStore, lp: LabeledPartition,
                   split: AnchorSplit, n_train: int, n_test: int,
                   seed: int = 0) -> BalancedDatasets:
    if n_train < 1 or n_test < 1:
        raise ConfigError("n_train and n_test must be >= 1")
    # Realized categories only: a partition with fewer than n_cut modules
    # simply has no users for the trailing categories.
    categories = tuple(sorted(lp.community_to_category.values()))
    if len(categories) < 2:
        raise DataError(f"need at least 2 populated categories, got {len(categories)}")
    node_index = lp.base.graph.index

    train_pool: dict[int, list[str]] = {c: [] for c in categories}
    test_pool: dict[int, list[tuple[str, str]]] = {c: [] for c in categories}
    for msg in corpus.messages:
        if msg.external:
            continue
        if msg.user_id not in node_index:
            raise DataError(f"message {msg.message_id!r}: unknown user {msg.user_id!r}")
        category = lp.category_of(msg.user_id)
        if category == lp.catch_all:
            continue
        if msg.message_id not in store:
            raise DataError(f"message {msg.message_id!r} has no embedding")
        if msg.user_id in split.anchors:
            train_pool[category].append(msg.message_id)
        else:
            test_pool[category].append((msg.message_id, msg.user_id))

    rng = np.random.default_rng(seed)

    train_ids: list[str] = []
    train_y: list[int] = []
    for c in categories:
        pool = train_pool[c]
        if len(pool) < n_train:
            raise ShortfallError(category=c, needed=n_train, available=len(pool))
        chosen = rng.choice(len(pool), size=n_train, replace=False)
        chosen.sort()
        train_ids.extend(pool[i] for i in chosen.tolist())
        train_y.extend([c] * n_train)

    available = {c: len(test_pool[c]) for c in categories}
    n_test_eff = min(n_test, min(available.values()))
    if n_test_eff == 0:
        empty = [c for c, k in available.items() if k == 0]
        raise DataError(f"categories {empty} have no tested-user messages")
    if n_test_eff < n_test:
        warnings.warn(
            f"test sampling degraded to {n_test_eff} per category "
            f"(available: {available})",
            stacklevel=2,
        )
    test_ids: list[str] = []
    test_users: list[str] = []
    test_y: list[int] = []
    for c in categories:
        pool = test_pool[c]
        chosen = rng.choice(len(pool), size=n_test_eff, replace=False)
        chosen.sort()
        for i in chosen.tolist():
            mid, uid = pool[i]
            test_ids.append(mid)
            test_users.append(uid)
            test_y.append(c)

    return BalancedDatasets(
        n_train_per_cat=n_train,
        n_test_per_cat=n_test_eff,
        train_ids=train_ids,
        train_x=store.rows(train_ids),
        train_y=np.array(train_y, dtype=np.int64),
        test_ids=test_ids,
        test_users=test_users,
        test_x=store.rows(test_ids),
        test_y=np.array(test_y, dtype=np.int64),
        categories=categories,
    )
