"""Agreement metrics: precision with jackknife errors, tweet-count bins,
coverage, F_beta, per-user prediction entropy, misassignment overlap."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError, DataError
from ..cda.partition import LabeledPartition

__all__ = [
    "agreement_precision",
    "binned_agreement",
    "coverage",
    "f_beta",
    "user_entropy",
    "misassigned_intersection",
    "MisassignmentOverlap",
    "TWEET_BINS",
]

# Logarithmic tweet-count bins: [1,3], [4,10], [11,31], [32, inf).
TWEET_BINS: tuple[tuple[int, float], ...] = ((1, 3), (4, 10), (11, 31), (32, math.inf))


def agreement_precision(records: list[tuple[int, int]], blocks: int = 50,
                        seed: int = 0) -> tuple[float, float]:
    """Fraction of users whose two categories agree, with a delete-block
    jackknife error (seeded shuffle, then ``blocks`` contiguous blocks).

    Callers must have excluded catch-all users already.
    """
    if not records:
        raise DataError("no user records")
    match = np.array([1.0 if cda == nlp else 0.0 for cda, nlp in records])
    n = match.size
    precision = float(match.mean())
    if n < 2:
        return precision, 0.0
    b = min(blocks, n)
    rng = np.random.default_rng(seed)
    shuffled = match[rng.permutation(n)]
    parts = np.array_split(shuffled, b)
    total = match.sum()
    estimates = np.array([(total - part.sum()) / (n - part.size) for part in parts])
    err = math.sqrt((b - 1) / b * float(np.sum((estimates - estimates.mean()) ** 2)))
    return precision, err


def binned_agreement(records: list[tuple[int, int, int]]) -> list[dict]:
    """Per-bin agreement for (tweet_count, cda_category, nlpca_category) rows.

    Returns one dict per bin: {lo, hi, n, n_agree, fraction, poisson_err};
    empty bins carry None for fraction and error.
    """
    for count, _, _ in records:
        if count < 1:
            raise DataError(f"tweet count must be >= 1, got {count}")
    out = []
    for lo, hi in TWEET_BINS:
        rows = [(cda, nlp) for count, cda, nlp in records if lo <= count <= hi]
        n = len(rows)
        n_agree = sum(1 for cda, nlp in rows if cda == nlp)
        entry = {
            "lo": lo,
            "hi": None if math.isinf(hi) else int(hi),
            "n": n,
            "n_agree": n_agree,
            "fraction": (n_agree / n) if n else None,
            "poisson_err": (math.sqrt(n_agree) / n) if n else None,
        }
        out.append(entry)
    return out


def coverage(lp: LabeledPartition) -> float:
    """Fraction of all users inside the non-catch-all categories."""
    total = lp.category.size
    if total == 0:
        return 0.0
    catch = int(np.sum(lp.category == lp.catch_all))
    return (total - catch) / total


def f_beta(precision: float, recall: float, beta: float) -> float:
    """F_beta = (1 + beta^2) * P * R / (beta^2 * P + R).

    Recall counts beta times as much as precision.  Exact-identity paths:
    beta == 0 returns P, P == R returns P; (0, 0) maps to 0 by convention.
    """
    if not (0.0 <= precision <= 1.0 and 0.0 <= recall <= 1.0):
        raise ConfigError("precision and recall must be in [0, 1]")
    if beta < 0:
        raise ConfigError(f"beta must be >= 0, got {beta}")
    if precision == 0.0 and recall == 0.0:
        return 0.0
    if beta == 0.0 or precision == recall:
        return precision
    b2 = beta * beta
    denom = b2 * precision + recall
    if denom == 0.0:
        return 0.0
    return (1.0 + b2) * precision * recall / denom


def user_entropy(histogram: dict[int, int] | list[int]) -> tuple[float, int]:
    """Shannon entropy (bits) of one user's per-category tweet predictions,
    plus the raw count of distinct categories."""
    counts = list(histogram.values()) if isinstance(histogram, dict) else list(histogram)
    counts = [c for c in counts if c > 0]
    total = sum(counts)
    if total < 1:
        raise DataError("histogram total must be >= 1")
    h = 0.0
    for c in counts:
        p = c / total
        h -= p * math.log2(p)
    # A one-category histogram is exactly zero, not rounding dust.
    if len(counts) == 1:
        h = 0.0
    return h, len(counts)


@dataclass(frozen=True)
class MisassignmentOverlap:
    wrong_a: int
    wrong_b: int
    intersection: int
    jaccard: float
    overlap_min: float
    shared_users: int


def misassigned_intersection(a: dict[str, tuple[int, int]],
                             b: dict[str, tuple[int, int]]) -> MisassignmentOverlap:
    """Overlap statistics of the wrongly-assigned user sets of two runs.

    Inputs map user -> (cda_category, nlpca_category) with catch-all users
    already excluded; statistics are computed over the shared user universe.
    """
    shared = set(a) & set(b)
    if not shared:
        raise DataError("result sets share no users")
    wrong_a = {u for u in shared if a[u][0] != a[u][1]}
    wrong_b = {u for u in shared if b[u][0] != b[u][1]}
    inter = len(wrong_a & wrong_b)
    union = len(wrong_a | wrong_b)
    smaller = min(len(wrong_a), len(wrong_b))
    return MisassignmentOverlap(
        wrong_a=len(wrong_a),
        wrong_b=len(wrong_b),
        intersection=inter,
        jaccard=(inter / union) if union else 0.0,
        overlap_min=(inter / smaller) if smaller else 0.0,
        shared_users=len(shared),
    )
