from .datasets import BalancedDatasets, build_datasets
from .dendro import Dendrogram, dendrogram_sweep
from .metrics import (
    MisassignmentOverlap,
    TWEET_BINS,
    agreement_precision,
    binned_agreement,
    coverage,
    f_beta,
    misassigned_intersection,
    user_entropy,
)
from .pipeline import EvaluationOutcome, UserResult, evaluate_algorithm
from .runner import ALGORITHMS, run_algorithm
from .synth import SynthConfig, SyntheticData, generate_synthetic

__all__ = [
    "BalancedDatasets",
    "build_datasets",
    "agreement_precision",
    "binned_agreement",
    "coverage",
    "f_beta",
    "user_entropy",
    "misassigned_intersection",
    "MisassignmentOverlap",
    "TWEET_BINS",
    "Dendrogram",
    "dendrogram_sweep",
    "SynthConfig",
    "SyntheticData",
    "generate_synthetic",
    "EvaluationOutcome",
    "UserResult",
    "evaluate_algorithm",
    "ALGORITHMS",
    "run_algorithm",
]
