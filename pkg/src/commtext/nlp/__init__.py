from .corpus import Corpus, Message, load_corpus, write_corpus
from .embeddings import EmbeddingFormatError, EmbeddingStore, load_embeddings, write_embeddings
from .ensemble import (
    CLASSIFIER_ORDER,
    DEFAULT_WEIGHTS,
    Ensemble,
    EnsembleConfig,
    classify_user,
    ensemble_predict,
    ensemble_predict_batch,
    load_ensemble,
    save_ensemble,
    train_ensemble,
)
from .hashing import embed_texts, hash_embed

__all__ = [
    "Corpus",
    "Message",
    "load_corpus",
    "write_corpus",
    "EmbeddingStore",
    "EmbeddingFormatError",
    "load_embeddings",
    "write_embeddings",
    "hash_embed",
    "embed_texts",
    "Ensemble",
    "EnsembleConfig",
    "train_ensemble",
    "ensemble_predict",
    "ensemble_predict_batch",
    "classify_user",
    "save_ensemble",
    "load_ensemble",
    "CLASSIFIER_ORDER",
    "DEFAULT_WEIGHTS",
]
