"""Deterministic feature-hashing embedder.

Stands in for transformer embeddings when none are supplied: platform-
independent (fixed 64-bit FNV-1a), tokenizer keeps #hashtags and @mentions
as single tokens.
"""

from __future__ import annotations

import re

import numpy as np

from ..errors import ConfigError

__all__ = ["hash_embed", "embed_texts"]

_TOKEN_RE = re.compile(r"[#@]?\w+")

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK = 0xFFFFFFFFFFFFFFFF


def _fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for b in data:
        h ^= b
        h = (h * _FNV_PRIME) & _MASK
    return h


def _bucket_sign(token: str, dim: int) -> tuple[int, float]:
    h = _fnv1a64(token.encode("utf-8"))
    return (h >> 1) % dim, 1.0 if h & 1 else -1.0


def hash_embed(text: str, dim: int) -> np.ndarray:
    """Signed token-count vector, L2-normalized; zero vector for empty text."""
    if dim < 16:
        raise ConfigError(f"embedding dim must be >= 16, got {dim}")
    vec = np.zeros(dim, dtype=np.float32)
    for token in _TOKEN_RE.findall(text.lower()):
        bucket, sign = _bucket_sign(token, dim)
        vec[bucket] += sign
    norm = float(np.linalg.norm(vec))
    if norm > 0.0:
        vec /= norm
    return vec


def embed_texts(texts: list[str], dim: int) -> np.ndarray:
    """Batch hash_embed with a shared token cache."""
    if dim < 16:
        raise ConfigError(f"embedding dim must be >= 16, got {dim}")
    cache: dict[str, tuple[int, float]] = {}
    out = np.zeros((len(texts), dim), dtype=np.float32)
    for row, text in enumerate(texts):
        vec = out[row]
        for token in _TOKEN_RE.findall(text.lower()):
            hit = cache.get(token)
            if hit is None:
                hit = _bucket_sign(token, dim)
                cache[token] = hit
            vec[hit[0]] += hit[1]
        norm = float(np.linalg.norm(vec))
        if norm > 0.0:
            vec /= norm
    return out
