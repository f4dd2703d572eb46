"""Planted-partition benchmark with community-correlated text.

Users inside a community are wired with probability p_in, across
communities with p_out; each user emits tweets whose tokens come from the
own community's vocabulary except with probability mu_text, where a token
is drawn from another community's vocabulary instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..cda.partition import Partition
from ..errors import ConfigError
from ..graph import Graph
from ..nlp.corpus import Corpus, Message

__all__ = ["SynthConfig", "SyntheticData", "generate_synthetic"]


@dataclass(frozen=True)
class SynthConfig:
    communities: int = 4
    nodes_per_community: int = 250
    p_in: float = 0.1
    p_out: float = 0.002
    weight_dist: str = "uniform:1,3"
    tweets_per_user: str = "poisson:50"
    tokens_per_tweet: str = "poisson:11"
    vocab_size: int = 400
    mu_text: float = 0.05
    seed: int = 0

    def validate(self) -> None:
        if self.communities < 2:
            raise ConfigError("need at least 2 communities")
        if self.nodes_per_community < 2:
            raise ConfigError("need at least 2 nodes per community")
        if not (0.0 <= self.p_out <= self.p_in <= 1.0):
            raise ConfigError(f"need 0 <= p_out <= p_in <= 1, got ({self.p_in}, {self.p_out})")
        if not (0.0 <= self.mu_text <= 1.0):
            raise ConfigError(f"mu_text must be in [0, 1], got {self.mu_text}")
        if self.vocab_size < 1:
            raise ConfigError("vocab_size must be >= 1")
        _parse_dist(self.weight_dist)
        _parse_dist(self.tweets_per_user)
        _parse_dist(self.tokens_per_tweet)


def _parse_dist(spec: str) -> tuple[str, list[float]]:
    try:
        name, _, argtext = spec.partition(":")
        args = [float(a) for a in argtext.split(",")] if argtext else []
    except ValueError:
        raise ConfigError(f"bad distribution spec {spec!r}") from None
    if name == "const" and len(args) == 1:
        return name, args
    if name == "uniform" and len(args) == 2 and args[0] <= args[1]:
        return name, args
    if name == "poisson" and len(args) == 1 and args[0] > 0:
        return name, args
    if name == "geometric" and len(args) == 1 and args[0] >= 1:
        return name, args
    raise ConfigError(f"bad distribution spec {spec!r}")


def _sample_counts(spec: str, size: int, rng: np.random.Generator,
                   minimum: int = 1) -> np.ndarray:
    """Integer samples, clipped below at ``minimum``."""
    name, args = _parse_dist(spec)
    if name == "const":
        out = np.full(size, int(args[0]), dtype=np.int64)
    elif name == "uniform":
        out = rng.integers(int(args[0]), int(args[1]) + 1, size=size)
    elif name == "poisson":
        out = rng.poisson(args[0], size=size)
    else:  # geometric with the given mean
        out = rng.geometric(1.0 / args[0], size=size)
    return np.maximum(out, minimum).astype(np.int64)


@dataclass
class SyntheticData:
    graph: Graph
    corpus: Corpus
    truth: Partition
    config: SynthConfig
    edge_rows: list[tuple[str, str, int]] = field(repr=False, default_factory=list)


def _planted_edges(cfg: SynthConfig, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    k, npc = cfg.communities, cfg.nodes_per_community
    blocks_u: list[np.ndarray] = []
    blocks_v: list[np.ndarray] = []
    # Intra-community pairs, then inter-community block pairs, in a fixed
    # order so the RNG stream is reproducible.
    iu, iv = np.triu_indices(npc, k=1)
    for b in range(k):
        mask = rng.random(iu.size) < cfg.p_in
        blocks_u.append(iu[mask] + b * npc)
        blocks_v.append(iv[mask] + b * npc)
    for a in range(k):
        for b in range(a + 1, k):
            if cfg.p_out == 0.0:
                continue
            mask = rng.random(npc * npc) < cfg.p_out
            gu, gv = np.divmod(np.flatnonzero(mask), npc)
            blocks_u.append(gu + a * npc)
            blocks_v.append(gv + b * npc)
    u = np.concatenate(blocks_u) if blocks_u else np.zeros(0, dtype=np.int64)
    v = np.concatenate(blocks_v) if blocks_v else np.zeros(0, dtype=np.int64)
    w = _sample_counts(cfg.weight_dist, u.size, rng, minimum=1)
    return u.astype(np.int64), v.astype(np.int64), w


def generate_synthetic(cfg: SynthConfig) -> SyntheticData:
    """Deterministic benchmark: graph, corpus, and the planted ground truth."""
    cfg.validate()
    rng = np.random.default_rng(cfg.seed)
    k, npc = cfg.communities, cfg.nodes_per_community
    n = k * npc
    width = max(5, len(str(n - 1)))
    ids = [f"u{i:0{width}d}" for i in range(n)]

    eu, ev, ew = _planted_edges(cfg, rng)
    graph = Graph(ids, eu, ev, ew.astype(np.float64))
    edge_rows = [(ids[int(eu[i])], ids[int(ev[i])], int(ew[i])) for i in range(eu.size)]

    planted = np.repeat(np.arange(k, dtype=np.int64), npc)
    truth = Partition.from_labels(graph, planted)

    tweet_counts = _sample_counts(cfg.tweets_per_user, n, rng, minimum=1)
    messages: list[Message] = []
    tid = 0
    for user in range(n):
        own = user // npc
        for _ in range(int(tweet_counts[user])):
            n_tokens = int(_sample_counts(cfg.tokens_per_tweet, 1, rng, minimum=1)[0])
            words = []
            for _ in range(n_tokens):
                if cfg.mu_text > 0.0 and rng.random() < cfg.mu_text:
                    other = int(rng.integers(0, k - 1))
                    block = other if other < own else other + 1
                else:
                    block = own
                word = int(rng.integers(0, cfg.vocab_size))
                words.append(f"w{block}x{word}")
            messages.append(Message(
                message_id=f"t{tid:08d}",
                user_id=ids[user],
                text=" ".join(words),
            ))
            tid += 1
    return SyntheticData(graph=graph, corpus=Corpus(messages=messages),
                         truth=truth, config=cfg, edge_rows=edge_rows)
