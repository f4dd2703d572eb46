"""Command-line pipeline: synth, ingest, detect, evaluate, sweep.

Every command is deterministic given config + seeds; rerunning overwrites
outputs byte-identically.  Exit codes: 0 success, 2 config/validation
error, 3 data error, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import traceback
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from ._fsutil import atomic_write_json, atomic_write_text
from .cda import truncate_partition
from .cda.io import labeled_csv_text, partition_csv_text
from .config import RunConfig
from .errors import CommtextError, ConfigError, DataError
from .evaluation import (
    SynthConfig,
    dendrogram_sweep,
    evaluate_algorithm,
    generate_synthetic,
    misassigned_intersection,
)
from .evaluation.runner import ALGORITHMS, quality_of, run_algorithm
from .graph import (
    eigencentrality,
    filter_min_degree,
    load_edge_list,
    quantile_split,
    read_graph,
    to_undirected_max,
)
from .graph.io import graph_csv_text, node_map_text
from .nlp import EnsembleConfig, embed_texts, load_corpus, load_embeddings, save_ensemble
from .nlp.embeddings import EmbeddingStore


def _param_tag(parameter: float | None) -> str:
    return "none" if parameter is None else format(parameter, "g")


def _algorithm_jobs(cfg: RunConfig) -> list[tuple[str, float | None]]:
    jobs: list[tuple[str, float | None]] = []
    for name in cfg.list_("algorithms"):
        if name == "louvain":
            grid = cfg.float_list("louvain_grid")
            if not grid:
                raise ConfigError("louvain_grid is empty")
            if cfg.str_("louvain_param") == "gamma":
                grid = [1.0 / g for g in grid]
            jobs.extend(("louvain", c) for c in grid)
        elif name == "bec":
            grid = cfg.float_list("bec_grid")
            if not grid:
                raise ConfigError("bec_grid is empty")
            jobs.extend(("bec", s) for s in grid)
        elif name == "infomap":
            jobs.append(("infomap", None))
        else:
            raise ConfigError(
                f"unknown algorithm {name!r}; supported: {', '.join(ALGORITHMS)}"
            )
    return jobs


def _run_jobs(fn, argslist: list, workers: int) -> list:
    if workers <= 1 or len(argslist) <= 1:
        return [fn(*args) for args in argslist]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *args) for args in argslist]
        return [f.result() for f in futures]


def _load_pipeline_graph(cfg: RunConfig):
    path = Path(cfg.str_("out")) / "graph.csv"
    if not path.exists():
        raise DataError(f"{path} not found; run `commtext ingest` first")
    return read_graph(path)


def _build_store(cfg: RunConfig, corpus) -> EmbeddingStore:
    spec = cfg.str_("embeddings")
    if spec.startswith("builtin-hash:"):
        try:
            dim = int(spec.split(":", 1)[1])
        except ValueError:
            raise ConfigError(f"bad embeddings spec {spec!r}") from None
        texts = [m.text for m in corpus.messages if not m.external]
        ids = [m.message_id for m in corpus.messages if not m.external]
        return EmbeddingStore(dim=dim, vectors=embed_texts(texts, dim), ids=ids)
    return load_embeddings(spec)


def cmd_synth(cfg: RunConfig) -> int:
    out = Path(cfg.str_("out"))
    out.mkdir(parents=True, exist_ok=True)
    synth_cfg = SynthConfig(
        communities=cfg.int_("synth_communities"),
        nodes_per_community=cfg.int_("synth_nodes"),
        p_in=cfg.float_("synth_p_in"),
        p_out=cfg.float_("synth_p_out"),
        weight_dist=cfg.str_("synth_weight_dist"),
        tweets_per_user=cfg.str_("synth_tweets"),
        tokens_per_tweet=cfg.str_("synth_tokens"),
        vocab_size=cfg.int_("synth_vocab"),
        mu_text=cfg.float_("synth_mu_text"),
        seed=cfg.int_("seed"),
    )
    data = generate_synthetic(synth_cfg)

    edge_lines = ["# planted-partition benchmark edges: src,dst,weight\n"]
    edge_lines.extend(f"{u},{v},{w}\n" for u, v, w in data.edge_rows)
    atomic_write_text(out / "edges.csv", "".join(edge_lines))

    tweet_lines = []
    for msg in data.corpus.messages:
        tweet_lines.append(json.dumps(
            {"user_id": msg.user_id, "tweet_id": msg.message_id, "text": msg.text},
            ensure_ascii=False, sort_keys=True,
        ) + "\n")
    atomic_write_text(out / "tweets.jsonl", "".join(tweet_lines))

    truth_lines = ["node_id,community_id\n"]
    ids = data.graph.ids
    truth_lines.extend(
        f"{ids[i]},{c}\n" for i, c in enumerate(data.truth.assignment.tolist())
    )
    atomic_write_text(out / "truth.csv", "".join(truth_lines))

    atomic_write_json(out / "synth_manifest.json", {
        "config": {
            "communities": synth_cfg.communities,
            "nodes_per_community": synth_cfg.nodes_per_community,
            "p_in": synth_cfg.p_in,
            "p_out": synth_cfg.p_out,
            "weight_dist": synth_cfg.weight_dist,
            "tweets_per_user": synth_cfg.tweets_per_user,
            "tokens_per_tweet": synth_cfg.tokens_per_tweet,
            "vocab_size": synth_cfg.vocab_size,
            "mu_text": synth_cfg.mu_text,
            "seed": synth_cfg.seed,
        },
        "nodes": data.graph.n_nodes,
        "edges": data.graph.n_edges,
        "tweets": len(data.corpus),
        "paths": {"edges": "edges.csv", "tweets": "tweets.jsonl", "truth": "truth.csv"},
    })
    print(f"synth: {data.graph.n_nodes} nodes, {data.graph.n_edges} edges, "
          f"{len(data.corpus)} tweets -> {out}")
    return 0


def cmd_ingest(cfg: RunConfig) -> int:
    edges = cfg.str_("edges")
    if not edges:
        raise ConfigError("config key 'edges' is required for ingest")
    with open(edges, "r", encoding="utf-8") as fh:
        bag = load_edge_list(fh)
    if len(bag) == 0:
        raise DataError(f"{edges}: no edges found")
    g = to_undirected_max(bag)
    raw_nodes, raw_edges = g.n_nodes, g.n_edges
    g = filter_min_degree(g, cfg.int_("min_degree"))
    out = Path(cfg.str_("out"))
    out.mkdir(parents=True, exist_ok=True)
    atomic_write_text(out / "graph.csv", graph_csv_text(g))
    atomic_write_text(out / "node_map.csv", node_map_text(g))
    print(f"ingest: {raw_nodes} nodes / {raw_edges} edges symmetrized; "
          f"{g.n_nodes} nodes / {g.n_edges} edges after degree filter -> {out}")
    return 0


def _detect_one(g, name: str, parameter: float | None, seed: int):
    partition = run_algorithm(g, name, parameter, seed)
    quality = quality_of(g, partition, name, parameter)
    return partition, quality


def cmd_detect(cfg: RunConfig) -> int:
    jobs = _algorithm_jobs(cfg)
    g = _load_pipeline_graph(cfg)
    seed = cfg.int_("seed")
    n_cut = cfg.int_("n_cut")
    out = Path(cfg.str_("out"))
    (out / "partitions").mkdir(parents=True, exist_ok=True)
    (out / "labeled").mkdir(parents=True, exist_ok=True)

    results = _run_jobs(_detect_one, [(g, name, p, seed) for name, p in jobs],
                        cfg.int_("workers"))
    manifest = []
    for (name, parameter), (partition, quality) in zip(jobs, results):
        tag = f"{name}_{_param_tag(parameter)}"
        ppath = out / "partitions" / f"{tag}.csv"
        lpath = out / "labeled" / f"{tag}.csv"
        atomic_write_text(ppath, partition_csv_text(partition))
        lp = truncate_partition(partition, n_cut)
        atomic_write_text(lpath, labeled_csv_text(lp, algorithm=name, parameter=parameter))
        manifest.append({
            "algorithm": name,
            "parameter": parameter,
            "seed": seed,
            "partition_path": str(ppath.relative_to(out)),
            "labeled_path": str(lpath.relative_to(out)),
            "m": partition.m,
            "Q_or_L": quality,
        })
        print(f"detect: {tag}: m={partition.m} quality={quality:.6f}")
    atomic_write_json(out / "manifest.json", manifest)
    return 0


def _evaluate_one(g, corpus, store, split, name, parameter, n_cut, n_train,
                  n_test, betas, ens_cfg, seed):
    return evaluate_algorithm(
        g, corpus, store, split, name, parameter, n_cut, n_train, n_test,
        betas=betas, ensemble_config=ens_cfg, seed=seed,
    )


def cmd_evaluate(cfg: RunConfig) -> int:
    jobs = _algorithm_jobs(cfg)
    g = _load_pipeline_graph(cfg)
    tweets = cfg.str_("tweets")
    if not tweets:
        raise ConfigError("config key 'tweets' is required for evaluate")
    corpus = load_corpus(tweets, known_users=set(g.ids))
    store = _build_store(cfg, corpus)
    scores = eigencentrality(g, tol=cfg.float_("eig_tol"), max_iter=cfg.int_("eig_max_iter"))
    split = quantile_split(scores, cfg.float_("quantile"))

    seed = cfg.int_("seed")
    betas = tuple(cfg.float_list("betas"))
    ens_cfg = EnsembleConfig(weights=tuple(cfg.int_list("weights")), seed=seed + 3)
    out = Path(cfg.str_("out"))
    (out / "reports").mkdir(parents=True, exist_ok=True)
    (out / "plots").mkdir(parents=True, exist_ok=True)

    outcomes = _run_jobs(
        _evaluate_one,
        [(g, corpus, store, split, name, p, cfg.int_("n_cut"), cfg.int_("n_train"),
          cfg.int_("n_test"), betas, ens_cfg, seed) for name, p in jobs],
        cfg.int_("workers"),
    )

    summary_rows = ["algorithm,parameter,m,precision,precision_err,coverage,"
                    + ",".join(f"fbeta_{format(b, 'g')}" for b in betas) + "\n"]
    bin_rows = ["algorithm,parameter,bin_lo,bin_hi,n,fraction,poisson_err\n"]
    entropy_rows = ["algorithm,parameter,tweets,users,mean_entropy,mean_distinct\n"]
    for outcome in outcomes:
        tag = f"{outcome.algorithm}_{_param_tag(outcome.parameter)}"
        atomic_write_json(out / "reports" / f"{tag}.json", outcome.report)
        if cfg.bool_("save_models"):
            save_ensemble(outcome.ensemble, out / "models" / tag)
        r = outcome.report
        summary_rows.append(
            f"{outcome.algorithm},{_param_tag(outcome.parameter)},{r['m']},"
            f"{r['precision']:.6f},{r['precision_err']:.6f},{r['coverage']:.6f},"
            + ",".join(f"{r['f_beta'][str(b)]:.6f}" for b in betas) + "\n"
        )
        for entry in r["bins"]:
            frac = "" if entry["fraction"] is None else f"{entry['fraction']:.6f}"
            err = "" if entry["poisson_err"] is None else f"{entry['poisson_err']:.6f}"
            hi = "inf" if entry["hi"] is None else entry["hi"]
            bin_rows.append(
                f"{outcome.algorithm},{_param_tag(outcome.parameter)},"
                f"{entry['lo']},{hi},{entry['n']},{frac},{err}\n"
            )
        for point in r["entropy_curve"]:
            entropy_rows.append(
                f"{outcome.algorithm},{_param_tag(outcome.parameter)},"
                f"{point['tweets']},{point['users']},"
                f"{point['mean_entropy']:.6f},{point['mean_distinct']:.6f}\n"
            )
        print(f"evaluate: {tag}: precision={r['precision']:.4f}±{r['precision_err']:.4f} "
              f"coverage={r['coverage']:.4f} m={r['m']}")
    atomic_write_text(out / "plots" / "summary.csv", "".join(summary_rows))
    atomic_write_text(out / "plots" / "bins.csv", "".join(bin_rows))
    atomic_write_text(out / "plots" / "entropy.csv", "".join(entropy_rows))

    pairs = []
    for i in range(len(outcomes)):
        for j in range(i + 1, len(outcomes)):
            a, b = outcomes[i], outcomes[j]
            overlap = misassigned_intersection(a.user_records(), b.user_records())
            pairs.append({
                "a": {"algorithm": a.algorithm, "parameter": a.parameter},
                "b": {"algorithm": b.algorithm, "parameter": b.parameter},
                "wrong_a": overlap.wrong_a,
                "wrong_b": overlap.wrong_b,
                "intersection": overlap.intersection,
                "jaccard": overlap.jaccard,
                "overlap_min": overlap.overlap_min,
                "shared_users": overlap.shared_users,
            })
    atomic_write_json(out / "misassignment.json", pairs)
    return 0


def cmd_sweep(cfg: RunConfig) -> int:
    g = _load_pipeline_graph(cfg)
    tracked = cfg.list_("tracked")
    if not tracked:
        raise ConfigError("config key 'tracked' (comma list of user ids) is required for sweep")
    seed = cfg.int_("seed")
    n_cut = cfg.int_("n_cut")
    out = Path(cfg.str_("out"))
    (out / "dendrograms").mkdir(parents=True, exist_ok=True)
    for name in cfg.list_("algorithms"):
        if name == "louvain":
            grid = cfg.float_list("louvain_grid")
            if not grid:
                raise ConfigError("louvain_grid is empty")
            if cfg.str_("louvain_param") == "gamma":
                grid = sorted(1.0 / g_ for g_ in grid)
        elif name == "bec":
            grid = cfg.float_list("bec_grid")
            if not grid:
                raise ConfigError("bec_grid is empty")
        elif name == "infomap":
            grid = [None]
        else:
            raise ConfigError(
                f"unknown algorithm {name!r}; supported: {', '.join(ALGORITHMS)}"
            )
        dendro = dendrogram_sweep(g, name, grid, tracked, n_cut, seed=seed)
        atomic_write_json(out / "dendrograms" / f"{name}.json", dendro.to_json())
        counts = dendro.tracked_category_counts()
        print(f"sweep: {name}: tracked categories along grid = {counts}")
    return 0


COMMANDS = {
    "synth": cmd_synth,
    "ingest": cmd_ingest,
    "detect": cmd_detect,
    "evaluate": cmd_evaluate,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commtext",
        description="Score community-detection algorithms by text-classification agreement.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("synth", "generate a planted-partition benchmark"),
        ("ingest", "parse, symmetrize and filter the edge list"),
        ("detect", "run the community-detection sweep"),
        ("evaluate", "score algorithms against the text ensemble"),
        ("sweep", "export category dendrograms over parameter grids"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", default=None, help="flat key=value config file")
        p.add_argument("--out", default=None, help="output directory (overrides config)")
        p.add_argument("--seed", type=int, default=None, help="master seed (overrides config)")
        p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                       help="override one config key (repeatable)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.load(args.config, args.set)
        if args.out is not None:
            cfg.set("out", args.out)
        if args.seed is not None:
            cfg.set("seed", str(args.seed))
        cfg.validate_common()
        return COMMANDS[args.command](cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 3
    except CommtextError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except Exception:
        traceback.print_exc()
        return 4


if __name__ == "__main__":
    sys.exit(main())
