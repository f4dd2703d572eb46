import hashlib
import json
from pathlib import Path

import pytest

from commtext.cli import main

SMALL_CONFIG = """\
out = {out}
edges = {out}/edges.csv
tweets = {out}/tweets.jsonl
embeddings = builtin-hash:128
algorithms = louvain,bec,infomap
louvain_grid = 1,2
bec_grid = 0.9,1
min_degree = 2
n_cut = 4
n_train = 30
n_test = 30
seed = 7
tracked = {tracked}
synth_communities = 3
synth_nodes = 40
synth_p_in = 0.3
synth_p_out = 0.02
synth_tweets = poisson:8
synth_tokens = poisson:8
synth_vocab = 80
synth_mu_text = 0.05
"""


def write_config(tmp_path, tracked="u00000,u00040,u00080"):
    out = tmp_path / "run"
    cfg = tmp_path / "run.cfg"
    cfg.write_text(SMALL_CONFIG.format(out=out, tracked=tracked))
    return cfg, out


def run(cmd, cfg, *extra):
    return main([cmd, "--config", str(cfg), *extra])


def tree_digest(root: Path) -> dict[str, str]:
    return {
        str(p.relative_to(root)): hashlib.sha256(p.read_bytes()).hexdigest()
        for p in sorted(root.rglob("*"))
        if p.is_file()
    }


@pytest.fixture(scope="module")
def pipeline(tmp_path_factory):
    tmp_path = tmp_path_factory.mktemp("cli")
    cfg, out = write_config(tmp_path)
    for cmd in ("synth", "ingest", "detect", "evaluate", "sweep"):
        assert run(cmd, cfg) == 0, cmd
    return cfg, out


class TestPipeline:
    def test_synth_roundtrips_through_ingest(self, pipeline):
        _, out = pipeline
        manifest = json.loads((out / "synth_manifest.json").read_text())
        node_map = (out / "node_map.csv").read_text().strip().splitlines()[1:]
        assert manifest["nodes"] == 120
        assert len(node_map) == manifest["nodes"]
        graph_lines = [
            line for line in (out / "graph.csv").read_text().splitlines()
            if line and not line.startswith("#")
        ]
        assert len(graph_lines) == manifest["edges"]

    def test_detect_outputs(self, pipeline):
        _, out = pipeline
        manifest = json.loads((out / "manifest.json").read_text())
        assert len(manifest) == 5  # 2 louvain + 2 bec + infomap
        for entry in manifest:
            assert set(entry) == {
                "algorithm", "parameter", "seed", "partition_path",
                "labeled_path", "m", "Q_or_L",
            }
            assert (out / entry["partition_path"]).exists()
            labeled = (out / entry["labeled_path"]).read_text().splitlines()
            assert labeled[0].startswith(f"# algorithm={entry['algorithm']}")
            assert "n_cut=4" in labeled[0]
            assert labeled[1] == "node_id,category"

    def test_report_fixed_keys(self, pipeline):
        _, out = pipeline
        report = json.loads((out / "reports" / "louvain_1.json").read_text())
        for key in ("algorithm", "parameter", "N_cut", "m", "precision",
                    "precision_err", "coverage", "f_beta", "bins",
                    "entropy_curve", "seeds"):
            assert key in report, key
        assert report["audit"]["anchor_users_in_test"] == 0
        assert report["audit"]["train_messages_in_test"] == 0
        assert set(report["f_beta"]) == {"0.1", "0.25", "0.75"}

    def test_misassignment_pairs(self, pipeline):
        _, out = pipeline
        pairs = json.loads((out / "misassignment.json").read_text())
        assert len(pairs) == 10  # C(5, 2)
        for pair in pairs:
            assert pair["intersection"] <= min(pair["wrong_a"], pair["wrong_b"])

    def test_dendrogram_files(self, pipeline):
        _, out = pipeline
        for name in ("louvain", "bec", "infomap"):
            tree = json.loads((out / "dendrograms" / f"{name}.json").read_text())
            assert "categories" in tree
        louvain_tree = json.loads((out / "dendrograms" / "louvain.json").read_text())
        assert louvain_tree["parameter"] == 2.0
        assert louvain_tree["children"][0]["parameter"] == 1.0

    def test_plot_csvs(self, pipeline):
        _, out = pipeline
        summary = (out / "plots" / "summary.csv").read_text().splitlines()
        assert summary[0].startswith("algorithm,parameter,m,precision")
        assert len(summary) == 6


class TestEmbeddingFileMode:
    def test_evaluate_consumes_embedding_file(self, pipeline, tmp_path):
        cfg, out = pipeline
        # Export every corpus message through the binary interface, then
        # point evaluate at the file instead of the built-in embedder.
        from commtext.nlp import embed_texts, load_corpus, write_embeddings

        corpus = load_corpus(out / "tweets.jsonl")
        ids = [m.message_id for m in corpus.messages]
        vectors = embed_texts([m.text for m in corpus.messages], 128)
        emb_path = tmp_path / "vectors.bin"
        write_embeddings(emb_path, ids, vectors)
        code = main([
            "evaluate", "--config", str(cfg),
            "--set", f"embeddings={emb_path}",
            "--set", f"out={tmp_path / 'run2'}",
            "--set", f"edges={out}/edges.csv",
            "--set", f"tweets={out}/tweets.jsonl",
        ])
        # Fresh out dir lacks graph.csv; ingest then evaluate.
        assert code == 3
        assert main(["ingest", "--config", str(cfg),
                     "--set", f"out={tmp_path / 'run2'}",
                     "--set", f"edges={out}/edges.csv"]) == 0
        assert main([
            "evaluate", "--config", str(cfg),
            "--set", f"embeddings={emb_path}",
            "--set", f"out={tmp_path / 'run2'}",
            "--set", f"tweets={out}/tweets.jsonl",
        ]) == 0
        report = json.loads(
            (tmp_path / "run2" / "reports" / "louvain_1.json").read_text()
        )
        # Same text, same hashing dim: the file route reproduces the
        # built-in route exactly.
        builtin = json.loads((out / "reports" / "louvain_1.json").read_text())
        assert report["precision"] == builtin["precision"]


class TestGammaMode:
    def test_louvain_gamma_grid_converts(self, pipeline, tmp_path):
        cfg, out = pipeline
        run2 = tmp_path / "gamma_run"
        assert main(["ingest", "--config", str(cfg),
                     "--set", f"out={run2}",
                     "--set", f"edges={out}/edges.csv"]) == 0
        code = main([
            "detect", "--config", str(cfg),
            "--set", "algorithms=louvain",
            "--set", "louvain_param=gamma",
            "--set", "louvain_grid=0.5",
            "--set", f"out={run2}",
        ])
        assert code == 0
        manifest = json.loads((run2 / "manifest.json").read_text())
        assert len(manifest) == 1
        # gamma = 0.5 runs as c = 1/gamma = 2.
        assert manifest[0]["parameter"] == 2.0


class TestCliErrors:
    def test_unknown_algorithm_lists_supported(self, tmp_path, capsys):
        cfg, _ = write_config(tmp_path)
        code = main(["detect", "--config", str(cfg), "--set", "algorithms=leiden"])
        assert code == 2
        err = capsys.readouterr().err
        assert "leiden" in err and "louvain" in err and "infomap" in err

    def test_missing_edges_key(self, tmp_path, capsys):
        cfg, _ = write_config(tmp_path)
        code = main(["ingest", "--config", str(cfg), "--set", "edges="])
        assert code == 2

    def test_missing_edge_file(self, tmp_path):
        cfg, _ = write_config(tmp_path)
        code = main(["ingest", "--config", str(cfg), "--set", "edges=/nonexistent.csv"])
        assert code == 3

    def test_empty_edge_file(self, tmp_path):
        cfg, _ = write_config(tmp_path)
        empty = tmp_path / "empty.csv"
        empty.write_text("# nothing here\n")
        code = main(["ingest", "--config", str(cfg), "--set", f"edges={empty}"])
        assert code == 3

    def test_bad_quantile(self, tmp_path):
        cfg, _ = write_config(tmp_path)
        assert main(["synth", "--config", str(cfg), "--set", "quantile=1.5"]) == 2

    def test_unknown_config_key(self, tmp_path):
        cfg, _ = write_config(tmp_path)
        assert main(["synth", "--config", str(cfg), "--set", "typo_key=1"]) == 2

    def test_detect_before_ingest(self, tmp_path):
        cfg, _ = write_config(tmp_path)
        assert main(["detect", "--config", str(cfg)]) == 3

    def test_sweep_needs_tracked(self, tmp_path):
        cfg, out = write_config(tmp_path, tracked="")
        assert main(["synth", "--config", str(cfg)]) == 0
        assert main(["ingest", "--config", str(cfg)]) == 0
        assert main(["sweep", "--config", str(cfg)]) == 2
