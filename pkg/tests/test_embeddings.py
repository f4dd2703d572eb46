import numpy as np
import pytest

from commtext.nlp import EmbeddingFormatError, load_embeddings, write_embeddings
from commtext.nlp.embeddings import MAGIC


def sample_store(tmp_path, count=3, dim=4):
    rng = np.random.default_rng(1)
    vectors = rng.standard_normal((count, dim)).astype(np.float32)
    ids = [f"m{i}" for i in range(count)]
    path = tmp_path / "emb.bin"
    write_embeddings(path, ids, vectors)
    return path, ids, vectors


class TestEmbeddingFormat:
    def test_round_trip_bit_identical(self, tmp_path):
        path, ids, vectors = sample_store(tmp_path)
        store = load_embeddings(path)
        assert store.count == 3 and store.dim == 4
        assert store.ids == ids
        assert store.vectors.tobytes() == vectors.tobytes()

    def test_rewrite_is_byte_identical(self, tmp_path):
        path, ids, vectors = sample_store(tmp_path)
        first = path.read_bytes()
        write_embeddings(path, ids, vectors)
        assert path.read_bytes() == first

    def test_get_by_id(self, tmp_path):
        path, ids, vectors = sample_store(tmp_path)
        store = load_embeddings(path)
        assert np.array_equal(store.get("m1"), vectors[1])

    def test_bad_magic(self, tmp_path):
        path, _, _ = sample_store(tmp_path)
        raw = bytearray(path.read_bytes())
        raw[:4] = b"NOPE"
        path.write_bytes(bytes(raw))
        with pytest.raises(EmbeddingFormatError, match="magic"):
            load_embeddings(path)

    def test_truncated_payload(self, tmp_path):
        path, _, _ = sample_store(tmp_path)
        raw = path.read_bytes()
        path.write_bytes(raw[:-5])
        with pytest.raises(EmbeddingFormatError, match="truncated"):
            load_embeddings(path)

    def test_trailing_bytes(self, tmp_path):
        path, _, _ = sample_store(tmp_path)
        path.write_bytes(path.read_bytes() + b"xx")
        with pytest.raises(EmbeddingFormatError, match="trailing"):
            load_embeddings(path)

    def test_duplicate_ids(self, tmp_path):
        path, ids, vectors = sample_store(tmp_path)
        sidecar = tmp_path / "emb.bin.ids"
        sidecar.write_text("m0\nm0\nm2\n")
        with pytest.raises(EmbeddingFormatError, match="duplicate"):
            load_embeddings(path)

    def test_sidecar_count_mismatch(self, tmp_path):
        path, _, _ = sample_store(tmp_path)
        (tmp_path / "emb.bin.ids").write_text("m0\nm1\n")
        with pytest.raises(EmbeddingFormatError, match="ids for"):
            load_embeddings(path)

    def test_non_finite_rejected(self, tmp_path):
        rng = np.random.default_rng(2)
        vectors = rng.standard_normal((2, 4)).astype(np.float32)
        vectors[1, 2] = np.nan
        path = tmp_path / "bad.bin"
        write_embeddings(path, ["a", "b"], vectors)
        with pytest.raises(EmbeddingFormatError, match="non-finite"):
            load_embeddings(path)

    def test_header_layout(self, tmp_path):
        path, _, _ = sample_store(tmp_path, count=2, dim=5)
        raw = path.read_bytes()
        assert raw[:4] == MAGIC
        assert int.from_bytes(raw[4:8], "little") == 5
        assert int.from_bytes(raw[8:16], "little") == 2
        assert len(raw) == 16 + 2 * 5 * 4
