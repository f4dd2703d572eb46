import numpy as np
import pytest

from commtext.errors import ConfigError
from commtext.nlp import embed_texts, hash_embed


class TestHashEmbed:
    def test_empty_text_zero_vector(self):
        vec = hash_embed("", 64)
        assert vec.shape == (64,)
        assert not vec.any()

    def test_deterministic(self):
        text = "Climate #action now! @everyone read this"
        assert np.array_equal(hash_embed(text, 256), hash_embed(text, 256))

    def test_unit_norm_for_nonempty(self):
        vec = hash_embed("one two three", 128)
        assert np.linalg.norm(vec) == pytest.approx(1.0, abs=1e-6)

    def test_hashtags_and_mentions_atomic(self):
        # '#topic' must hash differently from the bare word 'topic'.
        a = hash_embed("#topic", 1024)
        b = hash_embed("topic", 1024)
        c = hash_embed("@topic", 1024)
        assert not np.array_equal(a, b)
        assert not np.array_equal(a, c)

    def test_case_insensitive(self):
        assert np.array_equal(hash_embed("Hello WORLD", 128), hash_embed("hello world", 128))

    def test_min_dim_enforced(self):
        with pytest.raises(ConfigError):
            hash_embed("text", 8)

    def test_disjoint_vocabulary_low_cosine(self):
        rng = np.random.default_rng(2)
        for trial in range(20):
            left = " ".join(f"alpha{trial}x{rng.integers(1000)}" for _ in range(20))
            right = " ".join(f"beta{trial}y{rng.integers(1000)}" for _ in range(20))
            a = hash_embed(left, 1024)
            b = hash_embed(right, 1024)
            assert abs(float(a @ b)) < 0.3

    def test_batch_matches_single(self):
        texts = ["first text", "", "second #text @user", "first text"]
        batch = embed_texts(texts, 128)
        for row, text in zip(batch, texts):
            assert np.array_equal(row, hash_embed(text, 128))
