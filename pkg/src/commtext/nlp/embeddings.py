"""Binary embedding store: magic ``EMB1``, LE u32 dim, LE u64 count, then
count rows of dim little-endian float32; row-aligned ``.ids`` sidecar."""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import DataError

__all__ = [
    "EmbeddingStore",
    "load_embeddings",
    "write_embeddings",
    "EmbeddingFormatError",
]

MAGIC = b"EMB1"
_HEADER = struct.Struct("<4sIQ")


class EmbeddingFormatError(DataError):
    """Embedding file violates the binary format contract."""


@dataclass
class EmbeddingStore:
    dim: int
    vectors: np.ndarray            # count x dim float32
    ids: list[str]
    _index: dict[str, int] = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if not self._index:
            self._index = {mid: i for i, mid in enumerate(self.ids)}
        if len(self._index) != len(self.ids):
            raise EmbeddingFormatError("duplicate message ids")

    @property
    def count(self) -> int:
        return len(self.ids)

    def __contains__(self, message_id: str) -> bool:
        return message_id in self._index

    def get(self, message_id: str) -> np.ndarray:
        try:
            return self.vectors[self._index[message_id]]
        except KeyError:
            raise DataError(f"unknown message id {message_id!r}") from None

    def rows(self, message_ids: list[str]) -> np.ndarray:
        idx = np.fromiter((self._index[m] for m in message_ids), dtype=np.int64,
                          count=len(message_ids))
        return self.vectors[idx]


def _ids_path(path: str | Path) -> Path:
    return Path(str(path) + ".ids")


def write_embeddings(path: str | Path, ids: list[str], vectors: np.ndarray) -> None:
    vectors = np.ascontiguousarray(vectors, dtype="<f4")
    if vectors.ndim != 2 or vectors.shape[0] != len(ids):
        raise DataError("vectors must be a (count, dim) array aligned with ids")
    path = Path(path)
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(MAGIC, vectors.shape[1], vectors.shape[0]))
        fh.write(vectors.tobytes(order="C"))
    _ids_path(path).write_text("".join(f"{mid}\n" for mid in ids), encoding="utf-8")


def load_embeddings(path: str | Path) -> EmbeddingStore:
    """Read and validate an embedding file plus its ``.ids`` sidecar.

    Distinct failures: bad magic, truncated or oversized payload, sidecar
    row mismatch, duplicate ids, non-finite values.
    """
    path = Path(path)
    raw = path.read_bytes()
    if len(raw) < _HEADER.size:
        raise EmbeddingFormatError(f"{path}: truncated header")
    magic, dim, count = _HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise EmbeddingFormatError(f"{path}: bad magic {magic!r}")
    if dim == 0:
        raise EmbeddingFormatError(f"{path}: zero dimension")
    expected = _HEADER.size + count * dim * 4
    if len(raw) < expected:
        raise EmbeddingFormatError(
            f"{path}: truncated payload ({len(raw)} bytes, expected {expected})"
        )
    if len(raw) > expected:
        raise EmbeddingFormatError(
            f"{path}: trailing bytes ({len(raw)} bytes, expected {expected})"
        )
    vectors = np.frombuffer(raw, dtype="<f4", offset=_HEADER.size).reshape(count, dim)
    ids_file = _ids_path(path)
    if not ids_file.exists():
        raise EmbeddingFormatError(f"{ids_file}: missing ids sidecar")
    ids = ids_file.read_text(encoding="utf-8").splitlines()
    if len(ids) != count:
        raise EmbeddingFormatError(
            f"{ids_file}: {len(ids)} ids for {count} rows"
        )
    if len(set(ids)) != len(ids):
        raise EmbeddingFormatError(f"{ids_file}: duplicate message ids")
    if not np.all(np.isfinite(vectors)):
        bad = int(np.flatnonzero(~np.isfinite(vectors).all(axis=1))[0])
        raise EmbeddingFormatError(f"{path}: non-finite values in row {bad}")
    return EmbeddingStore(dim=int(dim), vectors=np.array(vectors), ids=ids)
