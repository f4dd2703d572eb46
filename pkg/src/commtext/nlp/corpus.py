"""Message corpus: JSONL of {user_id, tweet_id, text} objects."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from ..errors import DataError, ParseError

__all__ = ["Message", "Corpus", "load_corpus", "write_corpus"]


@dataclass(frozen=True)
class Message:
    message_id: str
    user_id: str
    text: str
    external: bool = False   # user absent from the graph's node map


@dataclass
class Corpus:
    messages: list[Message]

    def __len__(self) -> int:
        return len(self.messages)

    def by_user(self) -> dict[str, list[Message]]:
        out: dict[str, list[Message]] = {}
        for msg in self.messages:
            out.setdefault(msg.user_id, []).append(msg)
        return out


def load_corpus(path: str | Path, known_users: set[str] | None = None) -> Corpus:
    """Read a JSONL corpus; users outside ``known_users`` are flagged external."""
    messages: list[Message] = []
    seen: set[str] = set()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad JSON: {exc.msg}", line=lineno) from None
            try:
                mid = str(obj["tweet_id"])
                uid = str(obj["user_id"])
                text = str(obj["text"])
            except (KeyError, TypeError):
                raise ParseError("object needs user_id, tweet_id, text", line=lineno) from None
            if mid in seen:
                raise ParseError(f"duplicate tweet_id {mid!r}", line=lineno)
            seen.add(mid)
            external = known_users is not None and uid not in known_users
            messages.append(Message(message_id=mid, user_id=uid, text=text, external=external))
    if not messages:
        raise DataError(f"{path}: empty corpus")
    return Corpus(messages=messages)


def write_corpus(path: str | Path, rows: Iterable[tuple[str, str, str]]) -> int:
    """Write (user_id, tweet_id, text) rows as JSONL; returns the row count."""
    count = 0
    with open(path, "w", encoding="utf-8") as fh:
        for user_id, tweet_id, text in rows:
            fh.write(json.dumps(
                {"user_id": user_id, "tweet_id": tweet_id, "text": text},
                ensure_ascii=False, sort_keys=True,
            ))
            fh.write("\n")
            count += 1
    return count
