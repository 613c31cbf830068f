"""Append-only result cache for avoidance counts.

Entries are newline-delimited JSON records keyed by the canonical textual
query "pattern|class|n".  The store directory comes from the ALTPERM_CACHE
environment variable (default ./.altperm-cache); writes append under an
exclusive file lock so concurrent runs cannot interleave records.
"""
from __future__ import annotations

import fcntl
import json
import os
import time
from pathlib import Path

from . import __version__
from .perms import Perm, PermClass, format_perm

_STORE_NAME = "counts.jsonl"


def cache_dir() -> Path:
    return Path(os.environ.get("ALTPERM_CACHE", ".altperm-cache"))


def query_key(pattern: Perm, cls: PermClass, n: int) -> str:
    return f"{format_perm(pattern)}|{cls.label()}|{n}"


class CountCache:
    def __init__(self, directory: Path | str | None = None) -> None:
        self.directory = Path(directory) if directory is not None else cache_dir()
        self._entries: dict[str, int] = {}
        self._load()

    @property
    def path(self) -> Path:
        return self.directory / _STORE_NAME

    def _load(self) -> None:
        if not self.path.exists():
            return
        with open(self.path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                self._entries[rec["key"]] = int(rec["count"])

    def get(self, pattern: Perm, cls: PermClass, n: int) -> int | None:
        return self._entries.get(query_key(pattern, cls, n))

    def put(self, pattern: Perm, cls: PermClass, n: int, count: int) -> None:
        key = query_key(pattern, cls, n)
        if self._entries.get(key) == count:
            return
        self._entries[key] = count
        self.directory.mkdir(parents=True, exist_ok=True)
        record = json.dumps(
            {"key": key, "count": count, "version": __version__, "ts": time.time()}
        )
        with open(self.path, "a", encoding="utf-8") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            fh.write(record + "\n")
            fh.flush()
            fcntl.flock(fh, fcntl.LOCK_UN)

    def __len__(self) -> int:
        return len(self._entries)

    def verify_sample(self, k: int = 50, rng=None) -> list[str]:
        """Recompute up to k random cached entries; return the keys whose
        recomputation disagrees (empty list = cache is clean)."""
        import random

        from .enumeration import AvoidanceQuery, count_avoiders
        from .perms import parse_class, parse_perm

        rng = rng or random.Random(0)
        keys = sorted(self._entries)
        rng.shuffle(keys)
        bad = []
        for key in keys[:k]:
            pat_s, cls_s, n_s = key.split("|")
            res = count_avoiders(
                AvoidanceQuery(parse_perm(pat_s), parse_class(cls_s), int(n_s))
            )
            if res.count != self._entries[key]:
                bad.append(key)
        return bad
