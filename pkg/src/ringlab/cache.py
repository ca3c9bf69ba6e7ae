"""Append-only verdict cache, line-delimited JSON.

Each line is ``{"key": ..., "version": ..., "value": ...}``.  Entries
written by a different tool version are treated as misses; corrupt
lines are skipped with a warning, never an error.  There is a single
writer per file (the sweep driver), so appends need no locking.
"""

from __future__ import annotations

import json
import os
import warnings
from pathlib import Path

from . import __version__

ENV_VAR = "RINGLAB_CACHE"


class VerdictCache:
    def __init__(self, path: str | os.PathLike, *, version: str = __version__):
        self.path = Path(path)
        self.version = version
        self._entries: dict[str, object] = {}
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        for lineno, line in enumerate(self.path.read_text().splitlines(), start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
                key = record["key"]
                version = record["version"]
                value = record["value"]
            except (json.JSONDecodeError, KeyError, TypeError):
                warnings.warn(f"skipping corrupt cache line {lineno} in {self.path}")
                continue
            if version == self.version:
                self._entries[key] = value

    def get(self, key: str):
        """Cached value, or None on a miss (including version mismatch)."""
        return self._entries.get(key)

    def put(self, key: str, value) -> None:
        self._entries[key] = value
        record = {"key": key, "version": self.version, "value": value}
        with self.path.open("a") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")

    def __len__(self) -> int:
        return len(self._entries)


def cache_from_env(flag_path: str | None, *, disabled: bool = False) -> VerdictCache | None:
    """Resolve the cache location from a CLI flag or the environment."""
    if disabled:
        return None
    path = flag_path or os.environ.get(ENV_VAR)
    return VerdictCache(path) if path else None
