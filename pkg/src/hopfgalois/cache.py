"""On-disk result cache for the command-line front end.

One JSON document per cache file, mapping keys (operation + canonical
argument string + engine version) to serialized results.  Writes are atomic
(write-temp-then-rename).  A verify mode recomputes a deterministic 10%
sample of hits and fails loudly on mismatch.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path

ENV_CACHE_PATH = "HOPFGALOIS_CACHE"


@dataclass(frozen=True)
class CacheRecord:
    key: str
    value: object
    timestamp: float


class ResultCache:
    def __init__(self, path: str | os.PathLike, engine_version: str):
        self.path = Path(path)
        self.engine_version = engine_version
        self._data: dict[str, dict] = {}
        self._hits: list[str] = []
        if self.path.exists():
            try:
                self._data = json.loads(self.path.read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError):
                self._data = {}

    def make_key(self, operation: str, arg_string: str) -> str:
        return f"{operation}:{arg_string}:v{self.engine_version}"

    def get(self, key: str):
        rec = self._data.get(key)
        if rec is None:
            return None
        self._hits.append(key)
        return rec["value"]

    def put(self, key: str, value) -> None:
        self._data[key] = {"value": value, "time": time.time()}
        self._flush()

    def _flush(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=str(self.path.parent),
                                   prefix=self.path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(self._data, fh, sort_keys=True)
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def verify_sample(self, recompute) -> list[str]:
        """Recompute a deterministic ~10% sample of this session's hits.

        ``recompute(key)`` must return the fresh value; returns the list of
        mismatched keys.
        """
        mismatches = []
        for key in self._hits:
            digest = hashlib.sha256(key.encode()).digest()
            if digest[0] % 10 != 0:
                continue
            fresh = recompute(key)
            if fresh != self._data[key]["value"]:
                mismatches.append(key)
        return mismatches
