"""Run records and an on-disk cache keyed by (command, parameters, version)."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import __version__

CACHE_ENV = "LINTERSECT_CACHE_DIR"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "lintersect"


@dataclass
class RunRecord:
    command: str
    parameters: dict
    timestamp: str
    payload: dict
    version: str = __version__
    cached: bool = False

    @classmethod
    def new(cls, command: str, parameters: dict, payload: dict) -> "RunRecord":
        ts = datetime.now(timezone.utc).isoformat(timespec="seconds")
        return cls(command, parameters, ts, payload)

    @property
    def key(self) -> str:
        return cache_key(self.command, self.parameters, self.version)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "timestamp": self.timestamp,
            "payload": self.payload,
            "version": self.version,
        }

    def to_json(self) -> str:
        return canonical_json(self.to_dict())

    @classmethod
    def from_json(cls, text: str, cached: bool = False) -> "RunRecord":
        d = json.loads(text)
        return cls(d["command"], d["parameters"], d["timestamp"], d["payload"], d["version"], cached)


def cache_key(command: str, parameters: dict, version: str = __version__) -> str:
    blob = canonical_json([command, parameters, version])
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:32]


class ResultCache:
    def __init__(self, directory=None):
        self.dir = Path(directory) if directory is not None else default_cache_dir()

    def path(self, key: str, suffix: str = ".json") -> Path:
        return self.dir / f"{key}{suffix}"

    def get(self, command: str, parameters: dict) -> RunRecord | None:
        p = self.path(cache_key(command, parameters))
        if not p.exists():
            return None
        return RunRecord.from_json(p.read_text(encoding="utf-8"), cached=True)

    def put(self, record: RunRecord) -> Path:
        return self.write_text(record.key, record.to_json())

    def write_text(self, key: str, text: str, suffix: str = ".json") -> Path:
        """Write-then-rename so readers never see a partial file."""
        self.dir.mkdir(parents=True, exist_ok=True)
        target = self.path(key, suffix)
        fd, tmp = tempfile.mkstemp(dir=self.dir, prefix=".tmp-")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return target
