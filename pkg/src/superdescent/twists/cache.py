"""Persistent memo of twist outcomes in a single versioned JSON document."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import threading
import warnings
from pathlib import Path
from typing import Optional

from filelock import FileLock

from ..errors import CacheCorrupt, CacheCorruptWarning
from .equations import TwistEquation, TwistOutcome, encode_line, outcome_from_dict, outcome_to_dict

CACHE_VERSION = 1


def cache_key(t: TwistEquation, backend: str, height: Optional[int] = None) -> str:
    """Request line plus the solving regime (bounded results depend on the height)."""
    regime = {"backend": backend}
    if backend == "bounded":
        regime["height"] = height
    return t.request_line() + "|" + encode_line(regime)


def _checksum(entries: dict) -> str:
    blob = json.dumps(entries, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _stringify(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_stringify(v) for v in obj]
    return obj


class TwistCache:
    """Readers share an in-memory copy; writers serialize through a file lock."""

    def __init__(self, path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._file_lock = FileLock(str(self.path) + ".lock")
        self._entries: dict = self._load()

    def _read(self) -> dict:
        if not self.path.exists():
            return {}
        try:
            doc = json.loads(self.path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise CacheCorrupt(f"unreadable cache {self.path}: {exc}") from exc
        if not isinstance(doc, dict) or doc.get("version") != CACHE_VERSION:
            raise CacheCorrupt(f"cache {self.path} has version {doc.get('version')!r}")
        entries = doc.get("entries")
        if not isinstance(entries, dict):
            raise CacheCorrupt(f"cache {self.path} has no entries table")
        if doc.get("checksum") != _checksum(entries):
            raise CacheCorrupt(f"cache {self.path} fails its checksum")
        return entries

    def _load(self) -> dict:
        try:
            return self._read()
        except CacheCorrupt as exc:
            warnings.warn(str(exc), CacheCorruptWarning, stacklevel=3)
            return {}

    def get(self, key: str) -> Optional[TwistOutcome]:
        with self._lock:
            data = self._entries.get(key)
        if data is None:
            return None
        try:
            return outcome_from_dict(data)
        except (KeyError, TypeError, ValueError, AssertionError) as exc:
            warnings.warn(f"dropping bad cache entry: {exc}", CacheCorruptWarning, stacklevel=2)
            return None

    def put(self, key: str, outcome: TwistOutcome) -> None:
        data = _stringify(outcome_to_dict(outcome))
        with self._lock, self._file_lock:
            try:
                on_disk = self._read()
            except CacheCorrupt:
                on_disk = {}
            on_disk.update(self._entries)
            on_disk[key] = data
            self._entries = on_disk
            doc = {"version": CACHE_VERSION, "checksum": _checksum(on_disk), "entries": on_disk}
            self.path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".cache-")
            with os.fdopen(fd, "w") as fh:
                json.dump(doc, fh, sort_keys=True)
            os.replace(tmp, self.path)

    def __len__(self) -> int:
        return len(self._entries)
