"""Append-only JSON-lines store of witness records, one file per kind.

Every record that carries a witness is re-certified when read; a record that
fails is moved to a quarantine file and reported as a miss.
"""

from __future__ import annotations

import json
import logging
import os
import threading
import warnings
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .records import CertificationError, Kind, WitnessRecord

try:
    import fcntl
except ImportError:  # pragma: no cover - non-POSIX
    fcntl = None

log = logging.getLogger(__name__)

ENV_VAR = "QCC_CACHE_DIR"


def canonical_key(kind: Kind | str, params) -> tuple[str, tuple[int, ...]]:
    kind = Kind(kind)
    return kind.value, tuple(int(x) for x in params)


class Cache:
    def __init__(self, directory: str | os.PathLike | None = None):
        if directory is None:
            directory = os.environ.get(ENV_VAR)
        self.directory = Path(directory) if directory else None
        self._memory: dict[tuple[str, tuple[int, ...]], WitnessRecord] = {}
        self._loaded: set[str] = set()
        self._quarantined: set[str] = set()
        self._lines: dict[tuple[str, tuple[int, ...]], str] = {}
        self._lock = threading.Lock()
        if self.directory is not None:
            try:
                self.directory.mkdir(parents=True, exist_ok=True)
                probe = self.directory / ".write-test"
                probe.write_text("")
                probe.unlink()
            except OSError as exc:
                warnings.warn(f"cache directory {self.directory} is not writable ({exc}); using memory only")
                self.directory = None

    @property
    def persistent(self) -> bool:
        return self.directory is not None

    def _path(self, kind: str) -> Path:
        return self.directory / f"{kind}.jsonl"

    def _quarantine_path(self, kind: str) -> Path:
        return self.directory / f"{kind}.quarantine.jsonl"

    def _load(self, kind: str) -> None:
        if kind in self._loaded or self.directory is None:
            return
        self._loaded.add(kind)
        qpath = self._quarantine_path(kind)
        if qpath.exists():
            for line in qpath.read_text().splitlines():
                self._quarantined.add(line.strip())
        path = self._path(kind)
        if not path.exists():
            return
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                text = line.strip()
                if not text or text in self._quarantined:
                    continue
                try:
                    entry = json.loads(text)
                    rec = WitnessRecord.from_json(entry["record"])
                except (ValueError, KeyError, TypeError) as exc:
                    log.warning("skipping unreadable cache line %s:%d (%s)", path, lineno, exc)
                    continue
                self._memory[rec.key] = rec
                self._lines[rec.key] = text

    def get(self, kind: Kind | str, params) -> WitnessRecord | None:
        key = canonical_key(kind, params)
        with self._lock:
            self._load(key[0])
            rec = self._memory.get(key)
            if rec is None:
                return None
            try:
                rec.certify()
            except CertificationError as exc:
                log.warning("cache entry %s failed certification: %s", key, exc)
                self._quarantine(rec)
                return None
            return rec

    def _quarantine(self, rec: WitnessRecord) -> None:
        del self._memory[rec.key]
        line = self._lines.pop(rec.key, None)
        if line is None or self.directory is None:
            return
        self._quarantined.add(line)
        self._append(self._quarantine_path(rec.kind.value), line)

    def put(self, rec: WitnessRecord) -> None:
        rec.certify()
        entry = {
            "key": [rec.kind.value, list(rec.params)],
            "record": rec.to_json(),
            "created_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "tool_version": __version__,
        }
        line = json.dumps(entry, sort_keys=True)
        with self._lock:
            self._load(rec.kind.value)
            self._memory[rec.key] = rec
            self._lines[rec.key] = line
            if self.directory is not None:
                try:
                    self._append(self._path(rec.kind.value), line)
                except OSError as exc:
                    warnings.warn(f"cache write failed ({exc}); keeping the record in memory")

    @staticmethod
    def _append(path: Path, line: str) -> None:
        data = (line + "\n").encode("utf-8")
        fd = os.open(path, os.O_WRONLY | os.O_APPEND | os.O_CREAT, 0o644)
        try:
            if fcntl is not None:
                fcntl.flock(fd, fcntl.LOCK_EX)
            # A trailing line cut short by a crash would glue onto this one.
            size = os.fstat(fd).st_size
            if size:
                with open(path, "rb") as fh:
                    fh.seek(size - 1)
                    if fh.read(1) != b"\n":
                        data = b"\n" + data
            os.write(fd, data)
        finally:
            if fcntl is not None:
                fcntl.flock(fd, fcntl.LOCK_UN)
            os.close(fd)

    def __len__(self) -> int:
        for kind in Kind:
            self._load(kind.value)
        return len(self._memory)
