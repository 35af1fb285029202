from __future__ import annotations

import hashlib
import json
import os
import sqlite3
import time
import uuid
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

import pandas as pd

from surface_beta import __version__


def utc_now() -> datetime:
    return datetime.now(timezone.utc)


def sha256_file(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1024 * 1024), b""):
            h.update(chunk)
    return h.hexdigest()


def file_size(path: str) -> int:
    try:
        return os.path.getsize(path)
    except OSError:
        return 0


def config_hash(config: dict[str, Any]) -> str:
    """Stable hash of a run configuration (keys sorted)."""
    raw = json.dumps(config, sort_keys=True, default=str)
    return hashlib.sha256(raw.encode("utf-8")).hexdigest()


def _strip_provenance(path: str) -> str:
    """Hash of a CSV/JSON artifact without its provenance timestamp."""
    p = Path(path)
    text = p.read_text(encoding="utf-8")
    if p.suffix.lower() == ".json":
        data = json.loads(text)
        data.pop("provenance", None)
        text = json.dumps(data, sort_keys=True)
    elif text.startswith("# provenance: "):
        text = text.partition("\n")[2]
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def content_hash(path: str) -> str:
    """Artifact hash that ignores provenance metadata (timestamps differ between runs)."""
    suffix = Path(path).suffix.lower()
    if suffix in {".csv", ".json"}:
        return _strip_provenance(path)
    if suffix == ".parquet":
        df = pd.read_parquet(path)
        return hashlib.sha256(pd.util.hash_pandas_object(df, index=False).values.tobytes()).hexdigest()
    return sha256_file(path)


_SCHEMA = """
CREATE TABLE IF NOT EXISTS runs (
  run_id TEXT PRIMARY KEY,
  subcommand TEXT NOT NULL,
  config_json TEXT NOT NULL,
  config_sha256 TEXT NOT NULL,
  version TEXT NOT NULL,
  started_at TEXT NOT NULL,
  ended_at TEXT,
  duration_ms INTEGER,
  status TEXT DEFAULT 'running',
  error_msg TEXT
);
CREATE TABLE IF NOT EXISTS artifacts (
  run_id TEXT NOT NULL,
  kind TEXT NOT NULL,
  path TEXT NOT NULL,
  sha256 TEXT,
  bytes INTEGER,
  rows INTEGER,
  created_at TEXT NOT NULL,
  PRIMARY KEY (run_id, path)
);
CREATE TABLE IF NOT EXISTS diffs (
  run_id TEXT NOT NULL,
  kind TEXT NOT NULL,
  path TEXT NOT NULL,
  compare_to_run_id TEXT,
  diff_status TEXT NOT NULL,
  diff_json TEXT,
  created_at TEXT NOT NULL,
  PRIMARY KEY (run_id, path)
);
CREATE INDEX IF NOT EXISTS runs_by_config ON runs(config_sha256, status, started_at);
"""


@dataclass
class RunInfo:
    run_id: str
    started_at: str
    subcommand: str
    config_sha256: str


class RegistryDB:
    """SQLite registry of runs, their artifacts and artifact diffs.

    Every run has an ID and a config hash; every artifact has a content hash.
    Re-running an identical config must reproduce identical artifacts, so a
    'changed' diff against the last successful run of that config flags a
    reproducibility regression.
    """

    def __init__(self, db_path: str):
        self.db_path = str(db_path)
        Path(self.db_path).parent.mkdir(parents=True, exist_ok=True)
        self._conn = sqlite3.connect(self.db_path)
        self._conn.row_factory = sqlite3.Row
        self._conn.executescript(_SCHEMA)

    def close(self) -> None:
        self._conn.close()

    def __enter__(self) -> "RegistryDB":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    def _write(self, sql: str, params: tuple) -> None:
        with self._conn:
            self._conn.execute(sql, params)

    # runs
    def start_run(self, subcommand: str, config: dict[str, Any]) -> RunInfo:
        info = RunInfo(str(uuid.uuid4()), utc_now().isoformat(), subcommand, config_hash(config))
        self._write(
            "INSERT INTO runs(run_id, subcommand, config_json, config_sha256, version, started_at) VALUES(?,?,?,?,?,?)",
            (info.run_id, subcommand, json.dumps(config, sort_keys=True, default=str), info.config_sha256, __version__, info.started_at),
        )
        return info

    def finalize_run(self, run_id: str, status: str = "ok", duration_ms: Optional[int] = None, error_msg: Optional[str] = None) -> None:
        self._write(
            "UPDATE runs SET ended_at=?, status=?, duration_ms=?, error_msg=? WHERE run_id=?",
            (utc_now().isoformat(), status, duration_ms, error_msg, run_id),
        )

    def get_run(self, run_id: str) -> Optional[sqlite3.Row]:
        return self._conn.execute("SELECT * FROM runs WHERE run_id=?", (run_id,)).fetchone()

    # artifacts
    def log_artifact(self, run_id: str, kind: str, path: str, rows: Optional[int] = None) -> Optional[str]:
        p = str(path)
        digest = content_hash(p) if os.path.exists(p) else None
        self._write(
            "INSERT OR REPLACE INTO artifacts(run_id, kind, path, sha256, bytes, rows, created_at) VALUES(?,?,?,?,?,?,?)",
            (run_id, kind, p, digest, file_size(p), rows, utc_now().isoformat()),
        )
        return digest

    def previous_artifact(self, run: RunInfo, kind: str, name: str) -> tuple[Optional[str], Optional[str]]:
        """(run_id, sha256) of the newest artifact named ``name`` from another successful run of the same config."""
        rows = self._conn.execute(
            """
            SELECT a.run_id, a.sha256, a.path
            FROM artifacts a JOIN runs r ON r.run_id = a.run_id
            WHERE r.config_sha256=? AND r.status='ok' AND a.kind=? AND a.run_id<>?
            ORDER BY r.started_at DESC
            """,
            (run.config_sha256, kind, run.run_id),
        )
        for row in rows:
            if Path(row["path"]).name == name:
                return row["run_id"], row["sha256"]
        return None, None

    # diffs
    def record_artifact(self, run: RunInfo, kind: str, path: str, rows: Optional[int] = None) -> str:
        """Log an artifact and diff it against the last successful run of the same config.

        Returns the diff status: 'new', 'no_change' or 'changed'.
        """
        digest = self.log_artifact(run.run_id, kind, path, rows=rows)
        prev_run, prev_digest = self.previous_artifact(run, kind, Path(path).name)
        if prev_digest is None:
            status = "new"
        else:
            status = "no_change" if prev_digest == digest else "changed"
        self._write(
            "INSERT OR REPLACE INTO diffs(run_id, kind, path, compare_to_run_id, diff_status, diff_json, created_at) VALUES(?,?,?,?,?,?,?)",
            (
                run.run_id,
                kind,
                str(path),
                prev_run,
                status,
                json.dumps({"sha256": digest, "previous_sha256": prev_digest}),
                utc_now().isoformat(),
            ),
        )
        return status

    def diffs_for_run(self, run_id: str) -> list[sqlite3.Row]:
        return self._conn.execute("SELECT * FROM diffs WHERE run_id=? ORDER BY path", (run_id,)).fetchall()


class Timer:
    def __init__(self):
        self.t0 = time.perf_counter()

    def ms(self) -> int:
        return int((time.perf_counter() - self.t0) * 1000)
