"""Tabular and JSON artifacts with a provenance record.

CSV files start with one ``# provenance: {...}`` comment line, JSON files carry
a top-level ``provenance`` object and Parquet files keep it in the schema
metadata.
"""

from __future__ import annotations

import io
import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

import pandas as pd
import pyarrow as pa
import pyarrow.parquet as pq

from surface_beta import __version__
from surface_beta.core.exceptions import ConfigError

PROVENANCE_PREFIX = "# provenance: "


def provenance(subcommand: str, config: dict[str, Any]) -> dict[str, Any]:
    return {
        "tool": "surface-beta",
        "version": __version__,
        "subcommand": subcommand,
        "config": config,
        "created_at": datetime.now(timezone.utc).isoformat(),
    }


def _prepare(path: str | Path) -> Path:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    return out


def write_frame(df: pd.DataFrame, path: str | Path, prov: Optional[dict] = None) -> str:
    """Write ``df`` as CSV, JSON or Parquet depending on the suffix."""
    out = _prepare(path)
    suffix = out.suffix.lower()
    if suffix == ".parquet":
        table = pa.Table.from_pandas(df, preserve_index=False)
        meta = dict(table.schema.metadata or {})
        if prov is not None:
            meta[b"provenance"] = json.dumps(prov, default=str).encode("utf-8")
        pq.write_table(table.replace_schema_metadata(meta), out)
    elif suffix == ".json":
        write_json({"rows": json.loads(df.to_json(orient="records"))}, out, prov)
    else:
        with open(out, "w", encoding="utf-8", newline="") as f:
            if prov is not None:
                f.write(PROVENANCE_PREFIX + json.dumps(prov, default=str) + "\n")
            df.to_csv(f, index=False)
    return str(out)


def write_json(payload: dict, path: str | Path, prov: Optional[dict] = None) -> str:
    out = _prepare(path)
    body = dict(payload)
    if prov is not None:
        body = {"provenance": prov, **body}
    out.write_text(json.dumps(body, indent=2, ensure_ascii=False, default=str), encoding="utf-8")
    return str(out)


def write_text(text: str, path: str | Path) -> str:
    out = _prepare(path)
    out.write_text(text, encoding="utf-8")
    return str(out)


def read_points_csv(path: str | Path) -> tuple[pd.DataFrame, Optional[dict]]:
    """Read a CSV written by :func:`write_frame`; returns (frame, provenance or None)."""
    p = Path(path)
    if not p.exists():
        raise ConfigError(f"No such file: {p}")
    text = p.read_text(encoding="utf-8")
    prov = None
    if text.startswith(PROVENANCE_PREFIX):
        first, _, text = text.partition("\n")
        try:
            prov = json.loads(first[len(PROVENANCE_PREFIX):])
        except json.JSONDecodeError as e:
            raise ConfigError(f"Malformed provenance line in {p}") from e
    if not text.strip():
        return pd.DataFrame(), prov
    try:
        df = pd.read_csv(io.StringIO(text))
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise ConfigError(f"Malformed CSV {p}: {e}") from e
    return df, prov


def read_frame(path: str | Path) -> tuple[pd.DataFrame, Optional[dict]]:
    p = Path(path)
    if p.suffix.lower() == ".parquet":
        table = pq.read_table(p)
        raw = (table.schema.metadata or {}).get(b"provenance")
        return table.to_pandas(), json.loads(raw) if raw else None
    if p.suffix.lower() == ".json":
        data = json.loads(p.read_text(encoding="utf-8"))
        return pd.DataFrame(data.get("rows") or []), data.get("provenance")
    return read_points_csv(p)
