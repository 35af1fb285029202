"""gnuplot data and script emission for curve bundles.

Simulation points (columns ``p_hat``, ``ci_lo``, ``ci_hi``) become error-bar
markers, analytic curves (column ``rho_L``) become lines. Series are taken from
a ``series`` column when present, otherwise from code/decoder/bias columns.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

import pandas as pd

from surface_beta.core.exceptions import ConfigError
from surface_beta.pipelines.writers import read_frame, write_text

logger = logging.getLogger(__name__)

_KEY_COLUMNS = ("code_id", "decoder", "A")


@dataclass
class Series:
    name: str
    kind: str  # 'points' or 'lines'
    frame: pd.DataFrame


@dataclass
class PlotArtifacts:
    script: str
    data: str
    series: int


def frame_series(df: pd.DataFrame) -> list[Series]:
    if df.empty:
        return []
    if "rho" not in df.columns:
        raise ConfigError(f"Curve data needs a 'rho' column, got {list(df.columns)}")
    if "p_hat" in df.columns:
        kind, cols = "points", ["rho", "p_hat", "ci_lo", "ci_hi"]
    elif "rho_L" in df.columns:
        kind, cols = "lines", ["rho", "rho_L"]
    else:
        raise ConfigError("Curve data needs a 'p_hat' or 'rho_L' column")
    missing = [c for c in cols if c not in df.columns]
    if missing:
        raise ConfigError(f"Curve data is missing columns {missing}")

    if "series" in df.columns:
        keys = ["series"]
    else:
        keys = [c for c in _KEY_COLUMNS if c in df.columns]
    if not keys:
        return [Series("data", kind, df[cols].sort_values("rho"))]
    out = []
    for key, part in df.groupby(keys, sort=False):
        key = key if isinstance(key, tuple) else (key,)
        name = " ".join(f"{k}={v}" if k != "series" else str(v) for k, v in zip(keys, key))
        out.append(Series(name, kind, part[cols].sort_values("rho")))
    return out


def _escape(text: str) -> str:
    return text.replace("'", "''")


def emit_gnuplot(
    series: Sequence[Series],
    out_stem: str | Path,
    title: Optional[str] = None,
    uncoded: bool = False,
    xrange: Optional[tuple[float, float]] = None,
    yrange: Optional[tuple[float, float]] = None,
    verticals: Sequence[tuple[float, str]] = (),
) -> PlotArtifacts:
    """Write ``<stem>.dat`` (one gnuplot index block per series) and ``<stem>.gp``."""
    stem = Path(out_stem)
    data_path = stem.with_suffix(".dat")
    script_path = stem.with_suffix(".gp")

    blocks = []
    for s in series:
        rows = [f"# {s.name}"]
        rows += [" ".join(f"{v:.10g}" for v in rec) for rec in s.frame.itertuples(index=False)]
        blocks.append("\n".join(rows))
    write_text("\n\n\n".join(blocks) + ("\n" if blocks else ""), data_path)

    lines = [
        f"# {title or stem.name}",
        "set terminal pdfcairo enhanced size 5in,4in",
        f"set output '{_escape(stem.name)}.pdf'",
        "set logscale xy",
        "set format y '10^{%L}'",
        "set xlabel '{/Symbol r}'",
        "set ylabel '{/Symbol r}_L'",
        "set key bottom right",
        "set grid",
    ]
    if title:
        lines.append(f"set title '{_escape(title)}'")
    if xrange:
        lines.append(f"set xrange [{xrange[0]:g}:{xrange[1]:g}]")
    if yrange:
        lines.append(f"set yrange [{yrange[0]:g}:{yrange[1]:g}]")
    for x, label in verticals:
        # threshold markers
        lines.append(f"set arrow from {x:.6g}, graph 0 to {x:.6g}, graph 1 nohead dt 3 # {label}")

    plots = []
    for i, s in enumerate(series):
        name = _escape(s.name)
        if s.kind == "points":
            plots.append(f"'{data_path.name}' index {i} using 1:2:3:4 with yerrorbars pt 7 title '{name}'")
        else:
            plots.append(f"'{data_path.name}' index {i} using 1:2 with lines lw 2 title '{name}'")
    if uncoded and plots:
        plots.append("x with lines dt 2 lc 'black' title 'uncoded'")
    if plots:
        lines.append("plot " + ", \\\n     ".join(plots))
    else:
        lines.append("# no data series")
        logger.warning("No curve data for %s; emitted a script without plot lines", stem.name)
    write_text("\n".join(lines) + "\n", script_path)
    return PlotArtifacts(str(script_path), str(data_path), len(series))


def plot_emit(
    paths: Iterable[str | Path],
    out_stem: str | Path,
    title: Optional[str] = None,
    uncoded: bool = False,
) -> PlotArtifacts:
    """Overlay every series of the given CSV/Parquet/JSON curve files in one log-log script."""
    series: list[Series] = []
    for p in paths:
        df, _ = read_frame(p)
        series += frame_series(df)
    return emit_gnuplot(series, out_stem, title=title, uncoded=uncoded)
