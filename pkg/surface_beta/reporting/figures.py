"""One-shot reproduction targets: the beta table and the figure curve bundles.

Each target writes CSV artifacts (with provenance) into ``out_dir`` and, for
figures, a gnuplot script overlaying simulation points and analytic curves.
Curves that a decoder cannot produce for a code are skipped with a warning.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Optional

import numpy as np
import pandas as pd

from surface_beta.core.exceptions import ConfigError, DecoderError, ThresholdNotFoundError
from surface_beta.core.utils import EnumerationConfig, SimConfig
from surface_beta.analysis.formulas import (
    alpha_bound_curve,
    asymptotic_slope_approx,
    logical_error_beta,
    logical_error_beta_z,
)
from surface_beta.analysis.params import PUBLISHED_TABLE1, BetaVector, CodeParams, published_betas
from surface_beta.analysis.threshold import code_effective_threshold_approx, code_effective_threshold_exact
from surface_beta.codes.channels import channel_from_bias
from surface_beta.codes.surface import build_code
from surface_beta.enumeration.classes import beta_z
from surface_beta.enumeration.exact import exact_logical_error_rate
from surface_beta.enumeration.table import BetaTable, beta_row, beta_table, table1_frame
from surface_beta.montecarlo.engine import SimEstimate, estimates_frame, sweep
from surface_beta.pipelines.writers import provenance, write_frame, write_json
from .excel_export import export_table1_xlsx
from .plotting import emit_gnuplot, frame_series

logger = logging.getLogger(__name__)

ML_LABEL = "ML (exact)"

FIG2_RHOS = (0.001, 0.0022, 0.0047, 0.0102, 0.0233, 0.0471, 0.1, 0.2)
FIG4_RHOS = tuple(float(x) for x in np.linspace(0.02, 0.16, 8))
FIG5_RHOS = (0.02, 0.05, 0.1, 0.15, 0.2, 0.3)
ASYM35_RHOS = tuple(float(x) for x in np.geomspace(0.001, 0.1574, 8))

# (d_X, d_Z, weights) enumerated for the table target
TABLE1_CODES = ((3, 3, (2, 3)), (3, 5, (2, 3)), (5, 5, (3,)))


@dataclass
class ReproduceOptions:
    seed: int = 2024
    sim: SimConfig = field(default_factory=SimConfig)
    enumeration: EnumerationConfig = field(default_factory=EnumerationConfig)
    curve_points: int = 60
    enumerate_betas: bool = True

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class Bundle:
    """Frames produced by one target, written under ``<target>_<name>.csv``."""

    frames: dict[str, pd.DataFrame] = field(default_factory=dict)
    plot: Optional[dict] = None


def _curve(series: str, rhos, values) -> pd.DataFrame:
    return pd.DataFrame({"series": series, "rho": [float(r) for r in rhos], "rho_L": [float(v) for v in values]})


def _points(series: str, estimates: list[SimEstimate]) -> pd.DataFrame:
    df = estimates_frame(estimates)
    df.insert(0, "series", series)
    return df


def _simulate_series(series: str, d_X: int, d_Z: int, xzzx: bool, decoder: str, rhos, A: float, opts: ReproduceOptions, stream: int) -> Optional[pd.DataFrame]:
    code = build_code(d_X, d_Z, xzzx=xzzx)
    try:
        # distinct seed per series so curves do not share streams
        est = sweep(code, decoder, rhos, A, opts.sim.trials, opts.seed + 1000 * stream, opts.sim)
    except DecoderError as e:
        logger.warning("Skipping curve %r: %s", series, e)
        return None
    return _points(series, est)


def _a_label(A: float) -> str:
    return "inf" if math.isinf(A) else f"{A:g}"


# ---------- table1 ----------
def build_table1(opts: ReproduceOptions) -> tuple[pd.DataFrame, list[BetaTable]]:
    tables = []
    for d_X, d_Z, weights in TABLE1_CODES:
        code = build_code(d_X, d_Z)
        tables.append(beta_table(code, "mwpm", weights, config=opts.enumeration))
    return table1_frame(tables), tables


# ---------- fig2 ----------
def build_fig2(opts: ReproduceOptions) -> Bundle:
    rhos = np.geomspace(0.001, 0.2, opts.curve_points)
    p13 = CodeParams.from_distances(3, 3)
    p23 = CodeParams.from_distances(3, 5)
    b13 = published_betas("3x3")
    b23 = published_betas("3x5")

    curves = [
        _curve("[[13,1,3]] A=1 approximation", rhos, [logical_error_beta(p13.n, p13.t, r, b13) for r in rhos]),
        _curve("[[13,1,3]] A=1 asymptote", rhos, [asymptotic_slope_approx(p13, r, b13.next_beta) for r in rhos]),
        _curve("[[23,1,3/5]] A=inf approximation", rhos, [logical_error_beta_z(p23.n, p23.t_Z, r, b23) for r in rhos]),
        _curve(
            "[[23,1,3/5]] A=inf asymptote",
            rhos,
            [asymptotic_slope_approx(p23, r, b23.next_beta, A=math.inf) for r in rhos],
        ),
    ]
    points = [
        _simulate_series("[[13,1,3]] A=1 MWPM", 3, 3, False, "mwpm", FIG2_RHOS, 1.0, opts, 0),
        _simulate_series("[[23,1,3/5]] A=inf MWPM", 3, 5, False, "mwpm", FIG2_RHOS, math.inf, opts, 1),
    ]
    return Bundle(
        frames={"curves": pd.concat(curves, ignore_index=True), "points": _concat(points)},
        plot={"title": "Simulation vs approximation", "xrange": (0.001, 0.2), "yrange": (1e-5, 1)},
    )


# ---------- fig3 ----------
def _next_betas(opts: ReproduceOptions) -> dict[str, dict[str, float]]:
    """1 - beta_{t+1} for [[13,1,3]] and [[41,1,5]], 1 - beta^Z_3 for [[23,1,3/5]], by source.

    The published values always come first; enumerated ones are added when
    ``opts.enumerate_betas`` is set.
    """
    out = {
        "published": {
            "3x3": PUBLISHED_TABLE1["3x3"][2]["1-beta_j"],
            "5x5": PUBLISHED_TABLE1["5x5"][3]["1-beta_j"],
            "3x5": PUBLISHED_TABLE1["3x5"][3]["1-beta_j^Z"],
        }
    }
    if opts.enumerate_betas:
        out["enumerated"] = {
            "3x3": beta_row(build_code(3, 3), "mwpm", 2, config=opts.enumeration).one_minus_beta,
            "5x5": beta_row(build_code(5, 5), "mwpm", 3, config=opts.enumeration).one_minus_beta,
            "3x5": beta_z(build_code(3, 5), "mwpm", 3, config=opts.enumeration),
        }
    return out


def _with_next(betas: BetaVector, one_minus: float) -> BetaVector:
    return BetaVector(betas.start, (1.0 - one_minus,) + betas.values[1:])


def _fig3_models(miss: dict[str, float]) -> dict[str, tuple[Callable[[float], float], int, int, float]]:
    p13 = CodeParams.from_distances(3, 3)
    p41 = CodeParams.from_distances(5, 5)
    p23 = CodeParams.from_distances(3, 5)
    b13 = _with_next(published_betas("3x3"), miss["3x3"])
    b41 = BetaVector(3, (1.0 - miss["5x5"],))
    b23 = _with_next(published_betas("3x5"), miss["3x5"])
    return {
        "[[13,1,3]] A=1": (lambda r: logical_error_beta(p13.n, p13.t, r, b13), p13.n, p13.t, miss["3x3"]),
        "[[41,1,5]] A=1": (lambda r: logical_error_beta(p41.n, p41.t, r, b41), p41.n, p41.t, miss["5x5"]),
        "[[23,1,3/5]] A=inf": (
            lambda r: logical_error_beta_z(p23.n, p23.t_Z, r, b23),
            p23.n,
            p23.e_g + p23.e_Z,
            miss["3x5"],
        ),
    }


def build_fig3(opts: ReproduceOptions) -> Bundle:
    rhos = np.geomspace(0.001, 0.1, opts.curve_points)
    sources = _next_betas(opts)
    published = _fig3_models(sources["published"])

    curves = [_curve(name, rhos, [f(float(r)) for r in rhos]) for name, (f, *_rest) in published.items()]
    curves.append(_curve("uncoded", rhos, rhos))
    curves.append(_curve("uncoded / 10", rhos, rhos / 10))

    rows = []
    for source, miss in sources.items():
        for name, (f, n, t, one_minus) in _fig3_models(miss).items():
            for gamma in (0, 1):
                try:
                    exact = code_effective_threshold_exact(f, gamma)
                except ThresholdNotFoundError as e:
                    logger.warning("No exact threshold for %s (gamma=%d, %s betas): %s", name, gamma, source, e)
                    exact = float("nan")
                approx = code_effective_threshold_approx(n, t, 1.0 - one_minus, gamma)
                rows.append(
                    {
                        "series": name,
                        "beta_source": source,
                        "gamma": gamma,
                        "one_minus_beta_next": one_minus,
                        "t": t,
                        "exact": exact,
                        "approx": approx,
                    }
                )
    thresholds = pd.DataFrame(rows)
    return Bundle(
        frames={"curves": pd.concat(curves, ignore_index=True), "thresholds": thresholds},
        plot={
            "title": "Code-effective threshold (published betas)",
            "xrange": (0.001, 0.1),
            "yrange": (1e-5, 1),
            "verticals": [
                (r["approx"], f"{r['series']} gamma={r['gamma']}") for r in rows if r["beta_source"] == "published"
            ],
        },
    )


# ---------- fig4 ----------
def build_fig4(opts: ReproduceOptions) -> Bundle:
    points = []
    stream = 0
    for A in (1.0, 10.0):
        for d_X, d_Z in ((3, 3), (5, 5), (3, 5), (3, 7)):
            label = build_code(d_X, d_Z).label
            points.append(_simulate_series(f"{label} A={_a_label(A)} MWPM", d_X, d_Z, False, "mwpm", FIG4_RHOS, A, opts, stream))
            stream += 1
    return Bundle(
        frames={"points": _concat(points)},
        plot={"title": "Symmetric and asymmetric codes, A in {1, 10}", "xrange": (0.02, 0.16), "yrange": (1e-4, 1)},
    )


# ---------- fig5 ----------
def build_fig5(opts: ReproduceOptions) -> Bundle:
    points = []
    curves = []
    stream = 0
    for A in (1.0, math.inf):
        tag = f"A={_a_label(A)}"
        for xzzx, decoder in ((False, "mwpm"), (False, "ml"), (True, "ml")):
            family = "XZZX" if xzzx else "surface"
            dec_label = ML_LABEL if decoder == "ml" else "MWPM"
            series = f"{family} {dec_label} {tag}"
            points.append(_simulate_series(series, 3, 3, xzzx, decoder, FIG5_RHOS, A, opts, stream))
            stream += 1
            code = build_code(3, 3, xzzx=xzzx)
            values = [exact_logical_error_rate(code, channel_from_bias(r, A), decoder) for r in FIG5_RHOS]
            curves.append(_curve(f"{series} exact", FIG5_RHOS, values))
    return Bundle(
        frames={"points": _concat(points), "curves": pd.concat(curves, ignore_index=True)},
        plot={"title": "MWPM vs ML, surface and XZZX [[13,1,3]]", "xrange": (0.02, 0.32), "yrange": (5e-4, 1)},
    )


# ---------- fig-asym35 ----------
def build_fig_asym35(opts: ReproduceOptions) -> Bundle:
    rhos = np.geomspace(0.001, 0.1574, opts.curve_points)
    params = CodeParams.from_distances(3, 5)
    curves = []
    points = []
    for stream, A in enumerate((1.0, 10.0, 100.0)):
        tag = f"A={_a_label(A)}"
        curves.append(_curve(f"[[23,1,3/5]] {tag} bound", rhos, alpha_bound_curve(params, rhos, A)))
        points.append(_simulate_series(f"[[23,1,3/5]] {tag} MWPM", 3, 5, False, "mwpm", ASYM35_RHOS, A, opts, stream))
    return Bundle(
        frames={"curves": pd.concat(curves, ignore_index=True), "points": _concat(points)},
        plot={"title": "[[23,1,3/5]]: bound vs MWPM", "xrange": (0.001, 0.1574), "yrange": (1e-6, 1)},
    )


def _concat(frames: list[Optional[pd.DataFrame]]) -> pd.DataFrame:
    present = [f for f in frames if f is not None]
    return pd.concat(present, ignore_index=True) if present else pd.DataFrame()


FIGURES: dict[str, Callable[[ReproduceOptions], Bundle]] = {
    "fig2": build_fig2,
    "fig3": build_fig3,
    "fig4": build_fig4,
    "fig5": build_fig5,
    "fig-asym35": build_fig_asym35,
}
TARGETS = ("table1", *FIGURES)


def reproduce(target: str, out_dir: str | Path, opts: Optional[ReproduceOptions] = None) -> list[str]:
    """Run one target and return the written paths."""
    if target not in TARGETS:
        raise ConfigError(f"Unknown target {target!r}; expected one of {list(TARGETS)}")
    opts = opts or ReproduceOptions()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    prov = provenance("reproduce", {"target": target, **opts.as_dict()})
    if target in ("fig5",):
        prov["note"] = f"'{ML_LABEL}' curves use the exact maximum-likelihood coset decoder"
    logger.info("Reproducing %s into %s", target, out)

    written: list[str] = []
    if target == "table1":
        frame, tables = build_table1(opts)
        written.append(write_frame(frame, out / "table1.csv", prov))
        for t in tables:
            written.append(write_json(t.to_dict(), out / f"betas_{t.code_id}.json", prov))
        written.append(export_table1_xlsx(frame.round(3), tables, str(out / "table1.xlsx")))
        return written

    bundle = FIGURES[target](opts)
    series = []
    for name, df in bundle.frames.items():
        written.append(write_frame(df, out / f"{target}_{name}.csv", prov))
        if name in ("curves", "points"):
            series += frame_series(df)
    plot = bundle.plot or {}
    art = emit_gnuplot(
        series,
        out / target,
        title=plot.get("title"),
        uncoded=target == "fig2",
        xrange=plot.get("xrange"),
        yrange=plot.get("yrange"),
        verticals=plot.get("verticals", ()),
    )
    written += [art.data, art.script]
    return written
