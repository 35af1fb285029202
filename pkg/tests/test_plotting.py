import pandas as pd
import pytest

from surface_beta.core.exceptions import ConfigError
from surface_beta.pipelines.writers import write_frame
from surface_beta.reporting.plotting import emit_gnuplot, frame_series, plot_emit


def points():
    return pd.DataFrame(
        {
            "rho": [0.02, 0.01, 0.02],
            "A": [1.0, 1.0, 10.0],
            "code_id": ["3x3"] * 3,
            "decoder": ["mwpm"] * 3,
            "p_hat": [0.01, 0.002, 0.008],
            "ci_lo": [0.009, 0.001, 0.007],
            "ci_hi": [0.011, 0.003, 0.009],
        }
    )


def test_frame_series_groups_and_sorts():
    series = frame_series(points())
    assert [s.kind for s in series] == ["points", "points"]
    assert series[0].name == "code_id=3x3 decoder=mwpm A=1.0"
    assert list(series[0].frame["rho"]) == [0.01, 0.02]

    curves = frame_series(pd.DataFrame({"series": ["a", "a", "b"], "rho": [0.1, 0.2, 0.1], "rho_L": [0.01, 0.04, 0.02]}))
    assert [(s.name, s.kind, len(s.frame)) for s in curves] == [("a", "lines", 2), ("b", "lines", 1)]
    assert frame_series(pd.DataFrame()) == []


def test_frame_series_rejects_unknown_layouts():
    with pytest.raises(ConfigError):
        frame_series(pd.DataFrame({"x": [1]}))
    with pytest.raises(ConfigError):
        frame_series(pd.DataFrame({"rho": [0.1], "value": [1]}))
    with pytest.raises(ConfigError):
        frame_series(pd.DataFrame({"rho": [0.1], "p_hat": [0.1]}))


def test_emit_overlays_points_and_lines(tmp_path):
    curve = pd.DataFrame({"series": ["approx"] * 2, "rho": [0.01, 0.02], "rho_L": [0.001, 0.004]})
    art = emit_gnuplot(frame_series(points()) + frame_series(curve), tmp_path / "fig", title="demo", uncoded=True, verticals=[(0.05, "thr")])
    script = open(art.script, encoding="utf-8").read()
    assert "set logscale xy" in script
    assert script.count("with yerrorbars") == 2
    assert script.count("with lines lw 2") == 1
    assert "title 'uncoded'" in script
    assert "set arrow from 0.05" in script
    data = open(art.data, encoding="utf-8").read()
    assert data.count("# ") == 3
    assert art.series == 3


def test_plot_emit_on_files(tmp_path):
    a = write_frame(points(), tmp_path / "a.csv", {"tool": "surface-beta"})
    b = tmp_path / "empty.csv"
    b.write_text("", encoding="utf-8")
    art = plot_emit([a, b], tmp_path / "out")
    assert art.series == 2

    empty = plot_emit([b], tmp_path / "nothing")
    assert empty.series == 0
    assert "# no data series" in open(empty.script, encoding="utf-8").read()
    assert "uncoded" not in open(empty.script, encoding="utf-8").read()
