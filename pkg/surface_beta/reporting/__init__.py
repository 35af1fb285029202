from .excel_export import export_table1_xlsx
from .figures import TARGETS, ReproduceOptions, reproduce
from .plotting import PlotArtifacts, emit_gnuplot, frame_series, plot_emit

__all__ = [
    "PlotArtifacts",
    "ReproduceOptions",
    "TARGETS",
    "emit_gnuplot",
    "export_table1_xlsx",
    "frame_series",
    "plot_emit",
    "reproduce",
]
