"""Excel workbook for the beta table and its per-code class breakdowns."""

from __future__ import annotations

import math
import re
from pathlib import Path
from typing import Iterable

import pandas as pd
from openpyxl import Workbook
from openpyxl.styles import Alignment, Font, PatternFill
from openpyxl.utils import get_column_letter
from openpyxl.utils.dataframe import dataframe_to_rows
from openpyxl.worksheet.worksheet import Worksheet

from surface_beta.enumeration.table import BetaTable

HEADER_FILL = PatternFill("solid", fgColor="1F4E79")
HEADER_FONT = Font(color="FFFFFF", bold=True)
BETA_FONT = Font(bold=True)

# columns kept visible while scrolling the class columns
_KEY_COLUMNS = {"code", "j", "class", "code_id", "decoder"}
_INVALID_SHEET_CHARS = re.compile(r"[\[\]:*?/\\]")


def sheet_title(name: str) -> str:
    # Excel: at most 31 chars, none of []:*?/\
    cleaned = " ".join(_INVALID_SHEET_CHARS.sub(" ", name).split())
    return cleaned[:31] or "Sheet"


def _cell_value(v):
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return None
    return v


def _fill_sheet(ws: Worksheet, df: pd.DataFrame, digits: int) -> None:
    rows = dataframe_to_rows(df, index=False, header=True)
    for r in rows:
        # class columns absent at a weight stay blank
        ws.append([_cell_value(v) for v in r])

    number_format = "0." + "0" * digits
    widths = [len(str(c)) for c in df.columns]
    for i, col in enumerate(df.columns, start=1):
        is_beta = str(col).startswith("1-beta")
        for cell in ws.iter_rows(min_row=2, min_col=i, max_col=i):
            c = cell[0]
            if isinstance(c.value, float):
                c.number_format = number_format
                widths[i - 1] = max(widths[i - 1], digits + 2)
            elif c.value is not None:
                widths[i - 1] = max(widths[i - 1], len(str(c.value)))
            if is_beta:
                c.font = BETA_FONT
        ws.column_dimensions[get_column_letter(i)].width = min(widths[i - 1] + 2, 40)

    for c in ws[1]:
        c.fill = HEADER_FILL
        c.font = HEADER_FONT
        c.alignment = Alignment(horizontal="center", vertical="center", wrap_text=True)

    keys = sum(1 for col in df.columns if col in _KEY_COLUMNS)
    ws.freeze_panes = ws.cell(row=2, column=keys + 1)
    ws.auto_filter.ref = ws.dimensions


def export_table1_xlsx(
    table1: pd.DataFrame,
    tables: Iterable[BetaTable],
    out_xlsx: str,
    digits: int = 3,
) -> str:
    """Write the beta table on a first sheet, then one class breakdown sheet per code."""
    wb = Workbook()
    wb.remove(wb.active)

    _fill_sheet(wb.create_sheet(sheet_title("betas")), table1, digits)
    for t in tables:
        ws = wb.create_sheet(sheet_title(f"{t.label} {t.decoder}"))
        _fill_sheet(ws, t.to_frame(), digits + 1)

    Path(out_xlsx).parent.mkdir(parents=True, exist_ok=True)
    wb.save(out_xlsx)
    return out_xlsx
