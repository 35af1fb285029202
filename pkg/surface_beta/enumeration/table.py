"""Beta rows and tables built from exhaustive class enumeration.

A row aggregates all classes of one weight j by combination count, so
1 - beta_j is the size-weighted mean of the class fractions. Tables persist
as JSON and flatten to one row per class or one row per weight.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

import pandas as pd

from surface_beta import __version__
from surface_beta.core.utils import EnumerationConfig
from surface_beta.codes.channels import ChannelModel
from surface_beta.codes.surface import SurfaceCode
from surface_beta.decoders.judge import DecoderName
from .classes import ClassResult, ErrorClass, check_budget, classes_of_weight, enumerate_class

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BetaRow:
    """All classes of one weight j, aggregated by combination count."""

    j: int
    classes: tuple[ClassResult, ...]

    @property
    def total(self) -> int:
        return sum(c.total for c in self.classes)

    @property
    def failures(self) -> int:
        return sum(c.failures for c in self.classes)

    @property
    def one_minus_beta(self) -> float:
        return self.failures / self.total if self.total else 0.0

    @property
    def beta(self) -> float:
        return 1.0 - self.one_minus_beta

    @property
    def one_minus_beta_z(self) -> float:
        return self.by_label("Z" * self.j).fraction

    def by_label(self, label: str) -> ClassResult:
        want = ErrorClass.from_label(label)
        for c in self.classes:
            if c.error_class == want:
                return c
        raise KeyError(label)


@dataclass
class BetaTable:
    code_id: str
    label: str
    n: int
    decoder: str
    rows: list[BetaRow] = field(default_factory=list)
    channel: Optional[dict] = None

    def row(self, j: int) -> BetaRow:
        for r in self.rows:
            if r.j == j:
                return r
        raise KeyError(f"weight {j} not enumerated for {self.label}")

    @property
    def weights(self) -> list[int]:
        return [r.j for r in self.rows]

    def betas(self, start: int) -> list[float]:
        """beta_start, beta_start+1, ... over consecutive enumerated weights."""
        out = []
        j = start
        while j in self.weights:
            out.append(self.row(j).beta)
            j += 1
        return out

    def betas_z(self, start: int) -> list[float]:
        out = []
        j = start
        while j in self.weights:
            out.append(1.0 - self.row(j).one_minus_beta_z)
            j += 1
        return out

    def to_frame(self) -> pd.DataFrame:
        records = []
        for r in self.rows:
            for c in r.classes:
                rec = {"code": self.label, "decoder": self.decoder, "j": r.j}
                rec.update(c.as_dict())
                records.append(rec)
        return pd.DataFrame(records)

    def to_dict(self) -> dict:
        return {
            "code_id": self.code_id,
            "label": self.label,
            "n": self.n,
            "decoder": self.decoder,
            "channel": self.channel,
            "version": __version__,
            "rows": [
                {
                    "j": r.j,
                    "one_minus_beta": r.one_minus_beta,
                    "one_minus_beta_z": r.one_minus_beta_z,
                    "classes": [c.as_dict() for c in r.classes],
                }
                for r in self.rows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: dict) -> "BetaTable":
        rows = []
        for r in data.get("rows") or []:
            classes = tuple(
                ClassResult(ErrorClass(int(c["n_x"]), int(c["n_z"]), int(c["n_y"])), int(c["combinations"]), int(c["failures"]))
                for c in r["classes"]
            )
            rows.append(BetaRow(int(r["j"]), classes))
        return cls(
            code_id=data["code_id"],
            label=data["label"],
            n=int(data["n"]),
            decoder=data["decoder"],
            rows=rows,
            channel=data.get("channel"),
        )

    @classmethod
    def from_json(cls, text: str) -> "BetaTable":
        return cls.from_dict(json.loads(text))


def beta_row(
    code: SurfaceCode,
    decoder: "str | DecoderName",
    j: int,
    channel: Optional[ChannelModel] = None,
    config: Optional[EnumerationConfig] = None,
) -> BetaRow:
    """1 - beta_j = sum(c_i p_i) / sum(c_i) over the classes of weight ``j``."""
    config = config or EnumerationConfig()
    check_budget(math.comb(code.n, j) * 3**j, config, f"Weight {j} on {code.label}")
    classes = tuple(enumerate_class(code, decoder, cls, channel, config) for cls in classes_of_weight(j))
    row = BetaRow(j, classes)
    logger.info("%s weight %d: 1-beta = %.4f, 1-beta_Z = %.4f", code.label, j, row.one_minus_beta, row.one_minus_beta_z)
    return row


def beta_table(
    code: SurfaceCode,
    decoder: "str | DecoderName",
    weights: Iterable[int],
    channel: Optional[ChannelModel] = None,
    config: Optional[EnumerationConfig] = None,
) -> BetaTable:
    config = config or EnumerationConfig()
    ws = sorted(set(weights))
    check_budget(sum(math.comb(code.n, j) * 3**j for j in ws), config, f"Weights {ws} on {code.label}")
    table = BetaTable(
        code_id=code.code_id,
        label=code.label,
        n=code.n,
        decoder=DecoderName.parse(decoder).value,
        channel=channel.as_dict() if channel is not None else None,
    )
    for j in ws:
        table.rows.append(beta_row(code, decoder, j, channel, config))
    return table


def table1_frame(tables: Iterable[BetaTable], digits: Optional[int] = None) -> pd.DataFrame:
    """One row per (code, weight): 1-beta_j, 1-beta_j^(Z), then one column per class."""
    records = []
    for t in tables:
        for r in t.rows:
            rec = {"code": t.label, "j": r.j, "1-beta_j": r.one_minus_beta, "1-beta_j^Z": r.one_minus_beta_z}
            for c in r.classes:
                rec[c.error_class.label] = c.fraction
            records.append(rec)
    df = pd.DataFrame(records)
    if digits is not None and not df.empty:
        num = df.columns.drop(["code", "j"])
        df[num] = df[num].round(digits)
    return df
