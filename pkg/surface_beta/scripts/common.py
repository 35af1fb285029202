"""Option parsing and run bookkeeping shared by the subcommands."""

from __future__ import annotations

import functools
import logging
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator, Optional

import click

from surface_beta.core.exceptions import BudgetExceededError, ConfigError, DecoderError, SurfaceBetaError
from surface_beta.core.utils import default_registry_db, parse_bias, parse_code_spec
from surface_beta.analysis.params import BetaVector, published_betas
from surface_beta.codes.channels import ChannelModel, channel_from_bias
from surface_beta.codes.surface import SurfaceCode, build_code
from surface_beta.enumeration.table import BetaTable
from surface_beta.registry.sqlite_registry import RegistryDB, RunInfo, Timer

EXIT_FAIL = 1
EXIT_BUDGET = 3


def setup_logging(debug: bool = False, quiet: bool = False) -> None:
    level = logging.DEBUG if debug else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def handle_errors(fn: Callable) -> Callable:
    """Map library errors to exit codes: 2 for bad input or an unsupported decoder, 3 for budget, 1 otherwise."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except BudgetExceededError as e:
            click.echo(f"[FAIL] {e} (rerun with --allow-large)", err=True)
            raise click.exceptions.Exit(EXIT_BUDGET) from e
        except (ValueError, DecoderError) as e:
            raise click.UsageError(str(e)) from e
        except SurfaceBetaError as e:
            click.echo(f"[FAIL] {type(e).__name__}: {e}", err=True)
            raise click.exceptions.Exit(EXIT_FAIL) from e

    return wrapper


def registry_option(fn: Callable) -> Callable:
    """`--registry-db [PATH]`; without PATH the registry goes to $SURFACE_BETA_REGISTRY or its default."""
    return click.option(
        "--registry-db",
        is_flag=False,
        flag_value=default_registry_db(),
        default=None,
        help="Record the run in a SQLite registry (opt-in).",
    )(fn)


def load_code(code_spec: str, xzzx: bool = False) -> SurfaceCode:
    d_X, d_Z = parse_code_spec(code_spec)
    return build_code(d_X, d_Z, xzzx=xzzx)


def resolve_channel(
    rho: Optional[float],
    bias: Optional[str],
    px: Optional[float],
    py: Optional[float],
    pz: Optional[float],
) -> Optional[ChannelModel]:
    """``--rho/--bias`` or explicit ``--px/--py/--pz`` (not both); None when neither is given."""
    explicit = any(v is not None for v in (px, py, pz))
    if explicit and rho is not None:
        raise ConfigError("Give either --rho/--bias or --px/--py/--pz, not both")
    if explicit:
        return ChannelModel(px or 0.0, py or 0.0, pz or 0.0)
    if rho is None:
        return None
    return channel_from_bias(rho, parse_bias(bias))


def parse_floats(text: str) -> list[float]:
    try:
        return [float(p) for p in text.replace(";", ",").split(",") if p.strip()]
    except ValueError as e:
        raise ConfigError(f"Invalid number list {text!r}") from e


def resolve_betas(
    code: SurfaceCode,
    start: int,
    betas: Optional[str],
    beta_start: Optional[int],
    published: bool,
    from_table: Optional[str],
    phase_flip: bool = False,
) -> Optional[BetaVector]:
    """beta values from exactly one source: a list, the published set, or an enumerated table."""
    sources = [s for s in (betas, from_table) if s] + (["published"] if published else [])
    if len(sources) > 1:
        raise ConfigError("Give only one of --betas, --published, --from-table")
    if published:
        return published_betas(code.code_id)
    if from_table:
        table = BetaTable.from_json(Path(from_table).read_text(encoding="utf-8"))
        values = table.betas_z(start) if phase_flip else table.betas(start)
        if not values:
            raise ConfigError(f"{from_table} has no enumerated weight {start}; weights: {table.weights}")
        return BetaVector.of(start, values)
    if betas:
        return BetaVector.of(beta_start or start, parse_floats(betas))
    return None


def beta_source(betas: Optional[str], published: bool, from_table: Optional[str]) -> Optional[str]:
    """Where resolve_betas took its values from: "published", "table:<path>" or "list"."""
    if published:
        return "published"
    if from_table:
        return f"table:{from_table}"
    return "list" if betas else None


@dataclass
class RunTracker:
    reg: Optional[RegistryDB] = None
    run: Optional[RunInfo] = None

    def record(self, kind: str, path: str, rows: Optional[int] = None) -> None:
        if self.reg is None or self.run is None:
            click.echo(f"[OK] {kind} -> {path}")
            return
        status = self.reg.record_artifact(self.run, kind, path, rows=rows)
        click.echo(f"[OK] {kind} -> {path} (diff={status})")
        if status == "changed":
            click.echo(f"[WARN] {Path(path).name} differs from the last run with the same config")


@contextmanager
def tracked_run(registry_db: Optional[str], subcommand: str, config: dict) -> Iterator[RunTracker]:
    """Register the run when ``registry_db`` is set; finalize it as ok or fail."""
    if not registry_db:
        yield RunTracker()
        return
    t = Timer()
    with RegistryDB(registry_db) as reg:
        run = reg.start_run(subcommand, config)
        click.echo(f"[INFO] run_id={run.run_id} registry={registry_db}")
        try:
            yield RunTracker(reg, run)
        except Exception as e:
            reg.finalize_run(run.run_id, status="fail", duration_ms=t.ms(), error_msg=f"{type(e).__name__}: {e}")
            raise
        reg.finalize_run(run.run_id, status="ok", duration_ms=t.ms())
        click.echo(f"[DONE] run_id={run.run_id} duration_ms={t.ms()}")
