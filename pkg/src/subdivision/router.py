from pathlib import Path
from typing import List, Optional

import typer

from src.config.subdivision import settings
from src.container import get_container
from src.handlers import exit_with, handle_errors
from src.libs.artifacts import dump_json, parse_interval, read_model, read_samples, write_csv
from src.subdivision.dto import DimensionReportDTO, ScheduleDTO, SupportDTO
from src.subdivision.entity import SampledFunction

router = typer.Typer()


@router.command("phi")
@handle_errors
def phi(
    schedule: Path = typer.Option(..., "--schedule", help="schedule JSON"),
    levels: int = typer.Option(10, "--levels", min=1, max=settings.max_levels, help="cascade levels r"),
    out: Optional[Path] = typer.Option(None, "--out", help="CSV path, stdout when omitted"),
    extrapolate: bool = typer.Option(False, "--extrapolate", help="Richardson-extrapolate the cascade"),
):
    """Writes level-r cascade samples of the basic limit function φ as t,re,im CSV."""
    subdivision_service = get_container().subdivision_service
    entity = read_model(schedule, ScheduleDTO).to_entity()
    if extrapolate:
        samples = subdivision_service.refine_limit(entity, levels)
    else:
        samples = subdivision_service.basic_limit(entity, levels)
    write_csv(samples, out)


@router.command("run")
@handle_errors
def run(
    schedule: Path = typer.Option(..., "--schedule", help="schedule JSON"),
    start: Optional[Path] = typer.Option(None, "--start", help="t,re,im CSV of integer-grid data, δ when omitted"),
    levels: int = typer.Option(1, "--levels", min=1, max=settings.max_levels),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """Runs the subdivision scheme r levels from the given starting data."""
    entity = read_model(schedule, ScheduleDTO).to_entity()
    c1 = read_samples(start) if start is not None else SampledFunction.delta()
    write_csv(get_container().subdivision_service.run(entity, c1, levels), out)


@router.command("dimension")
@handle_errors
def dimension(
    schedules: List[Path] = typer.Option([], "--schedule", help="schedule JSON, repeatable"),
    intervals: List[str] = typer.Option([], "--interval", help="support LO,HI, repeatable"),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """Bounds dim(H) by Σ_j |supp(φ_j)| over the given generators."""
    subdivision_service = get_container().subdivision_service
    supports = [subdivision_service.support_bound(read_model(path, ScheduleDTO).to_entity()) for path in schedules]
    supports += [parse_interval(text) for text in intervals]
    report = DimensionReportDTO(
        supports=[SupportDTO(lo=lo, hi=hi) for lo, hi in supports],
        bound=subdivision_service.dimension_bound(supports),
    )
    dump_json(report, out)
    exit_with(True)
