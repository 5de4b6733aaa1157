from pathlib import Path
from typing import List, Optional

import typer

from src.config.fourier import settings as fourier_settings
from src.config.generation import settings
from src.config.subdivision import settings as subdivision_settings
from src.container import get_container
from src.generation.dto import ExponentialSpaceDTO
from src.handlers import exit_with, handle_errors
from src.libs.artifacts import dump_json, parse_complex, parse_interval, read_model
from src.subdivision.dto import ScheduleDTO

router = typer.Typer()


@router.command("check-zeros")
@handle_errors
def check_zeros(
    schedule: Path = typer.Option(..., "--schedule"),
    lam: str = typer.Option("0", "--lambda"),
    order: int = typer.Option(0, "--order", min=0, help="largest derivative order d"),
    levels: int = typer.Option(8, "--levels", min=1, max=settings.max_zero_levels, help="check levels 1..J"),
    tol: Optional[float] = typer.Option(None, "--tol", min=0.0),
    offset: Optional[int] = typer.Option(None, "--offset", help="level offset of the zeros"),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """
    Tabulates D^k a^{[j]}(-e^{-λ2^{-j}}) and D^k a^{[j]}(e^{-λ2^{-j}}) for k ≤ d, j ≤ J.

    Exit status 0 when every zero condition holds.
    """
    entity = read_model(schedule, ScheduleDTO).to_entity()
    table = get_container().generation_service.check_zero_conditions(
        entity, parse_complex(lam), order, range(1, levels + 1), tol, offset
    )
    dump_json(table, out)
    exit_with(table.verdict)


@router.command("construct")
@handle_errors
def construct(
    space: Path = typer.Option(..., "--space", help='JSON {"lambdas": [{"re": .., "im": .., "mult": k}]}'),
    head: int = typer.Option(1, "--head", min=1, help="explicit head masks J"),
    offset: Optional[int] = typer.Option(None, "--offset"),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """Builds the minimal-degree schedule generating the exponential space and prints it as schedule JSON."""
    entity = read_model(space, ExponentialSpaceDTO).to_entity()
    schedule = get_container().generation_service.construct_schedule(entity, head, offset)
    dump_json(ScheduleDTO.from_entity(schedule), out)


@router.command("verify-gen")
@handle_errors
def verify_gen(
    schedule: Path = typer.Option(..., "--schedule"),
    space: Path = typer.Option(..., "--space"),
    levels: int = typer.Option(8, "--levels", min=1, max=subdivision_settings.max_levels),
    window: str = typer.Option("0,6", "--window", help="fit window LO,HI"),
    tol: Optional[float] = typer.Option(None, "--tol", min=0.0),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """
    Checks that the scheme maps integer samples of U to samples of U.

    Exit status 0 when the residual is within the tolerance, 1 otherwise.
    """
    report = get_container().generation_service.verify_generation(
        read_model(schedule, ScheduleDTO).to_entity(),
        read_model(space, ExponentialSpaceDTO).to_entity(),
        levels,
        parse_interval(window),
        tol,
    )
    dump_json(report, out)
    exit_with(report.verdict)


@router.command("audit")
@handle_errors
def audit(
    schedule: Path = typer.Option(..., "--schedule"),
    lams: List[str] = typer.Option(["0"], "--lambda", help="λ grid point RE,IM, repeatable"),
    order: int = typer.Option(1, "--order", min=0),
    half_range: int = typer.Option(64, "--range", min=4, max=fourier_settings.max_range),
    depth: Optional[int] = typer.Option(None, "--depth", min=1, max=fourier_settings.max_depth),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """Classifies the analytic limits over a λ grid; inconclusive points are listed, not guessed."""
    report = get_container().generation_service.analytic_limit_audit(
        read_model(schedule, ScheduleDTO).to_entity(),
        [parse_complex(text) for text in lams],
        order,
        half_range,
        depth,
    )
    dump_json(report, out)
    exit_with(report.verdict)
