from pathlib import Path
from typing import Optional

import typer

from src.container import get_container
from src.handlers import exit_with, handle_errors
from src.libs.artifacts import dump_json, read_model
from src.symbol.dto import LagrangeRequestDTO

router = typer.Typer()


@router.command("lagrange")
@handle_errors
def lagrange(
    input_path: Path = typer.Option(..., "--input", help="JSON {polynomial: MaskJSON, points: [y_0, ..., y_N]}"),
    out: Optional[Path] = typer.Option(None, "--out", help="report path, stdout when omitted"),
):
    """
    Checks the interpolation estimate ‖a‖_∞ (min gap)^N ≤ 2^{-N} (N+1) max|a(y_m)|.

    Exit status 0 when it holds, 1 when it fails, 2 on invalid input.
    """
    request = read_model(input_path, LagrangeRequestDTO)
    # both sides scale alike, so the stored convention does not matter
    report = get_container().symbol_service.lagrange_bound(request.polynomial.to_entity(), request.points)
    dump_json(report, out)
    exit_with(report.holds)
