from pathlib import Path
from typing import Optional

import typer

from src.container import get_container
from src.handlers import exit_with, handle_errors
from src.libs.artifacts import dump_json, read_model
from src.shift.dto import SubspaceDTO

router = typer.Typer()


@router.command("invariant")
@handle_errors
def invariant(
    subspace: Path = typer.Option(..., "--subspace", help='JSON {"ambient": n, "basis": [[...], ...]}'),
    order: int = typer.Option(1, "--order", min=0, help="block degree d of A_d"),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """Checks whether the subspace is invariant under the block shift operator A_d."""
    shift_service = get_container().shift_service
    entity = shift_service.subspace(read_model(subspace, SubspaceDTO).to_entity().basis)
    report = shift_service.invariance_report(entity, shift_service.build_A(order))
    dump_json(report, out)
    exit_with(report.invariant)


@router.command("minimal")
@handle_errors
def minimal(
    vector: str = typer.Option(..., "--vector", help="comma-separated coordinates in M_d"),
    order: int = typer.Option(1, "--order", min=0),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """Prints an orthonormal basis of the smallest A_d-invariant subspace containing the vector."""
    shift_service = get_container().shift_service
    coordinates = [float(part) for part in vector.split(",")]
    subspace = shift_service.minimal_invariant_subspace(shift_service.build_A(order), coordinates)
    dump_json(SubspaceDTO.from_entity(subspace), out)


@router.command("families")
@handle_errors
def families(
    seed: int = typer.Option(0, "--seed"),
    samples: int = typer.Option(16, "--samples", min=1),
    controls: int = typer.Option(100, "--controls", min=0),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """Verifies the four invariant families of A_1 and counts non-invariant random planes."""
    report = get_container().shift_service.four_families_demo(seed, samples, controls)
    dump_json(report, out)
    exit_with(report.verdict)
