from pathlib import Path
from typing import Optional

import typer

from src.config.fourier import settings
from src.config.subdivision import settings as subdivision_settings
from src.container import get_container
from src.fourier.dto import ComplexDTO, DecayReportDTO, HBasisReportDTO, OmegaReportDTO, PhiHatDTO
from src.handlers import exit_with, handle_errors
from src.libs.artifacts import dump_json, parse_complex, parse_interval, read_model, write_csv
from src.subdivision.dto import ScheduleDTO

router = typer.Typer()


@router.command("phi-hat")
@handle_errors
def phi_hat(
    schedule: Path = typer.Option(..., "--schedule"),
    y: str = typer.Option("0", "--y", help="frequency RE,IM"),
    order: int = typer.Option(0, "--order", min=0, help="highest derivative d"),
    depth: Optional[int] = typer.Option(None, "--depth", min=1, max=settings.max_depth),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """Evaluates φ̂(y), ..., φ̂^{(d)}(y) from the truncated product."""
    entity = read_model(schedule, ScheduleDTO).to_entity()
    result = get_container().fourier_service.phi_hat_derivs(entity, parse_complex(y), order, depth)
    dump_json(PhiHatDTO(
        y=ComplexDTO.of(result.y),
        values=[ComplexDTO.of(value) for value in result.values],
        error_bound=result.error_bound,
        depth=result.depth,
    ), out)


@router.command("decay")
@handle_errors
def decay(
    schedule: Path = typer.Option(..., "--schedule"),
    lam: str = typer.Option("0", "--lambda", help="λ as RE,IM"),
    order: int = typer.Option(0, "--order", min=0, help="derivative order k"),
    half_range: int = typer.Option(64, "--range", min=4, max=settings.max_range, help="entries ℓ = -L..L"),
    depth: Optional[int] = typer.Option(None, "--depth", min=1, max=settings.max_depth),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """
    Computes φ̂^{(k)}(-iλ/2π + ℓ) for |ℓ| ≤ L and classifies its decay.

    Exit status 0 for a decaying (finitely supported or exponential) sequence, 1 otherwise.
    """
    fourier_service = get_container().fourier_service
    entity = read_model(schedule, ScheduleDTO).to_entity()
    sequence = fourier_service.decay_sequence(entity, parse_complex(lam), order, half_range, depth)
    verdict = fourier_service.classify_decay(sequence)
    dump_json(DecayReportDTO.from_entity(sequence, verdict), out)
    exit_with(verdict.decays)


@router.command("omega")
@handle_errors
def omega(
    schedule: Path = typer.Option(..., "--schedule"),
    lam: str = typer.Option("0", "--lambda"),
    order: int = typer.Option(0, "--order", min=0),
    half_range: int = typer.Option(64, "--range", min=4, max=settings.max_range),
    depth: Optional[int] = typer.Option(None, "--depth", min=1, max=settings.max_depth),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """Fourier coefficients of the periodic factor ω_k."""
    entity = read_model(schedule, ScheduleDTO).to_entity()
    periodic = get_container().fourier_service.omega(entity, parse_complex(lam), order, half_range, depth)
    dump_json(OmegaReportDTO.from_entity(periodic), out)


@router.command("hbasis")
@handle_errors
def hbasis(
    schedule: Path = typer.Option(..., "--schedule"),
    lam: str = typer.Option("0", "--lambda"),
    order: int = typer.Option(0, "--order", min=0, help="largest power d"),
    window: str = typer.Option("-2,2", "--window", help="LO,HI"),
    levels: int = typer.Option(10, "--levels", min=1, max=subdivision_settings.max_levels),
    half_range: int = typer.Option(64, "--range", min=4, max=settings.max_range),
    depth: Optional[int] = typer.Option(None, "--depth", min=1, max=settings.max_depth),
    tol: Optional[float] = typer.Option(None, "--tol", min=0.0),
    out: Optional[Path] = typer.Option(None, "--out", help="CSV stem; writes <stem>_k<k>.csv per power"),
    report: Optional[Path] = typer.Option(None, "--report", help="JSON report path, stdout when omitted"),
):
    """
    Samples Σ_ℓ e^{λℓ} ℓ^k φ(t - ℓ) for k ≤ d and checks them against the Poisson-summation form.

    Exit status 2 when the two evaluations disagree beyond the tolerance.
    """
    fourier_service = get_container().fourier_service
    entity = read_model(schedule, ScheduleDTO).to_entity()
    interval = parse_interval(window)
    basis = fourier_service.h_lambda_basis(
        entity, parse_complex(lam), order, interval, levels, depth, half_range, tol
    )
    if out is not None:
        for k, samples in enumerate(basis.samples):
            write_csv(samples, out.with_name(f"{out.stem}_k{k}{out.suffix or '.csv'}"))
    dump_json(HBasisReportDTO(
        lam=ComplexDTO.of(basis.lam),
        order=order,
        window=interval,
        levels=levels,
        consistency=basis.consistency,
        tol=tol if tol is not None else fourier_service.config.consistency_tol,
    ), report)


@router.command("strang-fix")
@handle_errors
def strang_fix(
    schedule: Path = typer.Option(..., "--schedule"),
    lam: str = typer.Option("0", "--lambda"),
    order: int = typer.Option(0, "--order", min=0),
    half_range: int = typer.Option(16, "--range", min=4, max=settings.max_range),
    depth: Optional[int] = typer.Option(None, "--depth", min=1, max=settings.max_depth),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """Checks the generalized Strang-Fix conditions at λ up to order d."""
    entity = read_model(schedule, ScheduleDTO).to_entity()
    report = get_container().fourier_service.strang_fix_report(entity, parse_complex(lam), order, half_range, depth)
    dump_json(report, out)
    exit_with(report.verdict)
