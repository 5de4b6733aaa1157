import typer

from src.fourier.router import router as fourier_router
from src.generation.router import router as generation_router
from src.shift.router import router as shift_router
from src.subdivision.router import router as subdivision_router
from src.symbol.router import router as symbol_router


router = typer.Typer(no_args_is_help=True, help="Laboratory for shift-invariant spaces and non-stationary subdivision.")

router.add_typer(symbol_router)
router.add_typer(subdivision_router)

router.add_typer(fourier_router)
router.add_typer(shift_router)
router.add_typer(generation_router)
