import logging
from pathlib import Path
from typing import Optional

import typer

from src.config.logger import setup_logging
from src.routes import router


def get_app() -> typer.Typer:
    @router.callback()
    def configure(
        log_file: Optional[Path] = typer.Option(None, "--log-file", help="rotating log file"),
        verbose: bool = typer.Option(False, "--verbose", "-v", help="log DEBUG records to stderr"),
    ):
        setup_logging(log_file=str(log_file) if log_file else None, console_level=logging.DEBUG if verbose else None)

    return router
