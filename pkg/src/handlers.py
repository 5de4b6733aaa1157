import functools
import logging

import click
import typer
from pydantic import ValidationError

from src.libs.exceptions import LabError

logger = logging.getLogger(__name__)

STATUS_VERDICT_TRUE = 0
STATUS_VERDICT_FALSE = 1
STATUS_USAGE = 2


def exit_with(verdict: bool) -> None:
    """Ends a command with status 0 for a true verdict and 1 for a false one."""
    raise typer.Exit(STATUS_VERDICT_TRUE if verdict else STATUS_VERDICT_FALSE)


def handle_errors(command):
    """
    **Description**: Wraps a CLI command so that every failure ends with status 2.

    **How It Works**:
    - `LabError`, `pydantic.ValidationError`, malformed JSON/CSV (`ValueError`) and unreadable files
      (`OSError`) print a one-line diagnostic on stderr.
    - Anything else is logged with its traceback.
    - `typer.Exit` and click usage errors pass through untouched.
    """
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (typer.Exit, click.ClickException):
            raise
        except (LabError, ValidationError, ValueError, OSError) as exc:
            logger.debug(f"{command.__name__} failed", exc_info=True)
            message = " ".join(str(exc).split())
            typer.echo(f"error: {type(exc).__name__}: {message}", err=True)
            raise typer.Exit(STATUS_USAGE)
        except Exception as exc:
            logger.error(f"Unhandled exception in {command.__name__}: {exc}", exc_info=True)
            raise typer.Exit(STATUS_USAGE)

    return wrapper
