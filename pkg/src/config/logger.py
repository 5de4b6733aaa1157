from logging.handlers import RotatingFileHandler

import logging
import sys

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    log_file: str = Field("shiftlab.log", alias="LOG_FILE")
    console_level: int = Field(logging.INFO, alias="LOG_CONSOLE_LEVEL")
    file_level: int = Field(logging.DEBUG, alias="LOG_FILE_LEVEL")


settings = Settings()


def setup_logging(
    log_file: str | None = None,
    console_level: int | None = None,
    file_level: int | None = None,
    file_bytes_size: int = 10*1024*1024,
    backup_count: int = 10,
) -> None:
    """Configure logging for the command-line laboratory."""
    formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    file_handler = RotatingFileHandler(
        log_file or settings.log_file,
        maxBytes=file_bytes_size,
        backupCount=backup_count,
        encoding="utf-8"
    )
    file_handler.setLevel(file_level if file_level is not None else settings.file_level)
    file_handler.setFormatter(formatter)

    # stdout carries artifacts, diagnostics go to stderr
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level if console_level is not None else settings.console_level)
    console_handler.setFormatter(formatter)

    logging.basicConfig(level=logging.DEBUG, handlers=[file_handler, console_handler], force=True)

    logger = logging.getLogger(__name__)
    logger.debug("Logging initialized")
