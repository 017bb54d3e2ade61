import os
import sys
from pathlib import Path

from loguru import logger

LOG_DIR = os.getenv("LOGS_DIR", os.path.join(Path(__file__).resolve().parents[3], "logs"))
CONSOLE_LEVEL = os.getenv("QNMLAB_CONSOLE_LEVEL", "WARNING")

FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{function}:{line} - {message}"
CONSOLE_FORMAT = "{level: <8} | {message}"


def configure_logging(log_dir: str = LOG_DIR, console_level: str = CONSOLE_LEVEL) -> None:
    """
    Solver and service logs go to qnmlab.log (DEBUG to WARNING) and
    qnmlab-error.log (ERROR with tracebacks); the console only shows
    warnings and errors unless QNMLAB_CONSOLE_LEVEL says otherwise.
    """
    logger.remove()
    rotation = dict(rotation="10MB", retention="30 days", compression="zip")
    logger.add(
        os.path.join(log_dir, "qnmlab.log"),
        format=FILE_FORMAT,
        level="DEBUG",
        filter=lambda record: record["level"].no < logger.level("ERROR").no,
        **rotation,
    )
    logger.add(
        os.path.join(log_dir, "qnmlab-error.log"),
        format=FILE_FORMAT,
        level="ERROR",
        backtrace=True,
        diagnose=True,
        **rotation,
    )
    logger.add(sys.stderr, format=CONSOLE_FORMAT, level=console_level)


configure_logging()


def get_logger():
    return logger
