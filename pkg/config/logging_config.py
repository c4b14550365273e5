"""
Logging Configuration using Loguru
"""
import sys
from loguru import logger
from pathlib import Path

# Import settings
try:
    from config.settings import LOG_DIR, DEBUG_MODE
except ImportError:
    # Fallback if settings not available
    LOG_DIR = Path("logs")
    DEBUG_MODE = False
    LOG_DIR.mkdir(parents=True, exist_ok=True)

# Records carry the pipeline stage that emitted them ("-" outside a stage)
CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<magenta>{extra[stage]: <15}</magenta> | <cyan>{name}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[stage]} | {name}:{function}:{line} - {message}"


def setup_logging(level: str = None):
    """
    Configure loguru logger with file and console output.

    The console sink writes to stderr: stdout carries the documents the
    command-line tools print (presentations, braids, reports).

    Args:
        level: Console level override (defaults to DEBUG in debug mode, else INFO)
    """
    logger.remove()
    logger.configure(extra={"stage": "-"})

    log_level = level or ("DEBUG" if DEBUG_MODE else "INFO")
    logger.add(sys.stderr, format=CONSOLE_FORMAT, level=log_level, colorize=True)

    # Full trace, including per-segment monodromy steps
    logger.add(
        LOG_DIR / "app.log",
        rotation="10 MB",
        retention="7 days",
        format=FILE_FORMAT,
        level="DEBUG",
        enqueue=True
    )

    # Budget exhaustion and invariant failures
    logger.add(
        LOG_DIR / "errors.log",
        rotation="10 MB",
        retention="30 days",
        format=FILE_FORMAT,
        level="ERROR",
        enqueue=True
    )

    logger.debug(f"Logging configured (console level {log_level})")
    return logger


# Initialize logging on module import
setup_logging()
