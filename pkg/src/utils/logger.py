"""
Logger Utilities

Re-exports the loguru logger configured by config.logging_config (stderr
console, rotating files, every record tagged with its pipeline stage) and
setup_logging, which the command-line tools call to change the console level.
Bind a stage with `logger.contextualize(stage=...)`.
"""
from loguru import logger
from config.logging_config import setup_logging

__all__ = ['logger', 'setup_logging']
