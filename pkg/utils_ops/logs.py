import logging
from pathlib import Path
from typing import Any, Optional

from utils_ops.envHandler import getenv
from utils_ops.paths import constructPath

LOGGING_PATH = getenv("POLYRANK_LOG_PATH")
CONSOLE_LEVEL = getattr(logging, str(getenv("POLYRANK_LOG_LEVEL", "WARNING")).upper(), logging.WARNING)
FORMATTER = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")


def _attach_handlers(logger: logging.Logger, name: str) -> None:
    # stderr, stdout is reserved for reports
    console = logging.StreamHandler()
    console.setLevel(CONSOLE_LEVEL)
    console.setFormatter(FORMATTER)
    logger.addHandler(console)
    if LOGGING_PATH:
        log_dir = constructPath(Path(LOGGING_PATH), "logs")
        log_dir.mkdir(parents=True, exist_ok=True)
        sink = logging.FileHandler(log_dir / f"{name}.log")
        sink.setFormatter(FORMATTER)
        logger.addHandler(sink)


class Logger(object):
    """
    Component logger. Messages carry the failing exception and the numerical
    context (tolerances and gap reports) as suffixes.
    """

    def __init__(self, name: Optional[str] = None):
        self.name = name
        self.logger = logging.getLogger(name)
        self.logger.setLevel(logging.DEBUG)
        if not self.logger.handlers:
            _attach_handlers(self.logger, name or "polyrank")

    def log(self, level: str, message: str, error: Any = None, params: Any = None):
        if error:
            message = f"{message} | Error: {error}"
        if params:
            message = f"{message} | Params: {params}"

        log_method = getattr(self.logger, level.lower(), None)
        if callable(log_method):
            log_method(message)
        else:
            self.logger.error(f"Invalid log level: {level}. Message: {message}")
