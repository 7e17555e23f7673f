from __future__ import annotations

import logging
import sys
from pathlib import Path

from colorama import Fore, init

init(autoreset=True)

file_formatter = "%(asctime)s %(levelname)-8s %(filename)-12s line %(lineno)-4s %(message)s"
stream_formatter = "%(levelname)-8s %(message)s"


class ColoredHandler(logging.StreamHandler):  # type: ignore
    def emit(self, record: logging.LogRecord) -> None:
        try:
            self._write(record)
        except Exception:
            self.handleError(record)

    def _write(self, record: logging.LogRecord) -> None:
        if record.levelno == logging.DEBUG:
            self.stream.write(f"{Fore.BLUE}{self.format(record)}\n")
        elif record.levelno == logging.INFO:
            self.stream.write(f"{Fore.GREEN}{self.format(record)}\n")
        elif record.levelno == logging.WARNING:
            self.stream.write(f"{Fore.YELLOW}{self.format(record)}\n")
        elif record.levelno == logging.ERROR:
            self.stream.write(f"{Fore.RED}{self.format(record)}\n")
        elif record.levelno == logging.CRITICAL:
            self.stream.write(f"{Fore.MAGENTA}{self.format(record)}\n")
        else:  # default color
            self.stream.write(f"{self.format(record)}\n")


def str_to_logging_level(s: str) -> int:
    """Convert from a input string to a logging level.

    Args:
        s (str): A string that specify a logging level.

    Returns:
        int: It returns a logging level.

    Raises:
        ValueError: Causes when an invalid argument s is given.
    """
    if "debug" in s.lower():
        return logging.DEBUG
    elif "info" in s.lower():
        return logging.INFO
    elif "warn" in s.lower():
        return logging.WARNING
    elif "error" in s.lower():
        return logging.ERROR
    elif "critical" in s.lower():
        return logging.CRITICAL
    else:
        raise ValueError(f"Invalid logging level: {s}, {type(s)}")


def create_logger(
    logger_name: str, stream_level: str, logfile: Path | None = None, file_level: str = "DEBUG"
) -> logging.Logger:
    """Create a command logger writing colored records to stdout.

    Handlers attached by a previous call with the same name are replaced, so
    a command run twice in one process does not print every record twice.

    Args:
        logger_name (str): A name of a logger.
        stream_level (str): A logging level for the stream output.
        logfile (Path | None, optional): A log file. Defaults to None (no file output).
        file_level (str, optional): A logging level for the log file. Defaults to "DEBUG".

    Returns:
        logging.Logger: The configured logger.
    """
    logger = logging.getLogger(logger_name)
    logger.setLevel(logging.DEBUG)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    ch = ColoredHandler(sys.stdout)
    ch.setFormatter(logging.Formatter(stream_formatter))
    ch.setLevel(str_to_logging_level(stream_level))
    logger.addHandler(ch)

    if logfile is not None:
        fh = logging.FileHandler(logfile, mode="w")
        fh.setFormatter(logging.Formatter(file_formatter))
        fh.setLevel(str_to_logging_level(file_level))
        logger.addHandler(fh)

    return logger
