#!/usr/bin/env python3
"""
qhcheck: highest weight structure on finite-dimensional algebras
Main entry point for the command-line tool
"""

import json
import logging
import sys
from pathlib import Path

from src.cli import run


def setup_logger(log_file: str = "qhcheck.log"):
    """Set up the logger for the application"""

    # ANSI escape sequences for colors
    RED = "\033[91m"
    YELLOW = "\033[93m"
    RESET = "\033[0m"

    class ColorFormatter(logging.Formatter):
        def format(self, record):
            if record.levelno == logging.INFO:
                levelname_color = f"{RESET}{record.levelname:<8}{RESET}"
            elif record.levelno == logging.WARNING:
                levelname_color = f"{YELLOW}{record.levelname:<8}{RESET}"
            elif record.levelno == logging.ERROR:
                levelname_color = f"{RED}{record.levelname:<8}{RESET}"
            else:
                levelname_color = f"{record.levelname:<8}"

            record.levelname = levelname_color
            record.name = f"{record.name:<25}"  # module name
            return super().format(record)

    log_format = "%(asctime)s - [%(levelname)s] [%(name)s] - %(message)s"
    # stdout carries the report
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(ColorFormatter(log_format))

    logging.basicConfig(
        level=logging.INFO,
        handlers=[
            handler,
            logging.FileHandler(log_file),
        ]
    )
    return logging.getLogger("qhcheck")


def _log_file(argv) -> str:
    """log_file from the configuration named by --config, before full parsing."""
    path = Path("configs/conf.json")
    if "--config" in argv and argv.index("--config") + 1 < len(argv):
        path = Path(argv[argv.index("--config") + 1])
    try:
        return json.loads(path.read_text()).get("log_file", "qhcheck.log")
    except (OSError, ValueError):
        return "qhcheck.log"


if __name__ == "__main__":
    argv = sys.argv[1:]
    logger = setup_logger(_log_file(argv))
    code = run(argv)
    logger.debug(f"Exit code {code}")
    sys.exit(code)
