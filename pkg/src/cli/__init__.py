"""
Command-line interface
"""

from .commands import Context
from .runner import COMMANDS, build_parser, run

__all__ = ["Context", "COMMANDS", "build_parser", "run"]
