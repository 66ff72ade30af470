"""
Command-line front end: argument parsing, configuration, dispatch and the
exit-code contract (0 true or success, 1 false, 2 undetermined, 3 input error,
4 internal error).
"""

import argparse
import logging
import sys
import traceback
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

import psutil

from src.algebra import load_algebra
from src.report import FORMATS, ReportWriter, emit
from src.utils import default_config, load_config
from src.utils.exceptions import AlgebraError, UndecidedError
from . import commands

logger = logging.getLogger(__name__)

EXIT_INPUT_ERROR = 3
EXIT_INTERNAL_ERROR = 4
DEFAULT_CONFIG_PATH = "configs/conf.json"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage, which is the undetermined code here."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config",         type=str, default=None,       help="Path to configuration file")
    common.add_argument("--format",         choices=FORMATS, default=None, help="Report format")
    common.add_argument("--jobs",           type=int, default=None,       help="Worker threads for searches")
    common.add_argument("--cap",            type=int, default=None,       help="Ext/Tor degree cap (default 2n-1)")
    common.add_argument("--resolution-cap", type=int, default=None,       help="Maximal resolution length")
    common.add_argument("--output",         type=str, default=None,       help="Also save the JSON report to this file")
    common.add_argument("--verbose",        action="store_true",          help="Log at DEBUG level")
    common.add_argument("--quiet",          action="store_true",          help="Log warnings and errors only")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="qhcheck", description="Highest weight structure on finite-dimensional algebras")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("algebra", help="Path to an .alg presentation or .sc structure-constant file")
        return p

    add("info", "dimension, Cartan matrix, projectives, radical and global dimension")

    p = add("ext", "dim Ext^p between two modules")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--degree", type=int, default=None)

    p = add("tor", "dim Tor_p(X, Λ/ΛeΛ)")
    p.add_argument("module")
    p.add_argument("--idempotent", default="0")
    p.add_argument("--degree", type=int, default=None)

    p = add("resolve", "minimal projective resolution")
    p.add_argument("module")

    p = add("qh-check", "highest weight check for an ordering")
    p.add_argument("--ordering", default=None)
    p.add_argument("--method", choices=["hwc", "chain", "standard", "all"], default="hwc")

    add("qh-search", "all admissible orderings")

    p = add("standard", "standard modules of an ordering, or a check of candidate standard modules")
    p.add_argument("--ordering", default=None)
    p.add_argument("--modules", default=None)

    p = add("filt", "membership in Filt of the standard modules")
    p.add_argument("module")
    p.add_argument("--ordering", default=None)
    p.add_argument("--modules", default=None)

    p = add("heredity", "heredity test for an idempotent ideal")
    p.add_argument("--idempotent", required=True)
    p.add_argument("--homological", action="store_true")

    p = add("recollement", "recollement data at an idempotent")
    p.add_argument("--idempotent", required=True)
    p.add_argument("--module", default=None)

    p = add("coloc", "counit monomorphism on projectives")
    p.add_argument("--idempotent", required=True)

    p = add("exceptional", "exceptional sequence check")
    p.add_argument("--modules", required=True)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--closure", type=int, default=None, help="size bound for the Filt closure check")

    p = add("standardise", "standardisation of an exceptional sequence")
    p.add_argument("--modules", required=True)

    p = add("tilting", "tilting module check")
    p.add_argument("module")

    p = add("iyama", "radical-chain endomorphism algebra")
    p.add_argument("module", nargs="?", default="Lambda")

    p = add("hwt-chain", "chain of recollements of a highest weight category")
    p.add_argument("--ordering", default=None)
    return parser


COMMANDS = {
    "info": commands.info,
    "ext": commands.ext_command,
    "tor": commands.tor_command,
    "resolve": commands.resolve,
    "qh-check": commands.qh_check,
    "qh-search": commands.qh_search_command,
    "standard": commands.standard,
    "filt": commands.filt,
    "heredity": commands.heredity,
    "recollement": commands.recollement_command,
    "coloc": commands.coloc,
    "exceptional": commands.exceptional,
    "standardise": commands.standardise_command,
    "tilting": commands.tilting,
    "iyama": commands.iyama_command,
    "hwt-chain": commands.hwt_chain,
}


def _config(path: Optional[str]) -> Dict[str, Any]:
    if path is not None:
        return load_config(path)
    if Path(DEFAULT_CONFIG_PATH).exists():
        return load_config(DEFAULT_CONFIG_PATH)
    return default_config()


def _set_level(args: argparse.Namespace):
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    elif args.quiet:
        logging.getLogger().setLevel(logging.WARNING)


def run(argv: List[str], stdout: Optional[TextIO] = None) -> int:
    """
    Run one subcommand and print its report.

    Returns:
        the exit code
    """
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        _set_level(args)
        config = _config(args.config)
        caps = config["caps"]
        file_format = args.format or config["output"]["format"]
        cap = args.cap if args.cap is not None else caps.get("degree_cap")
        resolution_cap = args.resolution_cap if args.resolution_cap is not None else caps["resolution_cap"]
        if (cap is not None and cap < 0) or resolution_cap < 0:
            raise ValueError("caps must be non-negative")
        ctx = commands.Context(
            algebra=load_algebra(args.algebra),
            source=args.algebra,
            cap=cap,
            resolution_cap=resolution_cap,
            jobs=args.jobs or config["jobs"],
            max_qh_simples=caps["max_qh_simples"],
        )
        command_logger = logging.getLogger(args.command)
        command_logger.info(f"Running {args.command} on {ctx.algebra.name} (dim {ctx.algebra.dim})")
        report = COMMANDS[args.command](args, ctx)
    except UsageError as e:
        logger.error(str(e))
        return EXIT_INPUT_ERROR
    except (AlgebraError, FileNotFoundError, ValueError) as e:
        logger.error(f"Input error: {e}")
        return EXIT_INPUT_ERROR
    except UndecidedError as e:
        logger.warning(f"Undetermined: {e.reason}")
        stdout.write(f"undetermined: {e.reason}\n")
        return 2
    except Exception as e:
        err_stack = traceback.format_exc()
        logger.error(f"Internal error: {e}\n{err_stack}")
        return EXIT_INTERNAL_ERROR

    stdout.write(emit(report, file_format))
    if args.output:
        saved = ReportWriter(config["output"]["reports_dir"]).save(report, args.output)
        logger.info(f"Report saved to {saved}")
    if report.verdict is not None:
        level = logging.WARNING if report.verdict.is_undetermined else logging.INFO
        command_logger.log(level, f"Verdict: {report.verdict}")
    rss = psutil.Process().memory_info().rss
    logger.debug(f"Resident memory at exit: {rss / (1024 * 1024):.1f} MiB")
    return report.exit_code()
