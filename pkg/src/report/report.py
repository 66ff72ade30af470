"""
Report module for rendering and saving command results
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.utils.verdict import Verdict

logger = logging.getLogger(__name__)

FORMATS = ("human", "json")


class Report:
    """
    The result of one command: an echo of the command, an optional verdict and
    named certificate sections, all JSON-ready.

    Reports carry no timestamps or timings, so identical inputs give
    identical bytes.
    """

    def __init__(self, command: str, arguments: Optional[Dict[str, Any]] = None):
        self.command = command
        self.arguments = dict(arguments or {})
        self.verdict: Optional[Verdict] = None
        self.sections: Dict[str, Any] = {}

    def add(self, key: str, value: Any) -> "Report":
        self.sections[key] = value
        return self

    def set_verdict(self, verdict: Verdict) -> "Report":
        self.verdict = verdict
        return self

    def exit_code(self) -> int:
        return 0 if self.verdict is None else self.verdict.exit_code()

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"command": self.command, "arguments": self.arguments}
        if self.verdict is not None:
            data.update(self.verdict.to_dict())
        data.update(self.sections)
        return data


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _is_table(value: Any) -> bool:
    return (isinstance(value, list) and value and all(isinstance(row, list) for row in value)
            and all(not isinstance(x, (list, dict)) for row in value for x in row))


def _render(key: str, value: Any, indent: int, lines: List[str]):
    pad = "  " * indent
    if isinstance(value, dict):
        lines.append(f"{pad}{key}:")
        for k, v in value.items():
            _render(str(k), v, indent + 1, lines)
    elif _is_table(value):
        lines.append(f"{pad}{key}:")
        cells = [[_scalar(x) for x in row] for row in value]
        width = max((len(c) for row in cells for c in row), default=1)
        for row in cells:
            lines.append(f"{pad}  " + " ".join(c.rjust(width) for c in row))
    elif isinstance(value, list) and any(isinstance(x, dict) for x in value):
        lines.append(f"{pad}{key}:")
        for i, item in enumerate(value, start=1):
            _render(f"[{i}]", item, indent + 1, lines)
    elif isinstance(value, list):
        lines.append(f"{pad}{key}: " + ", ".join(_scalar(x) if not isinstance(x, list) else
                                                 "(" + ", ".join(_scalar(y) for y in x) + ")" for x in value))
    else:
        lines.append(f"{pad}{key}: {_scalar(value)}")


def _human(report: Report) -> str:
    data = report.to_dict()
    lines = [f"== {report.command} =="]
    args = data.pop("arguments")
    data.pop("command")
    if args:
        lines.append("  " + " ".join(f"{k}={_scalar(v)}" for k, v in args.items()))
    for key, value in data.items():
        _render(key, value, 0, lines)
    return "\n".join(lines) + "\n"


def emit(report: Report, file_format: str = "human") -> str:
    """
    Render a report.

    Raises:
        ValueError: unsupported format
    """
    if file_format == "json":
        return json.dumps(report.to_dict(), indent=2, ensure_ascii=False, default=str) + "\n"
    if file_format == "human":
        return _human(report)
    raise ValueError(f"Unsupported report format: {file_format}")


class ReportWriter:
    """
    Saves rendered reports under an output directory
    """

    def __init__(self, output_dir: str = "results/reports"):
        """
        Args:
            output_dir: Base directory to store reports
        """
        self.output_dir = Path(output_dir)

    def save(self, report: Report, filename: str, file_format: str = "json") -> str:
        """
        Save a report; a bare filename lands in the output directory.

        Returns:
            Path to the saved report file
        """
        path = Path(filename)
        if not path.parent.parts:
            self.output_dir.mkdir(parents=True, exist_ok=True)
            path = self.output_dir / path
        if file_format == "json" and path.suffix != ".json":
            path = path.with_suffix(".json")
        path.write_text(emit(report, file_format), encoding="utf-8")
        logger.debug(f"{file_format} report saved to: {path}")
        return str(path)
