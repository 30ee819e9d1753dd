import csv
import io
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, List, Optional, Sequence

from ..config import AppSettings, ExitCodes
from ..models.base import to_jsonable
from ..models.run_config import RunConfig


@dataclass
class CommandResult:
    """Payload of one subcommand: JSON data plus an optional CSV table"""
    data: Any
    csv_header: Optional[Sequence[str]] = None
    csv_rows: List[Sequence[Any]] = field(default_factory=list)
    exit_code: int = ExitCodes.OK


def render_json(config: RunConfig, data: Any) -> str:
    """
    JSON document with schema, resolved config and result. ``generated_at``
    is the only field that differs between identical runs.
    """
    document = {
        "schema": AppSettings.REPORT_SCHEMA,
        "command": config.subcommand,
        "config": config.to_dict(),
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "result": to_jsonable(data),
    }
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _csv_cell(value: Any) -> Any:
    value = to_jsonable(value)
    if isinstance(value, float):
        return repr(value)
    return value


def render_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(value) for value in row])
    return buffer.getvalue()


def render(config: RunConfig, result: CommandResult) -> str:
    if config.output_format == "csv" and result.csv_header is not None:
        return render_csv(result.csv_header, result.csv_rows)
    return render_json(config, result.data)


def render_error(config: Optional[RunConfig], error: Exception) -> str:
    """Error document for exit code 2 so batch drivers can triage"""
    detail = {"type": type(error).__name__, "message": str(error)}
    for name in ("node", "margin", "path", "required", "available"):
        if getattr(error, name, None) is not None:
            detail[name] = to_jsonable(getattr(error, name))
    document = {
        "schema": AppSettings.REPORT_SCHEMA,
        "command": config.subcommand if config else None,
        "config": config.to_dict() if config else None,
        "error": detail,
    }
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
