"""Run manifests and the CSV/JSON data writers used by the CLI.

Every data file written to disk is accompanied by a manifest (JSON embeds
it under "meta"; CSV gets a sidecar <path>.manifest.json) so any output can
be regenerated from its recorded parameters.  The data payload itself is a
pure function of those parameters; the manifest timestamp is bookkeeping,
not part of the reproducible payload.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone

from . import __version__

__all__ = ["RunManifest", "thread_cap", "render_csv", "write_output"]


class UsageError(ValueError):
    """Invalid flag or environment configuration (CLI exit code 2)."""


def thread_cap() -> int:
    """Parallelism cap from UMBRACAL_THREADS (>= 1; default 1).

    The current implementation evaluates serially, so any valid cap is
    honored; the value is still validated and recorded in run manifests.
    """
    raw = os.environ.get("UMBRACAL_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"UMBRACAL_THREADS must be an integer >= 1, got {raw!r}") from None
    if cap < 1:
        raise UsageError(f"UMBRACAL_THREADS must be >= 1, got {cap}")
    return cap


@dataclass(frozen=True)
class RunManifest:
    subcommand: str
    parameters: dict[str, str]
    output_path: str | None
    format: str
    tool_version: str = __version__
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())
    threads: int = 1

    def to_dict(self) -> dict:
        return asdict(self)


def _format_cell(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def render_csv(columns: dict[str, list]) -> str:
    """RFC-4180 style: header row, comma separation, CRLF line ends,
    floats with 17 significant digits (exact round-trip)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    names = list(columns)
    writer.writerow(names)
    length = len(columns[names[0]]) if names else 0
    for i in range(length):
        writer.writerow([_format_cell(columns[name][i]) for name in names])
    return buf.getvalue()


def write_output(columns: dict[str, list], manifest: RunManifest) -> None:
    """Emit the data in the manifest's format, to its path or stdout.

    CSV files get a sidecar manifest; CSV on stdout prints the manifest to
    stderr instead.  JSON embeds the manifest under "meta".
    """
    if manifest.format == "json":
        payload = json.dumps({"meta": manifest.to_dict(), "data": columns}, indent=2, default=_format_cell)
        if manifest.output_path:
            with open(manifest.output_path, "w", encoding="utf-8") as fh:
                fh.write(payload + "\n")
        else:
            sys.stdout.write(payload + "\n")
        return
    if manifest.format != "csv":
        raise UsageError(f"unknown format {manifest.format!r}")
    text = render_csv(columns)
    if manifest.output_path:
        with open(manifest.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        with open(manifest.output_path + ".manifest.json", "w", encoding="utf-8") as fh:
            json.dump(manifest.to_dict(), fh, indent=2)
            fh.write("\n")
    else:
        sys.stdout.write(text)
        print(json.dumps(manifest.to_dict()), file=sys.stderr)
