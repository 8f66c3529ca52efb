"""CSV / JSON records written by the command-line tools.

CSV: ``#``-prefixed metadata lines, one header row, numeric fields with 17
significant digits; extra blocks (e.g. delay peaks) follow as ``#`` lines
so plotting tools still see a single table. JSON: one document
``{metadata, columns, rows[, blocks]}``.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .models import UNITS, ModelSpec

__all__ = ["OutputRecord", "model_metadata", "format_number"]


def format_number(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return format(v, ".17g")
    return "" if v is None else str(v)


def _json_value(v):
    if isinstance(v, complex):
        return [v.real, v.imag]
    return v


def model_metadata(spec: ModelSpec | None) -> dict:
    meta = {
        "tool": "shape-resonance",
        "version": __version__,
        "units": f"2m={UNITS['two_m']:g}, hbar={UNITS['hbar']:g}",
    }
    if spec is not None:
        meta["model"] = spec.kind.value
        meta.update(spec.params())
    return meta


@dataclass
class OutputRecord:
    columns: list[str]
    rows: list[list]
    metadata: dict = field(default_factory=dict)
    blocks: dict = field(default_factory=dict)

    def render(self, fmt: str = "csv") -> str:
        if fmt == "json":
            doc = {
                "metadata": self.metadata,
                "columns": self.columns,
                "rows": [[_json_value(v) for v in row] for row in self.rows],
            }
            if self.blocks:
                doc["blocks"] = {
                    name: {"columns": cols, "rows": [[_json_value(v) for v in r] for r in rows]}
                    for name, (cols, rows) in self.blocks.items()
                }
            return json.dumps(doc, indent=1, allow_nan=False) + "\n"
        if fmt != "csv":
            raise ValueError(f"unknown format {fmt!r}")
        buf = io.StringIO()
        for key, value in self.metadata.items():
            buf.write(f"# {key}: {format_number(value)}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_number(v) for v in row])
        for name, (cols, rows) in self.blocks.items():
            buf.write(f"# {name}: {','.join(cols)}\n")
            for row in rows:
                buf.write("# " + ",".join(format_number(v) for v in row) + "\n")
        return buf.getvalue()

    def write(self, fmt: str = "csv", destination: str | None = None) -> None:
        text = self.render(fmt)
        if destination in (None, "-"):
            sys.stdout.write(text)
        else:
            with open(destination, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
