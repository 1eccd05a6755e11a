"""Report rendering: a ``#`` comment header followed by TSV rows, or JSON."""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

from dotgates import __version__

TOOL = "dotgates"


@dataclass
class Section:
    name: str
    columns: Sequence[str]
    rows: list[Sequence[Any]] = field(default_factory=list)


@dataclass
class Report:
    command: str
    parameters: dict[str, Any]
    sections: list[Section]
    rng: str | None = None

    def header(self) -> list[str]:
        params = " ".join(f"{k}={_cell(v)}" for k, v in self.parameters.items())
        lines = [f"# {TOOL} {__version__}", f"# command: {self.command}", f"# parameters: {params}"]
        if self.rng:
            lines.append(f"# rng: {self.rng}")
        return lines

    def to_tsv(self) -> str:
        lines = self.header()
        for sec in self.sections:
            lines.append(f"# section: {sec.name}")
            lines.append("\t".join(sec.columns))
            lines.extend("\t".join(_cell(v) for v in row) for row in sec.rows)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc: dict[str, Any] = {
            "tool": TOOL,
            "version": __version__,
            "command": self.command,
            "parameters": self.parameters,
        }
        if self.rng:
            doc["rng"] = self.rng
        for sec in self.sections:
            doc[sec.name] = [dict(zip(sec.columns, row)) for row in sec.rows]
        return json.dumps(doc, indent=2) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_tsv()


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)) and not isinstance(v, str):
        return " ".join(map(str, v)) if v else "-"
    return str(v)


def ranks_text(ranks: Iterable[int]) -> str:
    return " ".join(map(str, sorted(ranks)))
