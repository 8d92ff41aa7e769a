"""What a command hands back to the entry point."""

from collections.abc import Sequence
from dataclasses import dataclass

import orjson

from schubert_cone.schemas.run import Report


@dataclass
class CommandResult:
    """A report plus its human-readable rendering.

    ``document`` replaces the report on stdout for the ascii and svg formats.
    """

    report: Report
    table: str
    document: str | None = None

    @property
    def ok(self) -> bool:
        return self.report.ok

    def to_json(self) -> bytes:
        return orjson.dumps(
            self.report.model_dump(mode="json"),
            option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS,
        )


def format_table(title: str, header: Sequence[str], rows: Sequence[Sequence[object]], footer: Sequence[str] = ()) -> str:
    """A framed plain-text table."""
    cells = [[str(x) for x in row] for row in rows]
    widths = [len(h) for h in header]
    for row in cells:
        widths = [max(w, len(x)) for w, x in zip(widths, row)]
    rule = "=" * max(len(title), sum(widths) + 2 * (len(widths) - 1))
    lines = [rule, title, rule]
    lines.append("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    lines.extend("  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in cells)
    if footer:
        lines.append(rule)
        lines.extend(footer)
    return "\n".join(lines) + "\n"
