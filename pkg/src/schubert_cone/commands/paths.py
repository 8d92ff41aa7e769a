"""`paths`: non-intersecting lattice path tuples, counted, listed or drawn."""

import argparse
from pathlib import Path
from typing import Literal

import structlog
from pydantic import BaseModel

from schubert_cone.commands.base import CommandResult, format_table
from schubert_cone.config import get_settings
from schubert_cone.schemas.run import Report, RunConfig
from schubert_cone.services.combinatorics import distinguished_of
from schubert_cone.services.hilbert import multiplicity
from schubert_cone.services.lattice_paths import (
    PathTuple,
    enumerate_tuples,
    literal_steps_agree,
    monomial_to_tuple,
    tuple_to_monomial,
)
from schubert_cone.services.rendering import render, render_sheet
from shared.constants import PROVENANCE_PATHS, RENDER_FORMATS

logger = structlog.get_logger()


# =============================================================================
# Report Models
# =============================================================================


class PathEntry(BaseModel):
    anchor: tuple[int, int]
    vertices: list[tuple[int, int]]


class TupleEntry(BaseModel):
    vertex_count: int
    paths: list[PathEntry]


class PathsReport(Report):
    """Response of the paths command."""

    command: Literal["paths"] = "paths"
    count: int
    provenance: str = PROVENANCE_PATHS
    anchors: list[tuple[int, int]]
    literal_steps_agree: bool
    multiplicity: int | None = None
    tuples: list[TupleEntry] | None = None
    files: list[str] = []


# =============================================================================
# Command
# =============================================================================


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("paths", help="non-intersecting lattice path tuples")
    parser.add_argument("--count", dest="count_only", action="store_true", help="report the count only")
    parser.add_argument("--render", choices=RENDER_FORMATS, default=None, help="draw the tuples")
    parser.add_argument("--out", type=Path, default=None, help="directory for rendered files")
    parser.add_argument("--sheet", action="store_true", help="draw all tuples on one page")


def _entry(t: PathTuple) -> TupleEntry:
    anchors = distinguished_of(t.w, t.v).roots
    return TupleEntry(
        vertex_count=len(t.vertices),
        paths=[
            PathEntry(anchor=tuple(anchor), vertices=[tuple(p) for p in path.vertices])
            for anchor, path in zip(anchors, t.paths)
        ],
    )


def _write(directory: Path, documents: dict[str, str]) -> list[str]:
    directory.mkdir(parents=True, exist_ok=True)
    for name, text in documents.items():
        (directory / name).write_text(text, encoding="utf-8")
    logger.info("figures_written", directory=str(directory), files=len(documents))
    return [str(directory / name) for name in documents]


def run(config: RunConfig) -> CommandResult:
    v, w = config.v_index, config.require_w()
    tuples = enumerate_tuples(v, w)
    anchors = distinguished_of(w, v).roots

    ok = True
    mult: int | None = None
    if config.verify:
        mult = multiplicity(v, w)
        round_trip = all(monomial_to_tuple(tuple_to_monomial(t), w) == t for t in tuples)
        ok = round_trip and mult == len(tuples)
        if not ok:
            logger.error("paths_mismatch", tuples=len(tuples), multiplicity=mult, round_trip=round_trip)

    fmt = config.render or (config.output_format if config.output_format in RENDER_FORMATS else None)
    document: str | None = None
    files: list[str] = []
    if fmt is not None:
        suffix = "svg" if fmt == "svg" else "txt"
        if config.out is None and config.output_format == fmt:
            document = render_sheet(v, w, tuples, fmt)
        elif config.sheet:
            files = _write(config.out or get_settings().output_dir, {f"sheet.{suffix}": render_sheet(v, w, tuples, fmt)})
        else:
            documents = {f"tuple-{i:03d}.{suffix}": render(v, w, t, fmt) for i, t in enumerate(tuples, start=1)}
            files = _write(config.out or get_settings().output_dir, documents)

    report = PathsReport(
        input=config.to_input(),
        ok=ok,
        count=len(tuples),
        anchors=[tuple(a) for a in anchors],
        literal_steps_agree=literal_steps_agree(v, w),
        multiplicity=mult,
        tuples=None if config.count_only else [_entry(t) for t in tuples],
        files=files,
    )
    footer = []
    if not anchors:
        footer.append("0 paths, 1 empty tuple")
    footer.extend(f"wrote {name}" for name in files)
    if config.verify:
        footer.append("verify: " + ("OK" if ok else "MISMATCH"))
    rows = [[len(anchors), len(tuples)]]
    if not config.count_only:
        rows.extend(
            [f"#{i}", " | ".join(" ".join(str(p) for p in path.vertices) for path in t.paths) or "-"]
            for i, t in enumerate(tuples, start=1)
        )
    table = format_table(f"LATTICE PATHS v={v} w={w}", ["paths", "tuples"], rows, footer)
    return CommandResult(report=report, table=table, document=document)
