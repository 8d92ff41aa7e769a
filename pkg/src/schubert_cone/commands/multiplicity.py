"""`multiplicity`: the number of maximal square-free dominated sets."""

import argparse
from typing import Literal

import structlog
from pydantic import BaseModel

from schubert_cone.commands.base import CommandResult, format_table
from schubert_cone.schemas.run import Report, RunConfig
from schubert_cone.services.hilbert import cross_check_faces, maximal_dominated, multiplicity
from schubert_cone.services.lattice_paths import enumerate_tuples
from shared.constants import PROVENANCE_FACE_SEARCH, PROVENANCE_PATHS

logger = structlog.get_logger()


# =============================================================================
# Report Models
# =============================================================================


class Face(BaseModel):
    """The positive roots of one maximal dominated set."""

    size: int
    positive_roots: list[tuple[int, int]]


class MultiplicityCheck(BaseModel):
    provenance: str
    value: int


class MultiplicityReport(Report):
    """Response of the multiplicity command."""

    command: Literal["multiplicity"] = "multiplicity"
    multiplicity: int
    provenance: str = PROVENANCE_FACE_SEARCH
    face_size: int
    checks: list[MultiplicityCheck] = []
    faces: list[Face] | None = None


# =============================================================================
# Command
# =============================================================================


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("multiplicity", help="multiplicity of the tangent cone")
    parser.add_argument("--list", dest="list_faces", action="store_true", help="list the maximal sets")


def run(config: RunConfig) -> CommandResult:
    v, w = config.v_index, config.require_w()
    family = maximal_dominated(v, w)
    value = multiplicity(v, w)

    checks: list[MultiplicityCheck] = []
    ok = True
    if config.verify:
        cross_check_faces(v, w)
        tuples = len(enumerate_tuples(v, w))
        checks = [
            MultiplicityCheck(provenance=PROVENANCE_FACE_SEARCH, value=family.k),
            MultiplicityCheck(provenance=PROVENANCE_PATHS, value=tuples),
        ]
        ok = family.k == tuples == value
        if not ok:
            logger.error("multiplicity_mismatch", faces=family.k, paths=tuples, multiplicity=value)

    faces = None
    if config.list_faces:
        faces = [
            Face(
                size=len(face),
                positive_roots=[tuple(root) for root in face if root.is_positive],
            )
            for face in family.faces
        ]

    report = MultiplicityReport(
        input=config.to_input(),
        ok=ok,
        multiplicity=value,
        face_size=family.common_cardinality,
        checks=checks,
        faces=faces,
    )
    rows = [[PROVENANCE_FACE_SEARCH, value]] + [[c.provenance, c.value] for c in checks[1:]]
    footer = [f"face size: {family.common_cardinality}"]
    for i, face in enumerate(faces or [], start=1):
        footer.append(f"{i}: " + " ".join(f"({r},{c})" for r, c in face.positive_roots))
    if config.verify:
        footer.append("verify: " + ("OK" if ok else "MISMATCH"))
    table = format_table(f"MULTIPLICITY v={v} w={w}", ["method", "value"], rows, footer)
    return CommandResult(report=report, table=table)
