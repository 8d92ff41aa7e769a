"""`hilbert`: the Hilbert function of the tangent cone in degrees 0..max."""

import argparse
from typing import Literal

import structlog
from pydantic import BaseModel

from schubert_cone.commands.base import CommandResult, format_table
from schubert_cone.schemas.run import Report, RunConfig
from schubert_cone.services.hilbert import (
    hilbert_direct,
    hilbert_polynomial_degree,
    hilbert_values,
    maximal_dominated,
)
from schubert_cone.services.standard_monomials import count_SM
from shared.constants import PROVENANCE_INCLUSION_EXCLUSION
from shared.errors import InvalidInputError

logger = structlog.get_logger()


# =============================================================================
# Report Models
# =============================================================================


class HilbertValue(BaseModel):
    """h(m) with its cross-checks."""

    m: int
    hilbert: int
    provenance: str = PROVENANCE_INCLUSION_EXCLUSION
    direct: int | None = None
    standard_monomials: int | None = None


class HilbertReport(Report):
    """Response of the hilbert command."""

    command: Literal["hilbert"] = "hilbert"
    max_degree: int
    values: list[HilbertValue]
    face_count: int
    face_size: int
    polynomial_degree: int | None = None
    leading_difference: int | None = None


# =============================================================================
# Command
# =============================================================================


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("hilbert", help="Hilbert function h(0..max)")
    parser.add_argument("--max", dest="max_degree", type=int, default=None, help="largest degree")


def run(config: RunConfig) -> CommandResult:
    v, w = config.v_index, config.require_w()
    values = hilbert_values(v, w, config.max_degree)
    family = maximal_dominated(v, w)

    rows: list[HilbertValue] = []
    ok = True
    for m, h in enumerate(values):
        row = HilbertValue(m=m, hilbert=h)
        if config.verify:
            row.direct = hilbert_direct(v, w, m)
            row.standard_monomials = count_SM(v, w, m)
            if not h == row.direct == row.standard_monomials:
                ok = False
                logger.error("hilbert_mismatch", m=m, hilbert=h, direct=row.direct, sm=row.standard_monomials)
        rows.append(row)

    degree: int | None = None
    leading: int | None = None
    try:
        degree, leading = hilbert_polynomial_degree(values)
    except InvalidInputError:
        pass

    report = HilbertReport(
        input=config.to_input(),
        ok=ok,
        max_degree=config.max_degree,
        values=rows,
        face_count=family.k,
        face_size=family.common_cardinality,
        polynomial_degree=degree,
        leading_difference=leading,
    )
    header = ["m", "h(m)"] + (["direct", "SM"] if config.verify else [])
    table_rows = [
        [r.m, r.hilbert] + ([r.direct, r.standard_monomials] if config.verify else []) for r in rows
    ]
    footer = [f"faces: {family.k} of size {family.common_cardinality}"]
    if config.verify:
        footer.append("verify: " + ("OK" if ok else "MISMATCH"))
    table = format_table(f"HILBERT FUNCTION v={v} w={w}", header, table_rows, footer)
    return CommandResult(report=report, table=table)
