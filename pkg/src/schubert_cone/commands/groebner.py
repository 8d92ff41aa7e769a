"""`groebner`: initial terms of the minors and, optionally, generator reduction."""

import argparse
from typing import Literal

import structlog
from pydantic import BaseModel

from schubert_cone.commands.base import CommandResult, format_table
from schubert_cone.schemas.run import Report, RunConfig
from schubert_cone.services.hilbert import hilbert_direct
from schubert_cone.services.minor_algebra import (
    check_initial_terms,
    initial_ideal_hilbert,
    reducible_indices,
    verify_generator_reduction,
)

logger = structlog.get_logger()


# =============================================================================
# Report Models
# =============================================================================


class Violation(BaseModel):
    theta: list[int]
    family: int
    initial: str
    expected: str


class Reduction(BaseModel):
    theta: list[int]
    source: str
    terms: int


class IdealCount(BaseModel):
    m: int
    standard: int
    hilbert: int


class GroebnerReport(Report):
    """Response of the groebner command."""

    command: Literal["groebner"] = "groebner"
    families: list[int]
    checked: int
    violations: list[Violation]
    reductions: list[Reduction] | None = None
    ideal_counts: list[IdealCount] | None = None


# =============================================================================
# Command
# =============================================================================


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("groebner", help="initial terms of the minors f_theta")
    parser.add_argument("--families", default=None, help="comma-separated order families, e.g. 1,3")
    parser.add_argument("--reduction", action="store_true", help="reduce every f_theta, theta not below w")


def run(config: RunConfig) -> CommandResult:
    v, w = config.v_index, config.w_index
    report_terms = check_initial_terms(v, w, config.families)
    ok = report_terms.ok

    reductions: list[Reduction] | None = None
    if config.reduction:
        w = config.require_w()
        reductions = []
        for theta in reducible_indices(v, w):
            certificate = verify_generator_reduction(v, w, theta)
            reductions.append(
                Reduction(theta=list(theta.entries), source=certificate.source, terms=len(certificate.terms))
            )

    counts: list[IdealCount] | None = None
    if config.verify and w is not None:
        counts = []
        for m in range(config.max_degree + 1):
            standard, expected = initial_ideal_hilbert(v, w, m), hilbert_direct(v, w, m)
            counts.append(IdealCount(m=m, standard=standard, hilbert=expected))
            if standard != expected:
                ok = False
                logger.error("initial_ideal_mismatch", m=m, standard=standard, hilbert=expected)

    report = GroebnerReport(
        input=config.to_input(),
        ok=ok,
        families=list(report_terms.families),
        checked=report_terms.checked,
        violations=[Violation(**item.to_dict()) for item in report_terms.violations],
        reductions=reductions,
        ideal_counts=counts,
    )
    per_family = report_terms.checked // len(report_terms.families)
    rows = [
        [f, per_family, sum(1 for x in report_terms.violations if x.family == f)]
        for f in report_terms.families
    ]
    footer = ["initial terms: " + ("pass" if report_terms.ok else "FAIL")]
    if reductions is not None:
        footer.append(f"reduced {len(reductions)} minors")
    for c in counts or []:
        footer.append(f"m={c.m}: standard {c.standard}, hilbert {c.hilbert}")
    title = f"GROEBNER v={v}" + (f" w={w}" if w is not None else "")
    table = format_table(title, ["family", "checked", "violations"], rows, footer)
    return CommandResult(report=report, table=table)
