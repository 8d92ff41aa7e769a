"""`bijection`: pair dominated monomials with standard monomials in one degree."""

import argparse
from typing import Literal

from schubert_cone.commands.base import CommandResult, format_table
from schubert_cone.schemas.run import Report, RunConfig
from schubert_cone.services.bijection import verify_full_bijection
from shared.constants import PROVENANCE_DIRECT, PROVENANCE_STANDARD_MONOMIALS


class BijectionReport(Report):
    """Response of the bijection command."""

    command: Literal["bijection"] = "bijection"
    degree: int
    monomials: int
    monomials_provenance: str = PROVENANCE_DIRECT
    standard_monomials: int
    standard_monomials_provenance: str = PROVENANCE_STANDARD_MONOMIALS
    injective: bool
    surjective: bool
    round_trip: bool
    failures: list[str] = []


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("bijection", help="check the monomial <-> standard monomial pairing")
    parser.add_argument("--degree", type=int, default=2, help="degree m")


def run(config: RunConfig) -> CommandResult:
    v, w = config.v_index, config.require_w()
    check = verify_full_bijection(v, w, config.degree)
    report = BijectionReport(
        input=config.to_input(),
        ok=check.ok,
        degree=check.degree,
        monomials=check.monomials,
        standard_monomials=check.standard_monomials,
        injective=check.injective,
        surjective=check.surjective,
        round_trip=check.round_trip,
        failures=check.failures,
    )
    summary = f"{check.monomials} <-> {check.standard_monomials}, round-trip {'OK' if check.ok else 'FAILED'}"
    table = format_table(
        f"BIJECTION v={v} w={w} m={check.degree}",
        ["injective", "surjective", "round_trip"],
        [[check.injective, check.surjective, check.round_trip]],
        [summary, *check.failures[:20]],
    )
    return CommandResult(report=report, table=table)
