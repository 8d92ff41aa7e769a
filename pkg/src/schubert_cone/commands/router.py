"""Command router that aggregates all subcommands."""

import argparse
from collections.abc import Callable

from schubert_cone import __version__
from schubert_cone.commands import bijection, groebner, hilbert, multiplicity, paths
from schubert_cone.commands.base import CommandResult
from schubert_cone.config import get_settings
from schubert_cone.middleware.timing import timed_command
from schubert_cone.schemas.run import RunConfig
from shared.constants import OUTPUT_FORMATS

Handler = Callable[[RunConfig], CommandResult]

COMMANDS = {
    "hilbert": hilbert,
    "multiplicity": multiplicity,
    "paths": paths,
    "bijection": bijection,
    "groebner": groebner,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubert-cone",
        description="Hilbert functions, multiplicities, bijections, lattice paths and Groebner "
        "checks for tangent cones of Grassmannian Schubert varieties",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--d", type=int, required=True, help="size of the index sets")
    parser.add_argument("--n", type=int, required=True, help="ambient dimension")
    parser.add_argument("--v", required=True, help="torus-fixed point, e.g. 1,2")
    parser.add_argument("--w", default=None, help="Schubert variety index, e.g. 2,4")
    parser.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default="json")
    parser.add_argument("--verify", action="store_true", help="cross-check with an independent method")
    parser.add_argument("--log-level", default=None, help="override SCHUBERT_CONE_LOG_LEVEL")

    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMANDS.values():
        module.add_parser(subparsers)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Build the validated config; options a subcommand does not define keep their defaults."""
    values = {
        key: value
        for key, value in vars(args).items()
        if key in RunConfig.model_fields and value is not None
    }
    if "max_degree" not in values:
        values["max_degree"] = get_settings().default_max_degree
    return RunConfig(**values)


def handler_for(config: RunConfig) -> Handler:
    """The subcommand handler, timed under the command name."""
    w = str(config.w) if config.w is not None else None
    timed = timed_command(config.command, v=str(config.v), w=w)
    return timed(COMMANDS[config.command].run)
