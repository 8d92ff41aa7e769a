"""Command-line entry point."""

import sys
from collections.abc import Sequence

import structlog
from pydantic import ValidationError

from schubert_cone.commands.router import build_parser, config_from_args, handler_for
from schubert_cone.config import get_settings
from schubert_cone.services.budget import work_budget
from shared.constants import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED
from shared.errors import BudgetExceededError, InvalidInputError, VerificationError

logger = structlog.get_logger()


def configure_logging(log_level: str | None = None) -> None:
    """Structured logs to stderr; stdout carries only reports."""
    settings = get_settings()
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.dev.set_exc_info,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.dev.ConsoleRenderer() if settings.debug else structlog.processors.JSONRenderer(),
        ],
        wrapper_class=structlog.make_filtering_bound_logger((log_level or settings.log_level).upper()),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


def _fail(message: str, code: int) -> int:
    print(f"schubert-cone: error: {message}", file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command and return the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    configure_logging(args.log_level)
    settings = get_settings()
    try:
        config = config_from_args(args)
        with work_budget(settings.node_budget):
            result = handler_for(config)(config)
    except ValidationError as exc:
        messages = "; ".join(err["msg"] for err in exc.errors())
        return _fail(messages, EXIT_USAGE)
    except (InvalidInputError, BudgetExceededError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    except VerificationError as exc:
        logger.error("verification_failed", error=str(exc), **exc.witness)
        return _fail(str(exc), EXIT_VERIFICATION_FAILED)

    if config.output_format == "json":
        sys.stdout.write(result.to_json().decode() + "\n")
    elif result.document is not None:
        sys.stdout.write(result.document)
    else:
        sys.stdout.write(result.table)
    return EXIT_OK if result.ok else EXIT_VERIFICATION_FAILED


def run() -> None:
    """Console script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
