"""Command timing for the CLI and the sweep scripts."""

import time
from collections import defaultdict
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import wraps
from typing import ParamSpec, TypeVar

import structlog

from shared.constants import MAX_SAMPLES

logger = structlog.get_logger()

P = ParamSpec("P")
R = TypeVar("R")


@dataclass
class CommandStats:
    """Track latency statistics for a command."""

    latencies: list[float] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.latencies)

    @property
    def p50(self) -> float:
        if not self.latencies:
            return 0.0
        s = sorted(self.latencies)
        return s[len(s) // 2]

    @property
    def p95(self) -> float:
        if not self.latencies:
            return 0.0
        s = sorted(self.latencies)
        return s[min(int(len(s) * 0.95), len(s) - 1)]

    @property
    def avg(self) -> float:
        return sum(self.latencies) / len(self.latencies) if self.latencies else 0.0

    def record(self, duration: float) -> None:
        self.latencies.append(duration)
        if len(self.latencies) > MAX_SAMPLES:
            self.latencies = self.latencies[-MAX_SAMPLES:]

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "avg_ms": round(self.avg * 1000, 2),
            "p50_ms": round(self.p50 * 1000, 2),
            "p95_ms": round(self.p95 * 1000, 2),
        }


_command_stats: dict[str, CommandStats] = defaultdict(CommandStats)


def get_command_stats() -> dict[str, dict]:
    """Get collected command timing stats."""
    return {name: stats.to_dict() for name, stats in _command_stats.items()}


def reset_command_stats() -> None:
    """Reset all collected stats."""
    _command_stats.clear()


@contextmanager
def timing(name: str, **context: object) -> Iterator[None]:
    """Record the wall time of the enclosed block under ``name``."""
    start = time.perf_counter()
    try:
        yield
    finally:
        duration = time.perf_counter() - start
        _command_stats[name].record(duration)
        logger.debug("command_completed", command=name, duration_ms=round(duration * 1000, 2), **context)


def timed_command(name: str, **context: object) -> Callable[[Callable[P, R]], Callable[P, R]]:
    """Decorator form of :func:`timing`; the router wraps every command handler with it."""

    def decorate(func: Callable[P, R]) -> Callable[P, R]:
        @wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
            with timing(name, **context):
                return func(*args, **kwargs)

        return wrapper

    return decorate
