"""Unit tests for command timing and its stats."""

import pytest

from schubert_cone.middleware.timing import (
    CommandStats,
    get_command_stats,
    reset_command_stats,
    timed_command,
    timing,
)
from shared.constants import MAX_SAMPLES


class TestCommandStats:
    """Tests for latency statistics calculation."""

    def test_empty_stats(self) -> None:
        d = CommandStats().to_dict()
        assert d["count"] == 0
        assert d["avg_ms"] == 0.0
        assert d["p50_ms"] == 0.0
        assert d["p95_ms"] == 0.0

    def test_single_sample(self) -> None:
        d = CommandStats(latencies=[0.1]).to_dict()
        assert d["count"] == 1
        assert d["avg_ms"] == 100.0
        assert d["p50_ms"] == 100.0
        assert d["p95_ms"] == 100.0

    def test_multiple_samples(self) -> None:
        d = CommandStats(latencies=[0.1, 0.2, 0.3, 0.4, 0.5]).to_dict()
        assert d["count"] == 5
        assert d["avg_ms"] == pytest.approx(300.0)
        assert d["p50_ms"] == 300.0
        assert d["p95_ms"] == 500.0

    def test_p95_with_outlier(self) -> None:
        stats = CommandStats(latencies=[0.01] * 95 + [1.0] * 5)
        assert stats.to_dict()["p95_ms"] == 1000.0

    def test_record_keeps_recent_samples(self) -> None:
        stats = CommandStats()
        for i in range(MAX_SAMPLES + 10):
            stats.record(float(i))
        assert stats.count == MAX_SAMPLES
        assert stats.latencies[0] == 10.0


class TestTiming:
    def test_context_manager_records(self) -> None:
        with timing("hilbert", v="(1,2)"):
            pass
        assert get_command_stats()["hilbert"]["count"] == 1

    def test_records_on_error(self) -> None:
        with pytest.raises(RuntimeError), timing("paths"):
            raise RuntimeError("boom")
        assert get_command_stats()["paths"]["count"] == 1

    def test_decorator(self) -> None:
        @timed_command("bijection")
        def work(x: int) -> int:
            return x * 2

        assert work(3) == 6
        assert work(4) == 8
        assert get_command_stats()["bijection"]["count"] == 2

    def test_reset_clears_stats(self) -> None:
        with timing("groebner"):
            pass
        reset_command_stats()
        assert get_command_stats() == {}
