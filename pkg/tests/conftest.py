"""Pytest configuration and fixtures."""

from collections.abc import Generator

import pytest

from schubert_cone.config import Settings, get_settings
from schubert_cone.middleware.timing import reset_command_stats
from schubert_cone.services import combinatorics, hilbert, minor_algebra
from schubert_cone.services.combinatorics import GrassmannIndex, RootMonomial

MEMOIZED = (
    combinatorics.roots,
    combinatorics._chains_in,
    combinatorics._maximal_chains_in,
    combinatorics.distinguished_of,
    combinatorics.dominates_support,
    hilbert.minimal_nonfaces,
    minor_algebra.minor,
    minor_algebra.initial_ideal_generators,
)


def clear_memos() -> None:
    for func in MEMOIZED:
        func.cache_clear()


@pytest.fixture
def test_settings() -> Settings:
    """Get test settings with overrides."""
    return Settings(app_env="test", debug=True, log_level="WARNING", node_budget=None)


@pytest.fixture(autouse=True)
def clean_state() -> Generator[None, None, None]:
    """Fresh settings, service memos and timing stats around every test."""
    get_settings.cache_clear()
    clear_memos()
    reset_command_stats()
    yield
    get_settings.cache_clear()
    clear_memos()
    reset_command_stats()


def idx(n: int, *entries: int) -> GrassmannIndex:
    return GrassmannIndex(n, tuple(entries))


@pytest.fixture
def v12() -> GrassmannIndex:
    """v=(1,2) in I(2,4), all roots positive."""
    return idx(4, 1, 2)


@pytest.fixture
def w24() -> GrassmannIndex:
    """w=(2,4) in I(2,4); the tangent cone at (1,2) is a quadric."""
    return idx(4, 2, 4)


@pytest.fixture
def v13() -> GrassmannIndex:
    """v=(1,3) in I(2,4), with one non-positive root (2,3)."""
    return idx(4, 1, 3)


@pytest.fixture
def example_grid_v() -> GrassmannIndex:
    """The ambient point of the 27-dimensional path example."""
    return idx(27, 1, 2, 3, 4, 5, 10, 11, 12, 13, 18, 19, 20, 21, 22)


@pytest.fixture
def example_grid_w() -> GrassmannIndex:
    return idx(27, 1, 4, 5, 9, 12, 13, 16, 17, 19, 22, 24, 25, 26, 27)


@pytest.fixture
def nine_v() -> GrassmannIndex:
    """v of the multiplicity-nine instance in I(6,13)."""
    return idx(13, 1, 2, 3, 8, 9, 10)


@pytest.fixture
def nine_w() -> GrassmannIndex:
    return idx(13, 4, 6, 7, 10, 11, 13)


@pytest.fixture
def block_v() -> GrassmannIndex:
    """v of the seven-block monomial in I(13,25)."""
    return idx(25, 1, 2, 4, 5, 7, 8, 9, 14, 15, 16, 17, 18, 19)


@pytest.fixture
def block_monomial(block_v: GrassmannIndex) -> RootMonomial:
    """Four depth strata, seven blocks."""
    return RootMonomial.of(
        block_v,
        [
            (13, 1),
            (25, 14),
            (12, 4),
            (23, 16),
            (10, 8),
            (11, 8),
            (21, 18),
            (21, 18),
            (22, 18),
            (10, 9),
            (10, 9),
            (10, 9),
        ],
    )
