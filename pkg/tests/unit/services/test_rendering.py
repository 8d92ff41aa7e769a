"""Unit tests for ASCII and SVG rendering."""

import pytest

from schubert_cone.config import get_settings
from schubert_cone.services.combinatorics import GrassmannIndex, RootMonomial
from schubert_cone.services.lattice_paths import enumerate_tuples
from schubert_cone.services.rendering import render, render_monomial, render_sheet
from shared.constants import RENDER_FORMAT_VERSION
from shared.errors import InvalidInputError


def grid_lines(text: str) -> list[str]:
    """Drop the version header, caption and column labels."""
    return text.splitlines()[3:]


def marks(text: str, symbol: str) -> int:
    return sum(line.count(symbol) for line in grid_lines(text))


class TestAscii:
    def test_header(self, v12: GrassmannIndex, w24: GrassmannIndex) -> None:
        t = enumerate_tuples(v12, w24)[0]
        text = render(v12, w24, t, "ascii")
        assert text.splitlines()[0] == f"# {RENDER_FORMAT_VERSION}"
        assert text.splitlines()[1].startswith("## v=(1,2) w=(2,4)")

    def test_path_missing_the_anchor(self, v12: GrassmannIndex, w24: GrassmannIndex) -> None:
        text = render(v12, w24, enumerate_tuples(v12, w24)[0], "ascii")
        assert marks(text, "o") == 3
        assert marks(text, "*") == 1
        assert marks(text, "@") == 0

    def test_path_through_the_anchor(self, v12: GrassmannIndex, w24: GrassmannIndex) -> None:
        text = render(v12, w24, enumerate_tuples(v12, w24)[1], "ascii")
        assert marks(text, "o") == 2
        assert marks(text, "@") == 1
        assert marks(text, ".") == 1

    def test_empty_tuple(self, v12: GrassmannIndex) -> None:
        text = render(v12, v12, enumerate_tuples(v12, v12)[0], "ascii")
        assert marks(text, ".") == 4
        assert marks(text, "*") == 0

    def test_monomial_multiplicities(self, v12: GrassmannIndex) -> None:
        m = RootMonomial.of(v12, [(3, 1), (3, 1), (4, 2)])
        text = render_monomial(v12, m, "ascii")
        assert marks(text, "2") == 1
        assert marks(text, ".") == 2

    def test_sheet_has_one_panel_per_tuple(self, nine_v: GrassmannIndex, nine_w: GrassmannIndex) -> None:
        tuples = enumerate_tuples(nine_v, nine_w)
        text = render_sheet(nine_v, nine_w, tuples, "ascii")
        captions = [line for line in text.splitlines() if line.startswith("## ")]
        assert captions == [f"## {i}/9" for i in range(1, 10)]


class TestSvg:
    def test_carries_format_version(self, v12: GrassmannIndex, w24: GrassmannIndex) -> None:
        text = render(v12, w24, enumerate_tuples(v12, w24)[0], "svg")
        assert text.startswith("<?xml")
        assert f'data-format="{RENDER_FORMAT_VERSION}"' in text
        assert text.count('<g class="panel"') == 1
        assert text.count("<polyline") == 1

    def test_deterministic(self, nine_v: GrassmannIndex, nine_w: GrassmannIndex) -> None:
        tuples = enumerate_tuples(nine_v, nine_w)
        assert render_sheet(nine_v, nine_w, tuples, "svg") == render_sheet(
            nine_v, nine_w, tuples, "svg"
        )

    def test_nine_panels(self, nine_v: GrassmannIndex, nine_w: GrassmannIndex) -> None:
        text = render_sheet(nine_v, nine_w, enumerate_tuples(nine_v, nine_w), "svg")
        assert text.count('<g class="panel"') == 9
        assert text.count("<polyline") == 9 * 5

    def test_empty_sheet(self, v12: GrassmannIndex, w24: GrassmannIndex) -> None:
        text = render_sheet(v12, w24, [], "svg")
        assert text.count('<g class="panel"') == 1
        assert "0/0" in text

    def test_cell_size_from_settings(
        self, monkeypatch: pytest.MonkeyPatch, v12: GrassmannIndex, w24: GrassmannIndex
    ) -> None:
        t = enumerate_tuples(v12, w24)[0]
        small = render(v12, w24, t, "svg")
        monkeypatch.setenv("SCHUBERT_CONE_SVG_CELL_SIZE", "40")
        get_settings.cache_clear()
        assert render(v12, w24, t, "svg") != small


class TestErrors:
    def test_unknown_format(self, v12: GrassmannIndex, w24: GrassmannIndex) -> None:
        with pytest.raises(InvalidInputError):
            render(v12, w24, enumerate_tuples(v12, w24)[0], "png")

    def test_tuple_of_another_pair(self, v12: GrassmannIndex, w24: GrassmannIndex) -> None:
        t = enumerate_tuples(v12, v12)[0]
        with pytest.raises(InvalidInputError):
            render(v12, w24, t, "ascii")

    def test_monomial_over_another_v(self, v12: GrassmannIndex, v13: GrassmannIndex) -> None:
        with pytest.raises(InvalidInputError):
            render_monomial(v12, RootMonomial.of(v13, [(4, 1)]), "ascii")
