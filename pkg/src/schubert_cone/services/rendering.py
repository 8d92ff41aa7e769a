"""ASCII and SVG pictures of the path grid.

Rows of the grid are the non-entries of v (increasing downward), columns the entries of
v (increasing to the right); only points with row > col are drawn. Output is a pure
function of its input and carries the render format version.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import lru_cache

import structlog
from jinja2 import Environment, select_autoescape

from schubert_cone.config import get_settings
from schubert_cone.services.bijection import block_decompose
from schubert_cone.services.combinatorics import (
    GrassmannIndex,
    Root,
    RootMonomial,
    distinguished_of,
    require_leq,
)
from schubert_cone.services.lattice_paths import PathGrid, PathTuple
from shared.constants import RENDER_FORMAT_VERSION, RENDER_FORMATS
from shared.errors import InvalidInputError

logger = structlog.get_logger()

VERTEX = "o"
ANCHOR = "*"
ANCHOR_VERTEX = "@"
EMPTY = "."

SVG_TEMPLATE = """\
<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{{ width }}" height="{{ height }}" \
viewBox="0 0 {{ width }} {{ height }}" data-format="{{ format_version }}">
<!-- {{ format_version }} -->
<title>{{ title }}</title>
<rect x="0" y="0" width="{{ width }}" height="{{ height }}" fill="#ffffff"/>
{% for panel in panels %}
<g class="panel" transform="translate({{ panel.x }},{{ panel.y }})">
  <text x="0" y="{{ panel.caption_y }}" font-family="monospace" font-size="12">{{ panel.caption }}</text>
{% for label in panel.labels %}
  <text x="{{ label.x }}" y="{{ label.y }}" font-family="monospace" font-size="10" \
text-anchor="{{ label.anchor }}">{{ label.text }}</text>
{% endfor %}
{% for line in panel.lines %}
  <polyline points="{{ line }}" fill="none" stroke="#1f4e79" stroke-width="3" \
stroke-linejoin="round" stroke-linecap="round"/>
{% endfor %}
{% for dot in panel.dots %}
  <circle cx="{{ dot.x }}" cy="{{ dot.y }}" r="{{ dot.r }}" fill="{{ dot.fill }}" \
stroke="{{ dot.stroke }}" stroke-width="{{ dot.stroke_width }}"/>
{% if dot.text %}
  <text x="{{ dot.x + dot.r + 1 }}" y="{{ dot.y - dot.r }}" font-family="monospace" \
font-size="9">{{ dot.text }}</text>
{% endif %}
{% endfor %}
</g>
{% endfor %}
</svg>
"""


@lru_cache
def _environment() -> Environment:
    return Environment(
        autoescape=select_autoescape(default=True, default_for_string=True),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )


@dataclass
class Scene:
    """Everything one panel shows."""

    v: GrassmannIndex
    caption: str
    vertices: set[Root] = field(default_factory=set)
    anchors: set[Root] = field(default_factory=set)
    multiplicities: dict[Root, int] = field(default_factory=dict)
    lines: list[tuple[Root, ...]] = field(default_factory=list)

    @property
    def grid(self) -> PathGrid:
        return PathGrid(self.v)

    def mark(self, point: Root) -> str:
        if point in self.multiplicities:
            mult = self.multiplicities[point]
            return str(mult) if mult < 10 else "+"
        if point in self.vertices:
            return ANCHOR_VERTEX if point in self.anchors else VERTEX
        return ANCHOR if point in self.anchors else EMPTY


def _check_format(fmt: str) -> None:
    if fmt not in RENDER_FORMATS:
        raise InvalidInputError(f"unknown render format {fmt!r}; expected one of {RENDER_FORMATS}")


def tuple_scene(t: PathTuple, caption: str = "") -> Scene:
    return Scene(
        v=t.v,
        caption=caption or f"v={t.v} w={t.w}",
        vertices=set(t.vertices),
        anchors=set(distinguished_of(t.w, t.v)),
        lines=[path.vertices for path in t.paths],
    )


def monomial_scene(v: GrassmannIndex, w: GrassmannIndex | None, m: RootMonomial) -> Scene:
    """Multiplicities plus one outline per block."""
    if m.v != v:
        raise InvalidInputError(f"monomial lives over {m.v}, not {v}")
    lines: list[tuple[Root, ...]] = []
    if not m.is_empty and all(root.is_positive for root in m.support):
        lines = [tuple(dict.fromkeys(b.elements)) for b in block_decompose(m).blocks]
    anchors = set(distinguished_of(w, v)) if w is not None else set()
    return Scene(
        v=v,
        caption=f"v={v}" + (f" w={w}" if w is not None else "") + f" m={m}",
        anchors=anchors,
        multiplicities=dict(m.counts),
        lines=lines,
    )


# =============================================================================
# ASCII
# =============================================================================


def _ascii_panel(scene: Scene) -> list[str]:
    grid = scene.grid
    width = max(len(str(x)) for x in grid.rows + grid.cols) + 1
    lines = [f"## {scene.caption}"]
    lines.append(" " * width + "".join(str(c).rjust(width) for c in grid.cols))
    for r in grid.rows:
        cells = [
            scene.mark(Root(r, c)).rjust(width) if r > c else " " * width for c in grid.cols
        ]
        lines.append((str(r).rjust(width) + "".join(cells)).rstrip())
    return lines


def _ascii(scenes: Sequence[Scene]) -> str:
    out = [f"# {RENDER_FORMAT_VERSION}"]
    for scene in scenes:
        out.extend(_ascii_panel(scene))
    return "\n".join(out) + "\n"


# =============================================================================
# SVG
# =============================================================================


def _svg(scenes: Sequence[Scene], title: str, columns: int = 3) -> str:
    settings = get_settings()
    cell, margin = settings.svg_cell_size, settings.svg_margin
    panels = []
    widths, heights = [], []
    for scene in scenes:
        grid = scene.grid
        widths.append(margin + cell * len(grid.cols))
        heights.append(margin + cell * len(grid.rows) + cell // 2)
    panel_w = max(widths, default=margin)
    panel_h = max(heights, default=margin)
    columns = max(1, min(columns, len(scenes)))

    for i, scene in enumerate(scenes):
        grid = scene.grid

        def at(point: Root, grid: PathGrid = grid) -> tuple[int, int]:
            ri, ci = grid.rank(point)
            return margin + ci * cell, margin + ri * cell

        labels = [
            {"x": margin + ci * cell, "y": margin - cell // 2, "text": c, "anchor": "middle"}
            for ci, c in enumerate(grid.cols)
        ] + [
            {"x": margin - cell // 2, "y": margin + ri * cell + 4, "text": r, "anchor": "end"}
            for ri, r in enumerate(grid.rows)
        ]
        dots = []
        for r in grid.rows:
            for c in grid.cols:
                if r <= c:
                    continue
                point = Root(r, c)
                x, y = at(point)
                mark = scene.mark(point)
                highlighted = point in scene.anchors
                filled = mark not in (EMPTY, ANCHOR)
                dots.append(
                    {
                        "x": x,
                        "y": y,
                        "r": cell // 5 if filled or highlighted else cell // 10,
                        "fill": "#1f4e79" if filled else "#ffffff",
                        "stroke": "#c0392b" if highlighted else "#7f8c8d",
                        "stroke_width": 2 if highlighted else 1,
                        "text": mark if mark.isdigit() and mark != "1" else "",
                    }
                )
        lines = [
            " ".join(f"{x},{y}" for x, y in (at(p) for p in line)) for line in scene.lines if line
        ]
        panels.append(
            {
                "x": (i % columns) * panel_w,
                "y": (i // columns) * panel_h,
                "caption_y": 12,
                "caption": scene.caption,
                "labels": labels,
                "lines": lines,
                "dots": dots,
            }
        )
    rows_of_panels = max(1, -(-len(scenes) // columns))
    return _environment().from_string(SVG_TEMPLATE).render(
        width=panel_w * columns,
        height=panel_h * rows_of_panels,
        title=title,
        format_version=RENDER_FORMAT_VERSION,
        panels=panels,
    )


# =============================================================================
# Public entry points
# =============================================================================


def render(
    v: GrassmannIndex,
    w: GrassmannIndex,
    item: PathTuple | RootMonomial,
    fmt: str,
) -> str:
    """Draw one path tuple or one monomial on the grid of v, highlighting the set of w."""
    _check_format(fmt)
    require_leq(v, w)
    if isinstance(item, PathTuple):
        if (item.v, item.w) != (v, w):
            raise InvalidInputError("path tuple belongs to a different pair")
        scene = tuple_scene(item)
    else:
        scene = monomial_scene(v, w, item)
    if fmt == "ascii":
        return _ascii([scene])
    return _svg([scene], title=scene.caption, columns=1)


def render_monomial(v: GrassmannIndex, m: RootMonomial, fmt: str) -> str:
    """Draw a monomial with its multiplicities and block outlines."""
    _check_format(fmt)
    scene = monomial_scene(v, None, m)
    if fmt == "ascii":
        return _ascii([scene])
    return _svg([scene], title=scene.caption, columns=1)


def render_sheet(
    v: GrassmannIndex, w: GrassmannIndex, tuples: Sequence[PathTuple], fmt: str
) -> str:
    """All tuples as panels of one document."""
    _check_format(fmt)
    require_leq(v, w)
    scenes = [
        tuple_scene(t, caption=f"{i}/{len(tuples)}") for i, t in enumerate(tuples, start=1)
    ]
    if not scenes:
        scenes = [Scene(v=v, caption="0/0", anchors=set(distinguished_of(w, v)))]
    logger.debug("sheet_rendered", v=str(v), w=str(w), panels=len(scenes), fmt=fmt)
    if fmt == "ascii":
        return _ascii(scenes)
    return _svg(scenes, title=f"v={v} w={w}")
