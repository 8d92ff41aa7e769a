"""Non-intersecting lattice paths for the maximal dominated sets.

The grid has the non-entries of v as rows and the entries of v as columns; its points in
the region row > col are exactly N^v. A step moves to the next row on the row axis or the
next column on the column axis. Each element (R, C) of the distinguished set of w owns
one path, from (least non-entry above C, C) to (R, greatest entry below R), and a tuple of
vertex-disjoint paths is the same thing as a maximal w-dominated subset of N^v.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cached_property

import structlog

from schubert_cone.services.bijection import block_decompose
from schubert_cone.services.budget import charge
from schubert_cone.services.combinatorics import (
    GrassmannIndex,
    Root,
    RootMonomial,
    check_root,
    distinguished_of,
    dominates_monomial,
    positive_roots,
    require_leq,
)
from shared.errors import InvalidInputError, VerificationError

logger = structlog.get_logger()


@dataclass(frozen=True)
class PathGrid:
    """Row axis = non-entries of v, column axis = entries of v, both ascending."""

    v: GrassmannIndex

    @property
    def rows(self) -> tuple[int, ...]:
        return self.v.non_entries

    @property
    def cols(self) -> tuple[int, ...]:
        return self.v.entries

    def successor_row(self, r: int) -> int | None:
        i = bisect_right(self.rows, r)
        return self.rows[i] if i < len(self.rows) else None

    def successor_col(self, c: int) -> int | None:
        i = bisect_right(self.cols, c)
        return self.cols[i] if i < len(self.cols) else None

    def contains(self, point: Root) -> bool:
        return point.row in self.rows and point.col in self.cols and point.row > point.col

    def steps(self, point: Root) -> list[Root]:
        """Grid points one step up the row axis or one step along the column axis."""
        found = []
        r = self.successor_row(point.row)
        if r is not None:
            found.append(Root(r, point.col))
        c = self.successor_col(point.col)
        if c is not None and point.row > c:
            found.append(Root(point.row, c))
        return found

    def rank(self, point: Root) -> tuple[int, int]:
        return self.rows.index(point.row), self.cols.index(point.col)


def endpoints(beta: Root, v: GrassmannIndex) -> tuple[Root, Root]:
    """Start and finish of the path owned by ``beta = (R, C)``."""
    beta = check_root(beta, v)
    if not beta.is_positive:
        raise InvalidInputError(f"{beta} is not a positive root for v={v}")
    grid = PathGrid(v)
    big_r, big_c = beta
    start_row = grid.rows[bisect_right(grid.rows, big_c)]
    finish_col = grid.cols[bisect_left(grid.cols, big_r) - 1]
    if not (start_row <= big_r and big_c <= finish_col):
        raise AssertionError(f"degenerate endpoints for {beta}")
    return Root(start_row, big_c), Root(big_r, finish_col)


@dataclass(frozen=True)
class LatticePath:
    """Vertices of one path, start first."""

    grid: PathGrid
    vertices: tuple[Root, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise InvalidInputError("a lattice path has at least one vertex")
        for point in self.vertices:
            if not self.grid.contains(point):
                raise InvalidInputError(f"{point} is not a grid point for v={self.grid.v}")
        for a, b in zip(self.vertices, self.vertices[1:]):
            if b not in self.grid.steps(a):
                raise InvalidInputError(f"{a} -> {b} is not a grid step")

    @property
    def start(self) -> Root:
        return self.vertices[0]

    @property
    def finish(self) -> Root:
        return self.vertices[-1]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class PathTuple:
    """One path per element of the distinguished set of w, ordered by that element's row."""

    v: GrassmannIndex
    w: GrassmannIndex
    paths: tuple[LatticePath, ...]

    def __post_init__(self) -> None:
        anchors = distinguished_of(self.w, self.v).roots
        if len(anchors) != len(self.paths):
            raise InvalidInputError(f"expected {len(anchors)} paths, got {len(self.paths)}")
        seen: set[Root] = set()
        for anchor, path in zip(anchors, self.paths):
            if (path.start, path.finish) != endpoints(anchor, self.v):
                raise InvalidInputError(f"path for {anchor} has the wrong endpoints")
            if seen.intersection(path.vertices):
                raise InvalidInputError("paths intersect")
            seen.update(path.vertices)

    @cached_property
    def vertices(self) -> frozenset[Root]:
        return frozenset(point for path in self.paths for point in path.vertices)


def _routes(grid: PathGrid, start: Root, finish: Root, blocked: set[Root]) -> list[tuple[Root, ...]]:
    found: list[tuple[Root, ...]] = []

    def walk(path: list[Root]) -> None:
        charge()
        here = path[-1]
        if here == finish:
            found.append(tuple(path))
            return
        for nxt in grid.steps(here):
            if nxt.row > finish.row or nxt.col > finish.col or nxt in blocked:
                continue
            path.append(nxt)
            walk(path)
            path.pop()

    if start not in blocked:
        walk([start])
    return found


def enumerate_tuples(v: GrassmannIndex, w: GrassmannIndex) -> list[PathTuple]:
    """All tuples of vertex-disjoint paths, paths chosen in order of their owner's row."""
    require_leq(v, w)
    grid = PathGrid(v)
    anchors = distinguished_of(w, v).roots
    ends = [endpoints(anchor, v) for anchor in anchors]
    found: list[tuple[tuple[Root, ...], ...]] = []

    def place(i: int, chosen: list[tuple[Root, ...]], blocked: set[Root]) -> None:
        if i == len(anchors):
            found.append(tuple(chosen))
            return
        start, finish = ends[i]
        for route in _routes(grid, start, finish, blocked):
            chosen.append(route)
            place(i + 1, chosen, blocked | set(route))
            chosen.pop()

    place(0, [], set())
    found.sort()
    if not literal_steps_agree(v, w):
        logger.warning("literal_steps_differ", v=str(v), w=str(w))
    return [
        PathTuple(v, w, tuple(LatticePath(grid, route) for route in routes)) for routes in found
    ]


def literal_steps_agree(v: GrassmannIndex, w: GrassmannIndex) -> bool:
    """Whether +1 steps and axis-successor steps coincide inside every path's box."""
    for anchor in distinguished_of(w, v):
        start, finish = endpoints(anchor, v)
        rows = [r for r in v.non_entries if start.row <= r <= finish.row]
        cols = [c for c in v.entries if start.col <= c <= finish.col]
        if rows != list(range(start.row, finish.row + 1)):
            return False
        if cols != list(range(start.col, finish.col + 1)):
            return False
    return True


def tuple_to_monomial(t: PathTuple) -> RootMonomial:
    """The square-free monomial of all path vertices."""
    return RootMonomial.of(t.v, sorted(t.vertices))


def _is_maximal(v: GrassmannIndex, w: GrassmannIndex, m: RootMonomial) -> bool:
    if not m.is_square_free or any(not root.is_positive for root in m.support):
        return False
    if not dominates_monomial(w, v, m):
        return False
    present = set(m.support)
    return not any(
        dominates_monomial(w, v, m + RootMonomial.of(v, [root]))
        for root in positive_roots(v)
        if root not in present
    )


def monomial_to_tuple(m: RootMonomial, w: GrassmannIndex) -> PathTuple:
    """Read a maximal dominated set as paths: each block is one path."""
    v = m.v
    require_leq(v, w)
    if not _is_maximal(v, w, m):
        raise InvalidInputError(f"{m} is not a maximal square-free w-dominated set for w={w}")
    grid = PathGrid(v)
    if m.is_empty:
        return PathTuple(v, w, ())
    by_summary = {block.summary: block.elements for block in block_decompose(m).blocks}
    anchors = distinguished_of(w, v).roots
    if set(by_summary) != set(anchors):
        raise VerificationError(
            "block summaries of a maximal set differ from the distinguished set",
            monomial=str(m),
            w=str(w),
        )
    paths = tuple(LatticePath(grid, by_summary[anchor]) for anchor in anchors)
    return PathTuple(v, w, paths)
