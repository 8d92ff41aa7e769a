"""Index sets, roots, chains and domination.

Everything here is relative to an ambient index ``v`` in I(d,n). A root ``(r, c)`` has its
column ``c`` among the entries of ``v`` and its row ``r`` among the non-entries; it is
positive when ``r > c``. Roots are compared in the chain order: ``(r, c) > (r', c')``
when ``r > r'`` and ``c < c'``.
"""

from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import NamedTuple

import structlog

from schubert_cone.services.budget import charge
from shared.errors import InvalidInputError

logger = structlog.get_logger()


# =============================================================================
# Index sets
# =============================================================================


@dataclass(frozen=True)
class GrassmannIndex:
    """A strictly increasing d-tuple drawn from {1..n}."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise InvalidInputError("an index set needs at least one entry")
        if len(entries) > self.n:
            raise InvalidInputError(f"d={len(entries)} exceeds n={self.n}")
        if entries[0] < 1 or entries[-1] > self.n:
            raise InvalidInputError(f"entries {entries} fall outside 1..{self.n}")
        if any(a >= b for a, b in zip(entries, entries[1:])):
            raise InvalidInputError(f"entries {entries} are not strictly increasing")

    @classmethod
    def from_set(cls, n: int, values: Iterable[int]) -> "GrassmannIndex":
        return cls(n, tuple(sorted(set(values))))

    @classmethod
    def parse(cls, text: str, n: int, d: int | None = None) -> "GrassmannIndex":
        """Parse a comma-separated entry list such as ``"1,2,4"``."""
        try:
            entries = tuple(int(part) for part in text.replace(" ", "").split(",") if part)
        except ValueError:
            raise InvalidInputError(f"cannot parse index set {text!r}") from None
        if d is not None and len(entries) != d:
            raise InvalidInputError(f"index set {text!r} has {len(entries)} entries, expected d={d}")
        return cls(n, entries)

    @property
    def d(self) -> int:
        return len(self.entries)

    @cached_property
    def entry_set(self) -> frozenset[int]:
        return frozenset(self.entries)

    @cached_property
    def non_entries(self) -> tuple[int, ...]:
        return tuple(x for x in range(1, self.n + 1) if x not in self.entry_set)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __contains__(self, x: object) -> bool:
        return x in self.entry_set

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


def grassmann_indices(d: int, n: int) -> list[GrassmannIndex]:
    """All of I(d,n) in lexicographic order."""
    if not 1 <= d <= n:
        raise InvalidInputError(f"need 1 <= d <= n, got d={d}, n={n}")
    return [GrassmannIndex(n, entries) for entries in combinations(range(1, n + 1), d)]


def _check_same_shape(u: GrassmannIndex, y: GrassmannIndex) -> None:
    if u.n != y.n or u.d != y.d:
        raise InvalidInputError(f"{u} and {y} live in different I(d,n)")


def bruhat_leq(u: GrassmannIndex, y: GrassmannIndex) -> bool:
    """Componentwise comparison u <= y."""
    _check_same_shape(u, y)
    return all(a <= b for a, b in zip(u.entries, y.entries))


def require_leq(v: GrassmannIndex, w: GrassmannIndex) -> None:
    """Reject pairs with v not Bruhat-below w."""
    if not bruhat_leq(v, w):
        raise InvalidInputError(f"v={v} is not Bruhat-below w={w}")


def v_degree(theta: GrassmannIndex, v: GrassmannIndex) -> int:
    """Number of entries of theta that are not entries of v."""
    _check_same_shape(theta, v)
    return len(theta.entry_set - v.entry_set)


# =============================================================================
# Roots and monomials
# =============================================================================


class Root(NamedTuple):
    row: int
    col: int

    @property
    def is_positive(self) -> bool:
        return self.row > self.col

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


def chain_gt(a: Root, b: Root) -> bool:
    """The chain order: a > b iff a.row > b.row and a.col < b.col."""
    return a.row > b.row and a.col < b.col


def comparable(a: Root, b: Root) -> bool:
    return chain_gt(a, b) or chain_gt(b, a)


def check_root(root: Root, v: GrassmannIndex) -> Root:
    """Validate ``root`` against the ambient ``v`` and return it as a :class:`Root`."""
    r, c = int(root[0]), int(root[1])
    if not (1 <= r <= v.n and 1 <= c <= v.n):
        raise InvalidInputError(f"root ({r},{c}) falls outside 1..{v.n}")
    if r in v or c not in v:
        raise InvalidInputError(f"({r},{c}) is not a root for v={v}")
    return Root(r, c)


@lru_cache(maxsize=1024)
def roots(v: GrassmannIndex) -> tuple[Root, ...]:
    """R^v sorted by (row, col)."""
    return tuple(Root(r, c) for r in v.non_entries for c in v.entries)


def positive_roots(v: GrassmannIndex) -> tuple[Root, ...]:
    """N^v sorted by (row, col)."""
    return tuple(root for root in roots(v) if root.is_positive)


def nonpositive_roots(v: GrassmannIndex) -> tuple[Root, ...]:
    """R^v minus N^v sorted by (row, col)."""
    return tuple(root for root in roots(v) if not root.is_positive)


@dataclass(frozen=True)
class RootMonomial:
    """A finite multiset of roots for ``v``, stored as sorted (root, multiplicity) pairs."""

    v: GrassmannIndex
    counts: tuple[tuple[Root, int], ...] = ()

    def __post_init__(self) -> None:
        merged: Counter[Root] = Counter()
        for root, mult in self.counts:
            if mult < 1:
                raise InvalidInputError(f"multiplicity of {root} must be positive, got {mult}")
            merged[check_root(root, self.v)] += mult
        object.__setattr__(self, "counts", tuple(sorted(merged.items())))

    @classmethod
    def of(cls, v: GrassmannIndex, items: Iterable[Sequence[int]]) -> "RootMonomial":
        """Monomial with one factor per item; repeats raise the multiplicity."""
        merged = Counter(Root(int(r), int(c)) for r, c in items)
        return cls(v, tuple(merged.items()))

    @property
    def degree(self) -> int:
        return sum(mult for _, mult in self.counts)

    @property
    def support(self) -> tuple[Root, ...]:
        return tuple(root for root, _ in self.counts)

    @property
    def is_empty(self) -> bool:
        return not self.counts

    @property
    def is_square_free(self) -> bool:
        return all(mult == 1 for _, mult in self.counts)

    def multiplicity(self, root: Root) -> int:
        return dict(self.counts).get(root, 0)

    def arranged(self) -> tuple[Root, ...]:
        """Roots repeated by multiplicity, in (row, col) order."""
        return tuple(root for root, mult in self.counts for _ in range(mult))

    def positive_part(self) -> "RootMonomial":
        return RootMonomial(self.v, tuple(item for item in self.counts if item[0].is_positive))

    def nonpositive_part(self) -> "RootMonomial":
        return RootMonomial(self.v, tuple(item for item in self.counts if not item[0].is_positive))

    def divides(self, other: "RootMonomial") -> bool:
        theirs = dict(other.counts)
        return all(theirs.get(root, 0) >= mult for root, mult in self.counts)

    def __add__(self, other: "RootMonomial") -> "RootMonomial":
        if other.v != self.v:
            raise InvalidInputError("cannot multiply monomials over different ambient v")
        return RootMonomial(self.v, self.counts + other.counts)

    def __contains__(self, root: object) -> bool:
        return any(root == r for r, _ in self.counts)

    def __str__(self) -> str:
        parts = [str(root) + (f"^{mult}" if mult > 1 else "") for root, mult in self.counts]
        return "{" + ",".join(parts) + "}"


# =============================================================================
# Chains
# =============================================================================


@dataclass(frozen=True)
class VChain:
    """A strictly decreasing sequence of positive roots, head first."""

    v: GrassmannIndex
    roots: tuple[Root, ...] = ()

    def __post_init__(self) -> None:
        checked = tuple(check_root(root, self.v) for root in self.roots)
        object.__setattr__(self, "roots", checked)
        for root in checked:
            if not root.is_positive:
                raise InvalidInputError(f"{root} is not a positive root for v={self.v}")
        for a, b in zip(checked, checked[1:]):
            if not chain_gt(a, b):
                raise InvalidInputError(f"{a} > {b} fails in the chain order")

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[Root]:
        return iter(self.roots)


def _as_chain(v: GrassmannIndex, chain: VChain | Sequence[Sequence[int]]) -> VChain:
    if isinstance(chain, VChain):
        if chain.v != v:
            raise InvalidInputError("chain belongs to a different ambient v")
        return chain
    return VChain(v, tuple(Root(int(r), int(c)) for r, c in chain))


def apply_chain(v: GrassmannIndex, chain: VChain | Sequence[Sequence[int]]) -> GrassmannIndex:
    """Replace the chain's columns in v by its rows."""
    chain = _as_chain(v, chain)
    cols = {root.col for root in chain}
    rows = {root.row for root in chain}
    return GrassmannIndex.from_set(v.n, (v.entry_set - cols) | rows)


def dominates_chain(
    w: GrassmannIndex, v: GrassmannIndex, chain: VChain | Sequence[Sequence[int]]
) -> bool:
    """True iff w is Bruhat-above the result of applying the chain to v."""
    require_leq(v, w)
    return bruhat_leq(apply_chain(v, chain), w)


@lru_cache(maxsize=4096)
def _chains_in(support: frozenset[Root]) -> tuple[tuple[Root, ...], ...]:
    ordered = sorted((root for root in support if root.is_positive), key=lambda x: (-x.row, x.col))
    found: list[tuple[Root, ...]] = []

    def extend(prefix: tuple[Root, ...]) -> None:
        charge()
        found.append(prefix)
        for root in ordered:
            if chain_gt(prefix[-1], root):
                extend(prefix + (root,))

    for start in ordered:
        extend((start,))
    return tuple(found)


def enumerate_chains(support: Iterable[Root]) -> list[tuple[Root, ...]]:
    """Every non-empty chain of positive roots inside ``support``, head first."""
    return list(_chains_in(frozenset(Root(*root) for root in support)))


def _covers(support: frozenset[Root]) -> dict[Root, list[Root]]:
    below: dict[Root, list[Root]] = {}
    for a in support:
        lower = [b for b in support if chain_gt(a, b)]
        below[a] = sorted(
            (b for b in lower if not any(chain_gt(c, b) for c in lower)),
            key=lambda x: (-x.row, x.col),
        )
    return below


@lru_cache(maxsize=4096)
def _maximal_chains_in(support: frozenset[Root]) -> tuple[tuple[Root, ...], ...]:
    positive = frozenset(root for root in support if root.is_positive)
    covers = _covers(positive)
    tops = sorted(
        (a for a in positive if not any(chain_gt(b, a) for b in positive)),
        key=lambda x: (-x.row, x.col),
    )
    found: list[tuple[Root, ...]] = []

    def walk(path: tuple[Root, ...]) -> None:
        charge()
        nxt = covers[path[-1]]
        if not nxt:
            found.append(path)
        for b in nxt:
            walk(path + (b,))

    for top in tops:
        walk((top,))
    return tuple(found)


def maximal_chains(support: Iterable[Root]) -> list[tuple[Root, ...]]:
    """Chains inside ``support`` that no further element of ``support`` can lengthen."""
    return list(_maximal_chains_in(frozenset(Root(*root) for root in support)))


# =============================================================================
# Distinguished sets
# =============================================================================


def _has_distinct_lines(items: Sequence[Root]) -> bool:
    return len({r for r, _ in items}) == len(items) == len({c for _, c in items})


def is_distinguished(items: Iterable[Root]) -> bool:
    """No shared row or column, and for r < R either C < c or r < C."""
    items = sorted(set(items))
    if not _has_distinct_lines(items):
        return False
    for (r, c), (big_r, big_c) in combinations(items, 2):
        if r < big_r and not (big_c < c or r < big_c):
            return False
    return True


@dataclass(frozen=True)
class DistinguishedSet:
    """Positive roots with distinct rows and columns satisfying the exchange condition."""

    v: GrassmannIndex
    roots: tuple[Root, ...] = field(default=())

    def __post_init__(self) -> None:
        checked = tuple(sorted(check_root(root, self.v) for root in self.roots))
        object.__setattr__(self, "roots", checked)
        if any(not root.is_positive for root in checked):
            raise InvalidInputError("a distinguished set lies in N^v")
        if not is_distinguished(checked):
            raise InvalidInputError(f"{[str(r) for r in checked]} is not distinguished")

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[Root]:
        return iter(self.roots)

    def __contains__(self, root: object) -> bool:
        return root in self.roots

    def as_monomial(self) -> RootMonomial:
        return RootMonomial.of(self.v, self.roots)


@lru_cache(maxsize=8192)
def distinguished_of(w: GrassmannIndex, v: GrassmannIndex) -> DistinguishedSet:
    """The distinguished set attached to w >= v.

    Rows are the entries of w missing from v, in increasing order; each row takes the
    largest still unused column below it among the entries of v missing from w.
    """
    require_leq(v, w)
    rows = sorted(w.entry_set - v.entry_set)
    available = sorted(v.entry_set - w.entry_set)
    chosen: list[Root] = []
    for r in rows:
        candidates = [c for c in available if c < r]
        if not candidates:
            raise AssertionError(f"no column below row {r} for w={w}, v={v}")
        c = candidates[-1]
        available.remove(c)
        chosen.append(Root(r, c))
    return DistinguishedSet(v, tuple(chosen))


def index_of_distinguished(items: Iterable[Root], v: GrassmannIndex) -> GrassmannIndex:
    """Delete the column indices from v, add the row indices, sort."""
    items = [check_root(root, v) for root in items]
    if any(not root.is_positive for root in items):
        raise InvalidInputError("only positive roots define an index set")
    if not _has_distinct_lines(items):
        raise InvalidInputError("roots share a row or a column")
    cols = {root.col for root in items}
    rows = {root.row for root in items}
    return GrassmannIndex.from_set(v.n, (v.entry_set - cols) | rows)


# =============================================================================
# Depth
# =============================================================================


def depth_map(support: Iterable[Root]) -> dict[Root, int]:
    """Length of the longest chain ending at each element."""
    ordered = sorted(set(support), key=lambda x: (-x.row, x.col))
    depths: dict[Root, int] = {}
    for i, beta in enumerate(ordered):
        above = [depths[a] for a in ordered[:i] if chain_gt(a, beta)]
        depths[beta] = 1 + max(above, default=0)
    return depths


def depth(beta: Root, support: Iterable[Root]) -> int:
    """Largest t such that ``beta`` ends a chain of length t inside ``support``."""
    depths = depth_map(support)
    if beta not in depths:
        raise InvalidInputError(f"{beta} is not in the set")
    return depths[beta]


class DepthLayers(NamedTuple):
    layers: tuple[tuple[Root, ...], ...]  # j-deep elements, nested
    strata: tuple[tuple[Root, ...], ...]  # exactly depth j


def depth_layers(support: Iterable[Root]) -> DepthLayers:
    """Nested j-deep layers and the exact-depth strata of ``support``."""
    depths = depth_map(support)
    top = max(depths.values(), default=0)
    layers = tuple(
        tuple(sorted(b for b, t in depths.items() if t >= j)) for j in range(1, top + 1)
    )
    strata = tuple(
        tuple(sorted(b for b, t in depths.items() if t == j)) for j in range(1, top + 1)
    )
    return DepthLayers(layers, strata)


def layer_indices(w: GrassmannIndex, v: GrassmannIndex) -> tuple[GrassmannIndex, ...]:
    """w^1 >= w^2 >= ... >= w^k from the j-deep layers of the distinguished set, then v."""
    layers = depth_layers(distinguished_of(w, v)).layers
    return tuple(index_of_distinguished(layer, v) for layer in layers) + (v,)


# =============================================================================
# Domination
# =============================================================================


def _match_chain(distinguished: Sequence[Root], chain: Sequence[Root]) -> bool:
    pool = list(distinguished)
    previous: Root | None = None
    for r, c in chain:
        charge()
        candidates = [
            alpha
            for alpha in pool
            if alpha.col <= c and r <= alpha.row and (previous is None or chain_gt(previous, alpha))
        ]
        if not candidates:
            return False
        # the candidates form a chain; take its head
        previous = max(candidates, key=lambda x: (x.row, -x.col))
        pool.remove(previous)
    return True


def dominates_chain_matching(
    w: GrassmannIndex, v: GrassmannIndex, chain: VChain | Sequence[Sequence[int]]
) -> bool:
    """Domination through a matching chain inside the distinguished set of w.

    Walks the chain head first, covering each element by the head of the elements
    (R, C) of the distinguished set with C <= c and r <= R that sit below the
    previous cover.
    """
    require_leq(v, w)
    chain = _as_chain(v, chain)
    return _match_chain(distinguished_of(w, v).roots, chain.roots)


def covering_root(w: GrassmannIndex, v: GrassmannIndex, beta: Root) -> Root | None:
    """Head of the elements (R, C) of the distinguished set of w with C <= c and r <= R."""
    require_leq(v, w)
    beta = check_root(beta, v)
    candidates = [a for a in distinguished_of(w, v) if a.col <= beta.col and beta.row <= a.row]
    return max(candidates, key=lambda x: (x.row, -x.col), default=None)


@lru_cache(maxsize=65536)
def dominates_support(w: GrassmannIndex, v: GrassmannIndex, support: frozenset[Root]) -> bool:
    """Matching test on every maximal chain of ``support``; sub-chains inherit domination."""
    distinguished = distinguished_of(w, v).roots
    return all(_match_chain(distinguished, chain) for chain in _maximal_chains_in(support))


def _positive_support(v: GrassmannIndex, m: RootMonomial) -> frozenset[Root]:
    if m.v != v:
        raise InvalidInputError(f"monomial lives over {m.v}, not {v}")
    return frozenset(root for root in m.support if root.is_positive)


def dominates_monomial(w: GrassmannIndex, v: GrassmannIndex, m: RootMonomial) -> bool:
    """True iff w dominates every chain in the positive support of m."""
    require_leq(v, w)
    return dominates_support(w, v, _positive_support(v, m))


def dominates_monomial_bruteforce(w: GrassmannIndex, v: GrassmannIndex, m: RootMonomial) -> bool:
    """Reference implementation: apply every chain of the support to v."""
    require_leq(v, w)
    support = _positive_support(v, m)
    for chain in _chains_in(support):
        if not bruhat_leq(apply_chain(v, VChain(v, chain)), w):
            return False
    return True
