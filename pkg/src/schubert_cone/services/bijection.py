"""Block and piece decompositions, and the bijection between monomials and standard monomials.

``pi`` cuts a monomial in N^v into blocks stratum by stratum and returns the index set
whose distinguished set is made of the block summaries, plus the leftover monomial.
``phi`` rebuilds the monomial from that pair. Iterating them gives ``pi_tilde`` and
``phi_tilde``; the non-positive part is handled by the mirror x -> n - x + 1.
"""

from dataclasses import dataclass

import structlog

from schubert_cone.services.budget import charge
from schubert_cone.services.combinatorics import (
    GrassmannIndex,
    Root,
    RootMonomial,
    VChain,
    apply_chain,
    bruhat_leq,
    chain_gt,
    depth_layers,
    depth_map,
    distinguished_of,
    dominates_monomial,
    dominates_monomial_bruteforce,
    grassmann_indices,
    index_of_distinguished,
    layer_indices,
    require_leq,
)
from schubert_cone.services.hilbert import enumerate_S
from schubert_cone.services.standard_monomials import (
    StandardMonomial,
    enumerate_SM,
    is_anti_dominated,
    is_v_compatible,
    split,
)
from shared.errors import InvalidInputError

logger = structlog.get_logger()


# =============================================================================
# Blocks and pi
# =============================================================================


@dataclass(frozen=True)
class Block:
    """A run of one depth stratum, arranged by (row, col) with repeats."""

    depth: int
    elements: tuple[Root, ...]

    @property
    def summary(self) -> Root:
        """(last row, first column)."""
        return Root(self.elements[-1].row, self.elements[0].col)

    @property
    def residual(self) -> tuple[Root, ...]:
        """Each row paired with the next column; empty for a one-element block."""
        return tuple(
            Root(a.row, b.col) for a, b in zip(self.elements, self.elements[1:])
        )


@dataclass(frozen=True)
class BlockDecomposition:
    v: GrassmannIndex
    strata: tuple[tuple[Block, ...], ...]

    @property
    def blocks(self) -> tuple[Block, ...]:
        return tuple(block for stratum in self.strata for block in stratum)

    @property
    def summaries(self) -> tuple[Root, ...]:
        return tuple(sorted(block.summary for block in self.blocks))


@dataclass(frozen=True)
class PiResult:
    w: GrassmannIndex
    residual: RootMonomial


def _require_positive(m: RootMonomial, v: GrassmannIndex | None = None) -> None:
    if v is not None and m.v != v:
        raise InvalidInputError(f"monomial lives over {m.v}, not {v}")
    outside = [str(root) for root in m.support if not root.is_positive]
    if outside:
        raise InvalidInputError(f"roots {outside} are not positive for v={m.v}")


def block_decompose(m: RootMonomial) -> BlockDecomposition:
    """Split each depth stratum of a non-empty monomial in N^v into blocks."""
    if m.is_empty:
        raise InvalidInputError("the empty monomial has no block decomposition")
    _require_positive(m)
    depths = depth_map(m.support)
    top = max(depths.values())
    strata: list[tuple[Block, ...]] = []
    for j in range(1, top + 1):
        arranged = [root for root, mult in m.counts if depths[root] == j for _ in range(mult)]
        blocks: list[list[Root]] = [[arranged[0]]]
        for prev, cur in zip(arranged, arranged[1:]):
            if prev.row > cur.col:
                blocks[-1].append(cur)
            else:
                blocks.append([cur])
        strata.append(tuple(Block(j, tuple(b)) for b in blocks))
    return BlockDecomposition(m.v, tuple(strata))


def pi(m: RootMonomial) -> PiResult:
    """The index set of the block summaries, and the union of the block residuals."""
    decomposition = block_decompose(m)
    w = index_of_distinguished(decomposition.summaries, m.v)
    residual = [root for block in decomposition.blocks for root in block.residual]
    return PiResult(w, RootMonomial.of(m.v, residual))


# =============================================================================
# Pieces and phi
# =============================================================================


@dataclass(frozen=True)
class Piece:
    """Elements of a monomial attached to one element of a distinguished set."""

    anchor: Root
    depth: int
    elements: tuple[Root, ...]

    @property
    def star(self) -> tuple[Root, ...]:
        """The block that ``pi`` turns back into this piece and the anchor."""
        big_r, big_c = self.anchor
        if not self.elements:
            return (self.anchor,)
        rows = [root.row for root in self.elements] + [big_r]
        cols = [big_c] + [root.col for root in self.elements]
        return tuple(Root(r, c) for r, c in zip(rows, cols))


@dataclass(frozen=True)
class PieceDecomposition:
    v: GrassmannIndex
    w: GrassmannIndex
    strata: tuple[tuple[Piece, ...], ...]

    @property
    def pieces(self) -> tuple[Piece, ...]:
        return tuple(piece for stratum in self.strata for piece in stratum)


def _downward_paths(beta: Root, support: frozenset[Root]) -> list[tuple[Root, ...]]:
    below = {
        a: [b for b in support if chain_gt(a, b) and not any(chain_gt(a, c) and chain_gt(c, b) for c in support)]
        for a in support
    }
    paths: list[tuple[Root, ...]] = []

    def walk(path: tuple[Root, ...]) -> None:
        charge()
        nxt = below[path[-1]]
        if not nxt:
            paths.append(path)
        for b in nxt:
            walk(path + (b,))

    walk((beta,))
    return paths


def _level(
    beta: Root, support: frozenset[Root], indices: tuple[GrassmannIndex, ...], v: GrassmannIndex
) -> int:
    """Smallest j such that every chain headed by beta is dominated by w^j."""
    k = len(indices) - 1
    level = k
    for chain in _downward_paths(beta, support):
        image = apply_chain(v, VChain(v, chain))
        reach = max((j for j in range(1, k + 1) if bruhat_leq(image, indices[j - 1])), default=0)
        level = min(level, reach)
    return level


def piece_decompose(w: GrassmannIndex, v: GrassmannIndex, t: RootMonomial) -> PieceDecomposition:
    """Attach every element of a w-dominated monomial to one element of the distinguished set."""
    require_leq(v, w)
    _require_positive(t, v)
    if w == v:
        if not t.is_empty:
            raise InvalidInputError("only the empty monomial pairs with w = v")
        return PieceDecomposition(v, w, ())
    if not dominates_monomial(w, v, t):
        raise InvalidInputError(f"w={w} does not dominate {t}")

    indices = layer_indices(w, v)
    support = frozenset(t.support)
    levels = {beta: _level(beta, support, indices, v) for beta in support}
    anchors = depth_layers(distinguished_of(w, v).roots).strata

    strata: list[tuple[Piece, ...]] = []
    placed: dict[Root, int] = {}
    for j, stratum in enumerate(anchors, start=1):
        pieces = []
        for anchor in stratum:
            members = [
                root
                for root, mult in t.counts
                if levels[root] == j and root.row <= anchor.row and anchor.col <= root.col
                for _ in range(mult)
            ]
            for root in set(members):
                placed[root] = placed.get(root, 0) + 1
            pieces.append(Piece(anchor, j, tuple(members)))
        strata.append(tuple(pieces))
    stray = [str(root) for root in support if placed.get(root) != 1]
    if stray:
        raise AssertionError(f"elements {stray} are not in exactly one piece for w={w}")
    return PieceDecomposition(v, w, tuple(strata))


def phi(w: GrassmannIndex, v: GrassmannIndex, t: RootMonomial) -> RootMonomial:
    """Inverse of :func:`pi`: rebuild the monomial with ``pi`` value ``(w, t)``."""
    decomposition = piece_decompose(w, v, t)
    items = [root for piece in decomposition.pieces for root in piece.star]
    return RootMonomial.of(v, items)


def least_dominating(m: RootMonomial, v: GrassmannIndex) -> GrassmannIndex:
    """Bruhat-least w dominating m; v for the empty monomial."""
    _require_positive(m, v)
    if m.is_empty:
        return v
    return pi(m).w


def least_dominating_bruteforce(m: RootMonomial, v: GrassmannIndex) -> GrassmannIndex:
    """Scan all of I(d,n) for the dominating index sets and return the least one."""
    _require_positive(m, v)
    dominating = [
        w
        for w in grassmann_indices(v.d, v.n)
        if bruhat_leq(v, w) and dominates_monomial_bruteforce(w, v, m)
    ]
    for w in dominating:
        if all(bruhat_leq(w, other) for other in dominating):
            return w
    raise AssertionError(f"no least dominating index set for {m}")


# =============================================================================
# Lifts to standard monomials
# =============================================================================


def pi_tilde(m: RootMonomial) -> StandardMonomial:
    """Iterate ``pi`` on the residuals until nothing is left."""
    _require_positive(m)
    v = m.v
    terms: list[GrassmannIndex] = []
    current = m
    while not current.is_empty:
        charge()
        result = pi(current)
        terms.append(result.w)
        current = result.residual
    return StandardMonomial(v.d, v.n, tuple(terms))


def phi_tilde(s: StandardMonomial, v: GrassmannIndex) -> RootMonomial:
    """Inverse of :func:`pi_tilde`, rebuilding from the last term up."""
    if not (is_v_compatible(s, v) and is_anti_dominated(s, v)):
        raise InvalidInputError(f"{s} is not strictly above v={v}")
    current = RootMonomial(v)
    for theta in reversed(s.terms):
        charge()
        current = phi(theta, v, current)
    return current


# =============================================================================
# Duality
# =============================================================================


def dual_index(x: int, n: int) -> int:
    """x* = n - x + 1."""
    if not 1 <= x <= n:
        raise InvalidInputError(f"{x} is outside 1..{n}")
    return n - x + 1


def dual_grassmann(v: GrassmannIndex) -> GrassmannIndex:
    return GrassmannIndex.from_set(v.n, (dual_index(x, v.n) for x in v.entries))


def dual_root(root: Root, n: int) -> Root:
    return Root(dual_index(root.row, n), dual_index(root.col, n))


def dual_monomial(m: RootMonomial) -> RootMonomial:
    """Mirror a monomial over v to one over v*; positive and non-positive roots swap."""
    n = m.v.n
    return RootMonomial(dual_grassmann(m.v), tuple((dual_root(r, n), k) for r, k in m.counts))


def dual_standard_monomial(s: StandardMonomial) -> StandardMonomial:
    """theta_1 ... theta_t -> theta_t* ... theta_1*."""
    return StandardMonomial(s.d, s.n, tuple(dual_grassmann(t) for t in reversed(s.terms)))


# =============================================================================
# Full bijection
# =============================================================================


def monomial_to_standard(mu: RootMonomial) -> StandardMonomial:
    """Upper part from the positive roots, lower part from the mirrored non-positive roots."""
    upper = pi_tilde(mu.positive_part())
    lower = dual_standard_monomial(pi_tilde(dual_monomial(mu.nonpositive_part())))
    return upper + lower


def standard_to_monomial(s: StandardMonomial, v: GrassmannIndex) -> RootMonomial:
    """Inverse of :func:`monomial_to_standard`."""
    upper, lower = split(s, v)
    positive = phi_tilde(upper, v)
    mirrored = phi_tilde(dual_standard_monomial(lower), dual_grassmann(v))
    return positive + dual_monomial(mirrored)


def full_bijection(
    v: GrassmannIndex, w: GrassmannIndex, m: int
) -> list[tuple[RootMonomial, StandardMonomial]]:
    """Pair every w-dominated monomial of degree m with its standard monomial."""
    require_leq(v, w)
    return [(mu, monomial_to_standard(mu)) for mu in enumerate_S(v, w, m)]


def full_bijection_inverse(v: GrassmannIndex, s: StandardMonomial) -> RootMonomial:
    return standard_to_monomial(s, v)


@dataclass
class BijectionCheck:
    """Outcome of checking the pairing in one degree."""

    degree: int
    monomials: int
    standard_monomials: int
    injective: bool
    surjective: bool
    round_trip: bool
    failures: list[str]

    @property
    def ok(self) -> bool:
        return self.injective and self.surjective and self.round_trip

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "monomials": self.monomials,
            "standard_monomials": self.standard_monomials,
            "injective": self.injective,
            "surjective": self.surjective,
            "round_trip": self.round_trip,
            "ok": self.ok,
        }


def verify_full_bijection(v: GrassmannIndex, w: GrassmannIndex, m: int) -> BijectionCheck:
    """Enumerate both sides in degree m and check the pairing is a bijection."""
    pairs = full_bijection(v, w, m)
    targets = enumerate_SM(v, w, m)
    images = [s for _, s in pairs]
    failures: list[str] = []
    round_trip = True
    for mu, s in pairs:
        back = standard_to_monomial(s, v)
        if back != mu:
            round_trip = False
            failures.append(f"{mu} -> {s} -> {back}")
    check = BijectionCheck(
        degree=m,
        monomials=len(pairs),
        standard_monomials=len(targets),
        injective=len(set(images)) == len(images),
        surjective=set(images) == set(targets),
        round_trip=round_trip,
        failures=failures,
    )
    logger.info("bijection_checked", v=str(v), w=str(w), **check.to_dict())
    return check
