"""Hilbert function and multiplicity of the tangent cone at a torus-fixed point.

The degree-m piece of the tangent cone has a basis indexed by the w-dominated monomials
of degree m over R^v. Membership only depends on the positive support, so the count
reduces to square-free dominated supports, and the dominated supports form a simplicial
complex whose facets give the inclusion-exclusion formula.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cache, lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Literal

import structlog

from schubert_cone.services.budget import charge
from schubert_cone.services.combinatorics import (
    GrassmannIndex,
    Root,
    RootMonomial,
    bruhat_leq,
    chain_gt,
    distinguished_of,
    dominates_support,
    grassmann_indices,
    nonpositive_roots,
    positive_roots,
    require_leq,
    roots,
)
from shared.errors import InvalidInputError, VerificationError

logger = structlog.get_logger()

FaceMethod = Literal["search", "paths"]


def monomial_count(a: int, m: int) -> int:
    """Number of degree-m monomials in a variables."""
    if a == 0:
        return int(m == 0)
    return comb(a - 1 + m, m)


def composition_count(m: int, s: int) -> int:
    """Number of degree-m monomials with exactly s given variables in their support."""
    if m == 0 or s == 0:
        return int(m == 0 and s == 0)
    return comb(m - 1, s - 1)


def _check_degree(m: int) -> None:
    if m < 0:
        raise InvalidInputError(f"degree must be non-negative, got {m}")


# =============================================================================
# Direct count
# =============================================================================


def dominated_supports(
    v: GrassmannIndex, w: GrassmannIndex, max_size: int
) -> list[frozenset[Root]]:
    """Every w-dominated subset of N^v with at most ``max_size`` elements."""
    require_leq(v, w)
    ground = positive_roots(v)
    found: list[frozenset[Root]] = []

    def grow(current: frozenset[Root], start: int) -> None:
        charge()
        found.append(current)
        if len(current) == max_size:
            return
        for i in range(start, len(ground)):
            candidate = current | {ground[i]}
            # domination is hereditary, so non-dominated sets are never extended
            if dominates_support(w, v, candidate):
                grow(candidate, i + 1)

    grow(frozenset(), 0)
    return found


def hilbert_direct(v: GrassmannIndex, w: GrassmannIndex, m: int) -> int:
    """Count degree-m monomials over R^v whose positive support is w-dominated."""
    require_leq(v, w)
    _check_degree(m)
    free = len(nonpositive_roots(v))
    total = 0
    for support in dominated_supports(v, w, m):
        size = len(support)
        total += sum(
            comb(free, k) * composition_count(m, size + k) for k in range(free + 1)
        )
    return total


def enumerate_S(v: GrassmannIndex, w: GrassmannIndex, m: int) -> list[RootMonomial]:
    """All w-dominated monomials of degree m over R^v, in a fixed order."""
    require_leq(v, w)
    _check_degree(m)
    found: list[RootMonomial] = []
    for items in combinations_with_replacement(roots(v), m):
        charge()
        support = frozenset(root for root in items if root.is_positive)
        if dominates_support(w, v, support):
            found.append(RootMonomial.of(v, items))
    return found


# =============================================================================
# Maximal dominated sets
# =============================================================================


@dataclass(frozen=True)
class DominatedFaceFamily:
    """The maximal square-free w-dominated subsets of R^v."""

    v: GrassmannIndex
    w: GrassmannIndex
    faces: tuple[tuple[Root, ...], ...]

    @property
    def cardinalities(self) -> tuple[int, ...]:
        return tuple(len(face) for face in self.faces)

    @property
    def k(self) -> int:
        return len(self.faces)

    @property
    def common_cardinality(self) -> int:
        sizes = set(self.cardinalities)
        if len(sizes) != 1:
            raise VerificationError(
                "maximal dominated sets have different sizes",
                v=str(self.v),
                w=str(self.w),
                sizes=sorted(sizes),
            )
        return sizes.pop()

    def as_sets(self) -> list[frozenset[Root]]:
        return [frozenset(face) for face in self.faces]


def _is_chain(items: Sequence[Root]) -> bool:
    ordered = sorted(items, key=lambda x: (-x.row, x.col))
    return all(chain_gt(a, b) for a, b in zip(ordered, ordered[1:]))


@lru_cache(maxsize=1024)
def minimal_nonfaces(v: GrassmannIndex, w: GrassmannIndex) -> tuple[tuple[Root, ...], ...]:
    """Minimal subsets of N^v that w does not dominate.

    A minimal non-dominated set is a single chain, and a chain is the distinguished set of
    the index it produces, so these are the inclusion-minimal chains among the
    distinguished sets of theta >= v with theta not below w.
    """
    require_leq(v, w)
    chains: list[frozenset[Root]] = []
    for theta in grassmann_indices(v.d, v.n):
        charge()
        if not bruhat_leq(v, theta) or bruhat_leq(theta, w):
            continue
        items = distinguished_of(theta, v).roots
        if _is_chain(items):
            chains.append(frozenset(items))
    minimal = [c for c in chains if not any(o < c for o in chains)]
    return tuple(sorted(tuple(sorted(c)) for c in minimal))


def _minimize(masks: set[int]) -> list[int]:
    ordered = sorted(masks, key=lambda x: (x.bit_count(), x))
    kept: list[int] = []
    for mask in ordered:
        if not any(small & mask == small for small in kept):
            kept.append(mask)
    return kept


def minimal_transversals(edges: Sequence[int]) -> list[int]:
    """Minimal hitting sets of a family of bitmasks (Berge's sequential algorithm)."""
    transversals = [0]
    for edge in sorted(set(edges), key=lambda x: (x.bit_count(), x)):
        grown: set[int] = set()
        for t in transversals:
            charge()
            if t & edge:
                grown.add(t)
                continue
            bits = edge
            while bits:
                low = bits & -bits
                grown.add(t | low)
                bits ^= low
        transversals = _minimize(grown)
    return sorted(transversals)


def _faces_by_search(v: GrassmannIndex, w: GrassmannIndex) -> list[frozenset[Root]]:
    ground = positive_roots(v)
    position = {root: i for i, root in enumerate(ground)}
    full = (1 << len(ground)) - 1
    edges = [sum(1 << position[root] for root in edge) for edge in minimal_nonfaces(v, w)]
    free = frozenset(nonpositive_roots(v))
    faces = []
    for hitting in minimal_transversals(edges):
        keep = full & ~hitting
        faces.append(frozenset(ground[i] for i in range(len(ground)) if keep >> i & 1) | free)
    return faces


def _faces_by_paths(v: GrassmannIndex, w: GrassmannIndex) -> list[frozenset[Root]]:
    from schubert_cone.services.lattice_paths import enumerate_tuples, tuple_to_monomial

    free = frozenset(nonpositive_roots(v))
    return [
        frozenset(tuple_to_monomial(t).support) | free for t in enumerate_tuples(v, w)
    ]


def maximal_dominated(
    v: GrassmannIndex, w: GrassmannIndex, *, method: FaceMethod = "search"
) -> DominatedFaceFamily:
    """All maximal square-free w-dominated subsets of R^v.

    Args:
        v: Ambient index set.
        w: Dominating index set, ``v <= w``.
        method: ``"search"`` takes complements of the minimal transversals of the
            minimal non-faces; ``"paths"`` unions non-intersecting lattice path tuples.

    Returns:
        The face family, with faces sorted.

    Raises:
        VerificationError: If two maximal sets differ in size.
    """
    require_leq(v, w)
    if method == "search":
        faces = _faces_by_search(v, w)
    elif method == "paths":
        faces = _faces_by_paths(v, w)
    else:
        raise InvalidInputError(f"unknown face method {method!r}")
    family = DominatedFaceFamily(v, w, tuple(sorted(tuple(sorted(f)) for f in faces)))
    if family.faces:
        _ = family.common_cardinality
    logger.debug("faces_computed", v=str(v), w=str(w), method=method, k=family.k)
    return family


def cross_check_faces(v: GrassmannIndex, w: GrassmannIndex) -> DominatedFaceFamily:
    """Compute the faces both ways and insist they agree."""
    searched = maximal_dominated(v, w, method="search")
    traced = maximal_dominated(v, w, method="paths")
    if searched.faces != traced.faces:
        raise VerificationError(
            "face search and lattice paths disagree",
            v=str(v),
            w=str(w),
            search=searched.k,
            paths=traced.k,
        )
    return searched


# =============================================================================
# Inclusion-exclusion and multiplicity
# =============================================================================


def hilbert_inclusion_exclusion(
    v: GrassmannIndex,
    w: GrassmannIndex,
    m: int,
    family: DominatedFaceFamily | None = None,
) -> int:
    """Inclusion-exclusion over the faces: sum of (-1)^(j-1) C(a_J - 1 + m, a_J - 1)."""
    require_leq(v, w)
    _check_degree(m)
    if family is None:
        family = maximal_dominated(v, w)
    ground = roots(v)
    position = {root: i for i, root in enumerate(ground)}
    masks = [sum(1 << position[root] for root in face) for face in family.faces]
    universe = (1 << len(ground)) - 1

    # signed sum over subsets J of faces[i:] of f(|X meet A_J|)
    @cache
    def signed(i: int, meet: int) -> int:
        charge()
        if i == len(masks):
            return monomial_count(meet.bit_count(), m)
        return signed(i + 1, meet) - signed(i + 1, meet & masks[i])

    return monomial_count(universe.bit_count(), m) - signed(0, universe)


def multiplicity(v: GrassmannIndex, w: GrassmannIndex) -> int:
    """Number of maximal dominated sets of maximum cardinality."""
    family = maximal_dominated(v, w)
    top = max(family.cardinalities)
    count = sum(1 for size in family.cardinalities if size == top)
    logger.info("multiplicity_computed", v=str(v), w=str(w), multiplicity=count)
    return count


def hilbert_values(
    v: GrassmannIndex,
    w: GrassmannIndex,
    max_m: int,
    *,
    provenance: Literal["inclusion_exclusion", "direct"] = "inclusion_exclusion",
) -> list[int]:
    """h(0), ..., h(max_m)."""
    require_leq(v, w)
    _check_degree(max_m)
    if provenance == "direct":
        return [hilbert_direct(v, w, m) for m in range(max_m + 1)]
    family = maximal_dominated(v, w)
    return [hilbert_inclusion_exclusion(v, w, m, family) for m in range(max_m + 1)]


def finite_differences(values: Sequence[int]) -> tuple[int, int]:
    """Degree and leading difference of the polynomial through ``values``.

    Returns the smallest r whose r-th difference sequence is constant (with at least two
    samples) together with that constant. For a Hilbert function the constant is the
    multiplicity and r + 1 is the common face size.
    """
    row = list(values)
    order = 0
    while len(row) >= 2:
        if all(x == row[0] for x in row):
            return order, row[0]
        row = [b - a for a, b in zip(row, row[1:])]
        order += 1
    raise InvalidInputError("too few values to read off a polynomial degree")


def smooth_point_hilbert(v: GrassmannIndex, m: int) -> int:
    """h(m) at a smooth point: all monomials in the non-positive variables."""
    _check_degree(m)
    return monomial_count(len(nonpositive_roots(v)), m)


def hilbert_polynomial_degree(values: Sequence[int]) -> tuple[int, int]:
    """Degree of the Hilbert polynomial and the multiplicity, from h(0), h(1), ...

    h(0) is dropped: an empty face intersection contributes to h(0) only.
    """
    return finite_differences(values[1:])
