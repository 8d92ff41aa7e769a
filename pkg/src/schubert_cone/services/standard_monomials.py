"""Standard monomials: Bruhat-descending sequences of index sets."""

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from functools import cache

import structlog

from schubert_cone.services.budget import charge
from schubert_cone.services.combinatorics import (
    GrassmannIndex,
    bruhat_leq,
    grassmann_indices,
    require_leq,
    v_degree,
)
from shared.errors import InvalidInputError

logger = structlog.get_logger()


@dataclass(frozen=True)
class StandardMonomial:
    """A sequence theta_1 >= theta_2 >= ... >= theta_t in I(d,n)."""

    d: int
    n: int
    terms: tuple[GrassmannIndex, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))
        for theta in self.terms:
            if theta.d != self.d or theta.n != self.n:
                raise InvalidInputError(f"{theta} is not in I({self.d},{self.n})")
        for upper, lower in zip(self.terms, self.terms[1:]):
            if not bruhat_leq(lower, upper):
                raise InvalidInputError(f"{upper} >= {lower} fails; not a standard monomial")

    @classmethod
    def from_multiset(cls, d: int, n: int, terms: Iterable[GrassmannIndex]) -> "StandardMonomial":
        """Arrange an unordered multiset of pairwise comparable index sets."""
        ordered = sorted(terms, key=lambda t: (sum(t.entries), t.entries), reverse=True)
        return cls(d, n, tuple(ordered))

    def degree(self, v: GrassmannIndex) -> int:
        """Sum of the v-degrees of the terms."""
        return sum(v_degree(theta, v) for theta in self.terms)

    @property
    def is_empty(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[GrassmannIndex]:
        return iter(self.terms)

    def __add__(self, other: "StandardMonomial") -> "StandardMonomial":
        return StandardMonomial(self.d, self.n, self.terms + other.terms)

    def __str__(self) -> str:
        return "[" + " >= ".join(str(t) for t in self.terms) + "]"


def is_v_compatible(s: StandardMonomial, v: GrassmannIndex) -> bool:
    """Every term is comparable with v and differs from it."""
    return all(
        theta != v and (bruhat_leq(theta, v) or bruhat_leq(v, theta)) for theta in s.terms
    )


def is_w_dominated(s: StandardMonomial, w: GrassmannIndex) -> bool:
    return s.is_empty or bruhat_leq(s.terms[0], w)


def is_anti_dominated(s: StandardMonomial, v: GrassmannIndex) -> bool:
    return s.is_empty or (s.terms[-1] != v and bruhat_leq(v, s.terms[-1]))


def split(s: StandardMonomial, v: GrassmannIndex) -> tuple[StandardMonomial, StandardMonomial]:
    """Cut a v-compatible standard monomial into its parts above and below v."""
    if not is_v_compatible(s, v):
        raise InvalidInputError(f"{s} is not compatible with v={v}")
    p = sum(1 for theta in s.terms if bruhat_leq(v, theta))
    return (
        StandardMonomial(s.d, s.n, s.terms[:p]),
        StandardMonomial(s.d, s.n, s.terms[p:]),
    )


# =============================================================================
# Enumeration
# =============================================================================


def _candidates(
    v: GrassmannIndex, keep: Callable[[GrassmannIndex], bool]
) -> tuple[tuple[GrassmannIndex, int], ...]:
    pool = [theta for theta in grassmann_indices(v.d, v.n) if theta != v and keep(theta)]
    pool.sort(key=lambda t: t.entries, reverse=True)
    return tuple((theta, v_degree(theta, v)) for theta in pool)


def _walk(
    v: GrassmannIndex,
    candidates: tuple[tuple[GrassmannIndex, int], ...],
    m: int,
) -> list[StandardMonomial]:
    found: list[StandardMonomial] = []

    def extend(prefix: list[GrassmannIndex], remaining: int) -> None:
        charge()
        if remaining == 0:
            found.append(StandardMonomial(v.d, v.n, tuple(prefix)))
            return
        bound = prefix[-1] if prefix else None
        for theta, deg in candidates:
            if deg > remaining or (bound is not None and not bruhat_leq(theta, bound)):
                continue
            prefix.append(theta)
            extend(prefix, remaining - deg)
            prefix.pop()

    extend([], m)
    return found


def _count(
    candidates: tuple[tuple[GrassmannIndex, int], ...],
    m: int,
) -> int:
    @cache
    def below(bound: int | None, remaining: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for i, (theta, deg) in enumerate(candidates):
            if deg > remaining:
                continue
            if bound is not None and not bruhat_leq(theta, candidates[bound][0]):
                continue
            charge()
            total += below(i, remaining - deg)
        return total

    return below(None, m)


def _check_degree(m: int) -> None:
    if m < 0:
        raise InvalidInputError(f"degree must be non-negative, got {m}")


def _compatible_dominated(v: GrassmannIndex, w: GrassmannIndex) -> Callable[[GrassmannIndex], bool]:
    def keep(theta: GrassmannIndex) -> bool:
        return bruhat_leq(theta, w) and (bruhat_leq(theta, v) or bruhat_leq(v, theta))

    return keep


def enumerate_SM(v: GrassmannIndex, w: GrassmannIndex, m: int) -> list[StandardMonomial]:
    """v-compatible, w-dominated standard monomials of degree m."""
    require_leq(v, w)
    _check_degree(m)
    found = _walk(v, _candidates(v, _compatible_dominated(v, w)), m)
    logger.debug("standard_monomials_enumerated", v=str(v), w=str(w), m=m, count=len(found))
    return found


def count_SM(v: GrassmannIndex, w: GrassmannIndex, m: int) -> int:
    """Size of :func:`enumerate_SM` without materializing it."""
    require_leq(v, w)
    _check_degree(m)
    return _count(_candidates(v, _compatible_dominated(v, w)), m)


def enumerate_SM_upper(v: GrassmannIndex, w: GrassmannIndex, j: int) -> list[StandardMonomial]:
    """Standard monomials of degree j with every term strictly above v and below w."""
    require_leq(v, w)
    _check_degree(j)
    return _walk(v, _candidates(v, lambda t: bruhat_leq(v, t) and bruhat_leq(t, w)), j)


def enumerate_SM_lower(v: GrassmannIndex, m: int) -> list[StandardMonomial]:
    """Standard monomials of degree m with every term strictly below v."""
    _check_degree(m)
    return _walk(v, _candidates(v, lambda t: bruhat_leq(t, v)), m)


def count_SM_upper(v: GrassmannIndex, w: GrassmannIndex, j: int) -> int:
    require_leq(v, w)
    _check_degree(j)
    return _count(_candidates(v, lambda t: bruhat_leq(v, t) and bruhat_leq(t, w)), j)


def count_SM_lower(v: GrassmannIndex, m: int) -> int:
    _check_degree(m)
    return _count(_candidates(v, lambda t: bruhat_leq(t, v)), m)
