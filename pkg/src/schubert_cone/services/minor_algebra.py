"""Minors of the generic matrix, term orders and initial terms.

The generic matrix for v has n rows and d columns indexed by the entries of v. Row i is
the unit row at the position of i when i is an entry of v, and otherwise the row of
variables X_(i,c), c in v. The minor on rows theta is f_theta; for theta >= v its initial
term under each certified order is the distinguished set of theta, which makes the
f_theta with v <= theta, theta not below w a Groebner basis of the tangent cone ideal.
"""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import lcm

import structlog
import sympy as sp

from schubert_cone.services.budget import charge
from schubert_cone.services.combinatorics import (
    GrassmannIndex,
    Root,
    RootMonomial,
    bruhat_leq,
    distinguished_of,
    grassmann_indices,
    require_leq,
    roots,
    v_degree,
)
from shared.constants import LEX_FAMILIES, ORDER_FAMILIES
from shared.errors import InvalidInputError, VerificationError

logger = structlog.get_logger()

Exponents = tuple[tuple[Root, int], ...]


def _multiply_exponents(a: Exponents, b: Exponents) -> Exponents:
    merged: dict[Root, int] = dict(a)
    for root, e in b:
        merged[root] = merged.get(root, 0) + e
    return tuple(sorted(merged.items()))


def _to_exponents(m: RootMonomial) -> Exponents:
    return m.counts


# =============================================================================
# Polynomials
# =============================================================================


class MinorPolynomial:
    """Sparse polynomial with integer coefficients in the variables X_beta, beta in R^v."""

    def __init__(self, v: GrassmannIndex, terms: Mapping[Exponents, int] | None = None) -> None:
        self.v = v
        self.terms: dict[Exponents, int] = {}
        for exps, coeff in (terms or {}).items():
            self.add_term(coeff, exps)

    @classmethod
    def constant(cls, v: GrassmannIndex, c: int) -> "MinorPolynomial":
        return cls(v, {(): c})

    @classmethod
    def variable(cls, v: GrassmannIndex, root: Root) -> "MinorPolynomial":
        return cls(v, {((root, 1),): 1})

    @classmethod
    def from_monomial(cls, m: RootMonomial, coeff: int = 1) -> "MinorPolynomial":
        return cls(m.v, {_to_exponents(m): coeff})

    def add_term(self, coeff: int, exps: Exponents) -> None:
        if coeff == 0:
            return
        total = self.terms.get(exps, 0) + coeff
        if total:
            self.terms[exps] = total
        else:
            self.terms.pop(exps, None)

    def _check(self, other: "MinorPolynomial") -> None:
        if other.v != self.v:
            raise InvalidInputError("polynomials over different ambient v")

    def __add__(self, other: "MinorPolynomial") -> "MinorPolynomial":
        self._check(other)
        result = MinorPolynomial(self.v, self.terms)
        for exps, coeff in other.terms.items():
            result.add_term(coeff, exps)
        return result

    def __neg__(self) -> "MinorPolynomial":
        return MinorPolynomial(self.v, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MinorPolynomial") -> "MinorPolynomial":
        return self + (-other)

    def __mul__(self, other: "MinorPolynomial | int") -> "MinorPolynomial":
        if isinstance(other, int):
            return MinorPolynomial(self.v, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        result = MinorPolynomial(self.v)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                result.add_term(c1 * c2, _multiply_exponents(e1, e2))
        return result

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MinorPolynomial):
            return NotImplemented
        return self.v == other.v and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e for _, e in exps) for exps in self.terms), default=0)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(e for _, e in exps) for exps in self.terms}) <= 1

    def monomials(self) -> list[RootMonomial]:
        return [RootMonomial(self.v, exps) for exps in sorted(self.terms)]

    def coefficient(self, m: RootMonomial) -> int:
        return self.terms.get(_to_exponents(m), 0)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in sorted(self.terms.items()):
            factors = "*".join(
                f"X{r}_{c}" + (f"^{e}" if e > 1 else "") for (r, c), e in exps
            )
            parts.append(f"{coeff}" + (f"*{factors}" if factors else ""))
        return " + ".join(parts).replace("+ -", "- ")


# =============================================================================
# The generic matrix and its minors
# =============================================================================


@dataclass(frozen=True)
class GenericMatrix:
    """The n x d matrix whose rows v_1..v_d are the identity and whose other rows are variables."""

    v: GrassmannIndex

    def entry(self, i: int, j: int) -> int | Root:
        """Row i in 1..n, column position j in 0..d-1: 0, 1 or the variable's root."""
        if i in self.v:
            return int(self.v.entries.index(i) == j)
        return Root(i, self.v.entries[j])

    def row(self, i: int) -> tuple[int | Root, ...]:
        return tuple(self.entry(i, j) for j in range(self.v.d))

    def is_unit_row(self, i: int) -> bool:
        return i in self.v

    def unit_column(self, i: int) -> int:
        return self.row(i).index(1)

    def variable(self, i: int, j: int) -> MinorPolynomial:
        entry = self.entry(i, j)
        if not isinstance(entry, Root):
            raise InvalidInputError(f"row {i} of the generic matrix for {self.v} is constant")
        return MinorPolynomial.variable(self.v, entry)


def _permutation_sign(images: Sequence[int]) -> int:
    inversions = sum(1 for a, b in combinations(images, 2) if a > b)
    return -1 if inversions % 2 else 1


def _variable_determinant(
    matrix: GenericMatrix, rows: tuple[int, ...], cols: tuple[int, ...]
) -> MinorPolynomial:
    """Determinant of the all-variable block rows x cols by cofactor expansion."""
    v = matrix.v
    memo: dict[tuple[int, tuple[int, ...]], MinorPolynomial] = {}

    def expand(i: int, remaining: tuple[int, ...]) -> MinorPolynomial:
        if i == len(rows):
            return MinorPolynomial.constant(v, 1)
        key = (i, remaining)
        if key in memo:
            return memo[key]
        charge()
        total = MinorPolynomial(v)
        for pos, j in enumerate(remaining):
            cofactor = expand(i + 1, remaining[:pos] + remaining[pos + 1 :])
            term = matrix.variable(rows[i], j) * cofactor
            total = total + (term if pos % 2 == 0 else -term)
        memo[key] = total
        return total

    return expand(0, cols)


@lru_cache(maxsize=4096)
def minor(theta: GrassmannIndex, v: GrassmannIndex) -> MinorPolynomial:
    """f_theta: the determinant of the rows theta of the generic matrix for v.

    Unit rows are removed first; the sign is that of the permutation sending unit rows to
    their columns and the remaining rows, in order, to the remaining columns.
    """
    if theta.n != v.n or theta.d != v.d:
        raise InvalidInputError(f"{theta} and {v} live in different I(d,n)")
    matrix = GenericMatrix(v)
    unit_cols = {
        a: matrix.unit_column(i) for a, i in enumerate(theta.entries) if matrix.is_unit_row(i)
    }
    free_rows = tuple(i for i in theta.entries if not matrix.is_unit_row(i))
    free_cols = tuple(j for j in range(v.d) if j not in unit_cols.values())
    images: list[int] = []
    pending = iter(free_cols)
    for a in range(v.d):
        images.append(unit_cols[a] if a in unit_cols else next(pending))
    return _variable_determinant(matrix, free_rows, free_cols) * _permutation_sign(images)


# =============================================================================
# Term orders
# =============================================================================


@dataclass(frozen=True)
class TermOrder:
    """One of the four certified families.

    Variables of N^v come before all others. Within each group, family 1 prefers smaller
    rows then larger columns, family 2 larger columns then smaller rows, family 3 smaller
    rows then smaller columns, family 4 larger columns then larger rows. Families 1 and 2
    compare monomials homogeneous-lexicographically, families 3 and 4 by homogeneous
    reverse lexicographic order.
    """

    family: int

    def __post_init__(self) -> None:
        if self.family not in ORDER_FAMILIES:
            raise InvalidInputError(f"order family must be one of {ORDER_FAMILIES}, got {self.family}")

    @property
    def is_lex(self) -> bool:
        return self.family in LEX_FAMILIES

    def variable_key(self, root: Root) -> tuple[int, int, int]:
        """Larger key = larger variable."""
        r, c = root
        pos = int(root.is_positive)
        if self.family == 1:
            return (pos, -r, c)
        if self.family == 2:
            return (pos, c, -r)
        if self.family == 3:
            return (pos, -r, -c)
        return (pos, c, r)

    def variables(self, v: GrassmannIndex) -> tuple[Root, ...]:
        """R^v from largest to smallest variable."""
        return tuple(sorted(roots(v), key=self.variable_key, reverse=True))

    def monomial_key(self, exps: Exponents, v: GrassmannIndex) -> tuple:
        """Larger key = larger monomial."""
        powers = dict(exps)
        ordered = self.variables(v)
        degree = sum(powers.values())
        if self.is_lex:
            return (degree, tuple(powers.get(x, 0) for x in ordered))
        return (degree, tuple(-powers.get(x, 0) for x in reversed(ordered)))


def initial_term(f: MinorPolynomial, order: TermOrder) -> RootMonomial:
    """The order-greatest monomial of f, coefficient ignored."""
    if f.is_zero:
        raise InvalidInputError("the zero polynomial has no initial term")
    best = max(f.terms, key=lambda exps: order.monomial_key(exps, f.v))
    return RootMonomial(f.v, best)


@dataclass(frozen=True)
class InitialTermViolation:
    theta: GrassmannIndex
    family: int
    initial: RootMonomial
    expected: RootMonomial

    def to_dict(self) -> dict[str, object]:
        return {
            "theta": list(self.theta.entries),
            "family": self.family,
            "initial": str(self.initial),
            "expected": str(self.expected),
        }


@dataclass
class InitialTermReport:
    v: GrassmannIndex
    w: GrassmannIndex | None
    families: tuple[int, ...]
    checked: int = 0
    violations: list[InitialTermViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_initial_terms(
    v: GrassmannIndex,
    w: GrassmannIndex | None = None,
    families: Iterable[int] = ORDER_FAMILIES,
) -> InitialTermReport:
    """Compare the initial term of every f_theta, theta >= v, with its distinguished set.

    With ``w`` given, only theta not below w are checked.
    """
    orders = [TermOrder(f) for f in families]
    report = InitialTermReport(v, w, tuple(o.family for o in orders))
    for theta in grassmann_indices(v.d, v.n):
        if not bruhat_leq(v, theta) or (w is not None and bruhat_leq(theta, w)):
            continue
        f = minor(theta, v)
        expected = distinguished_of(theta, v).as_monomial()
        for order in orders:
            report.checked += 1
            got = initial_term(f, order)
            if got != expected:
                report.violations.append(InitialTermViolation(theta, order.family, got, expected))
    logger.info(
        "initial_terms_checked",
        v=str(v),
        w=str(w) if w else None,
        checked=report.checked,
        violations=len(report.violations),
    )
    return report


# =============================================================================
# The initial ideal
# =============================================================================


@lru_cache(maxsize=1024)
def initial_ideal_generators(v: GrassmannIndex, w: GrassmannIndex) -> tuple[RootMonomial, ...]:
    """Minimal generators among the distinguished sets of theta >= v with theta not below w."""
    require_leq(v, w)
    gens = [
        distinguished_of(theta, v).as_monomial()
        for theta in grassmann_indices(v.d, v.n)
        if bruhat_leq(v, theta) and not bruhat_leq(theta, w)
    ]
    minimal = [g for g in gens if not any(h != g and h.divides(g) for h in gens)]
    return tuple(sorted(minimal, key=lambda g: g.counts))


def monomial_ideal_member(mu: RootMonomial, v: GrassmannIndex, w: GrassmannIndex) -> bool:
    """Whether some generator of the initial ideal divides mu."""
    require_leq(v, w)
    if mu.v != v:
        raise InvalidInputError(f"monomial lives over {mu.v}, not {v}")
    return any(g.divides(mu) for g in initial_ideal_generators(v, w))


def initial_ideal_hilbert(v: GrassmannIndex, w: GrassmannIndex, m: int) -> int:
    """Degree-m monomials over R^v outside the initial ideal."""
    require_leq(v, w)
    if m < 0:
        raise InvalidInputError(f"degree must be non-negative, got {m}")
    gens = initial_ideal_generators(v, w)
    count = 0
    for items in combinations_with_replacement(roots(v), m):
        charge()
        mu = RootMonomial.of(v, items)
        if not any(g.divides(mu) for g in gens):
            count += 1
    return count


# =============================================================================
# Generator reduction
# =============================================================================


def reduction_family(v: GrassmannIndex, w: GrassmannIndex, theta: GrassmannIndex) -> list[GrassmannIndex]:
    """Index sets mu with v <= mu, mu not below w, whose minors generate f_theta.

    Fix the first k with theta_k > w_k and the last a with v_a <= w_k; mu takes k - 1 of
    v_1..v_a, all of v_(a+1)..v_d and a - k + 1 of theta_k..theta_d.
    """
    require_leq(v, w)
    if bruhat_leq(theta, w):
        raise InvalidInputError(f"theta={theta} is below w={w}")
    d = v.d
    k = next(i for i in range(d) if theta.entries[i] > w.entries[i]) + 1
    a = max(i for i in range(1, d + 1) if v.entries[i - 1] <= w.entries[k - 1])
    tail = set(v.entries[a:])
    family: set[GrassmannIndex] = set()
    for head in combinations(v.entries[:a], k - 1):
        for picked in combinations(theta.entries[k - 1 :], a - k + 1):
            values = set(head) | tail | set(picked)
            if len(values) != d:
                continue
            mu = GrassmannIndex.from_set(v.n, values)
            if bruhat_leq(v, mu) and not bruhat_leq(mu, w):
                family.add(mu)
    return sorted(family, key=lambda g: g.entries)


@dataclass
class ReductionCertificate:
    """f_theta = sum of coefficient * multiplier * f_mu."""

    theta: GrassmannIndex
    source: str  # "trivial" | "reduction_family" | "all_generators"
    terms: list[tuple[GrassmannIndex, RootMonomial, Fraction]]

    def to_dict(self) -> dict[str, object]:
        return {
            "theta": list(self.theta.entries),
            "source": self.source,
            "terms": [
                {"mu": list(mu.entries), "multiplier": str(mult), "coefficient": str(coeff)}
                for mu, mult, coeff in self.terms
            ],
        }


def _degree_monomials(v: GrassmannIndex, degree: int) -> list[RootMonomial]:
    return [RootMonomial.of(v, items) for items in combinations_with_replacement(roots(v), degree)]


def _solve(
    v: GrassmannIndex, target: MinorPolynomial, generators: Sequence[GrassmannIndex]
) -> list[tuple[GrassmannIndex, RootMonomial, Fraction]] | None:
    degree = target.degree
    columns: list[tuple[GrassmannIndex, RootMonomial, MinorPolynomial]] = []
    for mu in generators:
        f_mu = minor(mu, v)
        if f_mu.is_zero or f_mu.degree > degree:
            continue
        for mult in _degree_monomials(v, degree - f_mu.degree):
            charge()
            columns.append((mu, mult, MinorPolynomial.from_monomial(mult) * f_mu))
    if not columns:
        return None
    basis = sorted({exps for _, _, p in columns for exps in p.terms} | set(target.terms))
    row_of = {exps: i for i, exps in enumerate(basis)}
    matrix = sp.zeros(len(basis), len(columns))
    for j, (_, _, product) in enumerate(columns):
        for exps, coeff in product.terms.items():
            matrix[row_of[exps], j] = coeff
    rhs = sp.zeros(len(basis), 1)
    for exps, coeff in target.terms.items():
        rhs[row_of[exps], 0] = coeff
    try:
        solution, params = matrix.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    solution = solution.subs({p: 0 for p in params})
    terms = []
    for j, (mu, mult, _) in enumerate(columns):
        value = sp.Rational(solution[j, 0])
        if value != 0:
            terms.append((mu, mult, Fraction(int(value.p), int(value.q))))
    return terms


def _recombine(v: GrassmannIndex, terms: Sequence[tuple[GrassmannIndex, RootMonomial, Fraction]]) -> tuple[MinorPolynomial, int]:
    scale = lcm(*(coeff.denominator for _, _, coeff in terms)) if terms else 1
    total = MinorPolynomial(v)
    for mu, mult, coeff in terms:
        total = total + MinorPolynomial.from_monomial(mult) * minor(mu, v) * int(coeff * scale)
    return total, scale


def verify_generator_reduction(
    v: GrassmannIndex, w: GrassmannIndex, theta: GrassmannIndex
) -> ReductionCertificate:
    """Write f_theta in terms of the f_mu with v <= mu, mu not below w.

    Raises:
        VerificationError: If no combination exists in the degree of f_theta.
    """
    require_leq(v, w)
    if bruhat_leq(theta, w):
        raise InvalidInputError(f"theta={theta} is below w={w}")
    if bruhat_leq(v, theta):
        return ReductionCertificate(theta, "trivial", [(theta, RootMonomial(v), Fraction(1))])

    target = minor(theta, v)
    family = reduction_family(v, w, theta)
    attempts = [("reduction_family", family)]
    everything = [
        mu
        for mu in grassmann_indices(v.d, v.n)
        if bruhat_leq(v, mu) and not bruhat_leq(mu, w) and v_degree(mu, v) <= v_degree(theta, v)
    ]
    attempts.append(("all_generators", everything))
    for source, generators in attempts:
        terms = _solve(v, target, generators)
        if terms is None:
            logger.debug("reduction_attempt_failed", theta=str(theta), source=source)
            continue
        combined, scale = _recombine(v, terms)
        if combined != target * scale:
            raise VerificationError("reduction certificate does not recombine", theta=str(theta))
        return ReductionCertificate(theta, source, terms)
    raise VerificationError(
        "f_theta is not in the ideal of the f_mu with v <= mu not below w",
        v=str(v),
        w=str(w),
        theta=str(theta),
    )


def reducible_indices(v: GrassmannIndex, w: GrassmannIndex) -> list[GrassmannIndex]:
    """All theta not below w, the inputs of :func:`verify_generator_reduction`."""
    require_leq(v, w)
    return [theta for theta in grassmann_indices(v.d, v.n) if not bruhat_leq(theta, w)]
