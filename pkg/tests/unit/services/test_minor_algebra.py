"""Unit tests for minors, term orders and the initial ideal."""

from math import lcm

import pytest

from schubert_cone.services.combinatorics import (
    GrassmannIndex,
    Root,
    RootMonomial,
    bruhat_leq,
    distinguished_of,
    grassmann_indices,
)
from schubert_cone.services.hilbert import hilbert_direct
from schubert_cone.services.minor_algebra import (
    GenericMatrix,
    MinorPolynomial,
    TermOrder,
    check_initial_terms,
    initial_ideal_generators,
    initial_ideal_hilbert,
    initial_term,
    minor,
    monomial_ideal_member,
    reducible_indices,
    reduction_family,
    verify_generator_reduction,
)
from shared.errors import InvalidInputError


def gi(n: int, *entries: int) -> GrassmannIndex:
    return GrassmannIndex(n, entries)


def X(v: GrassmannIndex, r: int, c: int) -> MinorPolynomial:
    return MinorPolynomial.variable(v, Root(r, c))


def mono(v: GrassmannIndex, *items: tuple[int, int]) -> RootMonomial:
    return RootMonomial.of(v, items)


class TestPolynomial:
    def test_cancellation(self, v12: GrassmannIndex) -> None:
        p = X(v12, 3, 1) * X(v12, 4, 2)
        assert (p - p).is_zero
        assert (p + p) == 2 * p

    def test_degree_and_homogeneity(self, v12: GrassmannIndex) -> None:
        p = X(v12, 3, 1) * X(v12, 4, 2) - X(v12, 3, 2)
        assert p.degree == 2
        assert not p.is_homogeneous
        assert MinorPolynomial.constant(v12, 5).degree == 0

    def test_coefficient(self, v12: GrassmannIndex) -> None:
        p = X(v12, 3, 1) * X(v12, 3, 1) * 3
        assert p.coefficient(mono(v12, (3, 1), (3, 1))) == 3
        assert p.coefficient(mono(v12, (3, 1))) == 0
        assert p.monomials() == [mono(v12, (3, 1), (3, 1))]

    def test_different_ambient(self, v12: GrassmannIndex, v13: GrassmannIndex) -> None:
        with pytest.raises(InvalidInputError):
            X(v12, 3, 1) + X(v13, 4, 1)


class TestMinors:
    """Tests for f_theta on the generic matrix."""

    def test_generic_matrix(self, v12: GrassmannIndex) -> None:
        matrix = GenericMatrix(v12)
        assert matrix.row(1) == (1, 0)
        assert matrix.row(2) == (0, 1)
        assert matrix.row(3) == (Root(3, 1), Root(3, 2))

    def test_generic_matrix_rows_feed_the_minor(self, v13: GrassmannIndex) -> None:
        matrix = GenericMatrix(v13)
        assert matrix.is_unit_row(3)
        assert matrix.unit_column(3) == 1
        assert matrix.variable(4, 0) == X(v13, 4, 1)
        with pytest.raises(InvalidInputError):
            matrix.variable(1, 0)
        assert minor(gi(4, 3, 4), v13) == -matrix.variable(4, 0)

    def test_full_block(self, v12: GrassmannIndex) -> None:
        f = minor(gi(4, 3, 4), v12)
        assert f == X(v12, 3, 1) * X(v12, 4, 2) - X(v12, 3, 2) * X(v12, 4, 1)

    def test_single_variable(self, v12: GrassmannIndex) -> None:
        assert minor(gi(4, 1, 3), v12) == X(v12, 3, 2)

    def test_sign_from_unit_rows(self, v12: GrassmannIndex) -> None:
        assert minor(gi(4, 2, 3), v12) == -X(v12, 3, 1)

    def test_theta_equal_v_is_one(self, v13: GrassmannIndex) -> None:
        assert minor(v13, v13) == MinorPolynomial.constant(v13, 1)

    def test_degree_is_v_degree(self) -> None:
        v = gi(6, 1, 3, 5)
        for theta in grassmann_indices(3, 6):
            f = minor(theta, v)
            assert f.is_homogeneous
            if not f.is_zero:
                assert f.degree == len(set(theta.entries) - set(v.entries))

    def test_shape_mismatch(self, v12: GrassmannIndex) -> None:
        with pytest.raises(InvalidInputError):
            minor(gi(5, 1, 2), v12)


class TestTermOrders:
    def test_variable_order_family_one(self, v12: GrassmannIndex) -> None:
        assert TermOrder(1).variables(v12) == (Root(3, 2), Root(3, 1), Root(4, 2), Root(4, 1))

    def test_nonpositive_variables_come_last(self, v13: GrassmannIndex) -> None:
        for family in (1, 2, 3, 4):
            assert TermOrder(family).variables(v13)[-1] == Root(2, 3)

    @pytest.mark.parametrize("family", [1, 2, 3, 4])
    def test_initial_term_is_distinguished(self, v12: GrassmannIndex, family: int) -> None:
        f = minor(gi(4, 3, 4), v12)
        assert initial_term(f, TermOrder(family)) == mono(v12, (3, 2), (4, 1))

    def test_mixed_signs(self, v13: GrassmannIndex) -> None:
        f = minor(gi(4, 2, 4), v13)
        for family in (1, 3):
            assert initial_term(f, TermOrder(family)) == mono(v13, (2, 1), (4, 3))

    def test_unknown_family(self) -> None:
        with pytest.raises(InvalidInputError):
            TermOrder(5)

    def test_zero_has_no_initial_term(self, v12: GrassmannIndex) -> None:
        with pytest.raises(InvalidInputError):
            initial_term(MinorPolynomial(v12), TermOrder(1))


class TestInitialTermCheck:
    def test_every_theta_and_family(self, v12: GrassmannIndex) -> None:
        report = check_initial_terms(v12)
        assert report.checked == 24
        assert report.ok

    def test_with_a_nonpositive_root(self, v13: GrassmannIndex) -> None:
        report = check_initial_terms(v13)
        assert report.checked == 20
        assert report.ok

    def test_restricted_to_theta_not_below_w(self, v12: GrassmannIndex, w24: GrassmannIndex) -> None:
        report = check_initial_terms(v12, w24, families=(2,))
        assert report.checked == 1
        assert report.families == (2,)

    @pytest.mark.parametrize("d,n", [(2, 5), (3, 6)])
    def test_all_points(self, d: int, n: int) -> None:
        for v in grassmann_indices(d, n):
            assert check_initial_terms(v).ok


class TestInitialIdeal:
    def test_quadric_generator(self, v12: GrassmannIndex, w24: GrassmannIndex) -> None:
        assert initial_ideal_generators(v12, w24) == (mono(v12, (3, 2), (4, 1)),)

    def test_membership(self, v12: GrassmannIndex, w24: GrassmannIndex) -> None:
        assert monomial_ideal_member(mono(v12, (3, 1), (3, 2), (4, 1)), v12, w24)
        assert not monomial_ideal_member(mono(v12, (3, 1), (4, 2)), v12, w24)
        assert not monomial_ideal_member(RootMonomial(v12), v12, w24)

    def test_membership_is_non_domination(self, v12: GrassmannIndex, w24: GrassmannIndex) -> None:
        for theta in grassmann_indices(2, 4):
            if bruhat_leq(v12, theta) and theta != v12:
                m = distinguished_of(theta, v12).as_monomial()
                assert monomial_ideal_member(m, v12, w24) == (not bruhat_leq(theta, w24))

    @pytest.mark.parametrize("m", range(5))
    def test_hilbert_agrees(self, v12: GrassmannIndex, w24: GrassmannIndex, m: int) -> None:
        assert initial_ideal_hilbert(v12, w24, m) == (m + 1) ** 2

    def test_hilbert_agrees_in_i36(self) -> None:
        v, w = gi(6, 1, 2, 4), gi(6, 3, 5, 6)
        for m in range(4):
            assert initial_ideal_hilbert(v, w, m) == hilbert_direct(v, w, m)


class TestGeneratorReduction:
    """Tests for writing f_theta, theta not above v, through the f_mu."""

    def test_reduction_family(self) -> None:
        v, w = gi(5, 2, 3), gi(5, 2, 4)
        assert reduction_family(v, w, gi(5, 1, 5)) == [gi(5, 2, 5), gi(5, 3, 5)]

    def test_certificate_recombines(self) -> None:
        v, w, theta = gi(5, 2, 3), gi(5, 2, 4), gi(5, 1, 5)
        certificate = verify_generator_reduction(v, w, theta)
        assert certificate.source == "reduction_family"
        scale = lcm(*(coefficient.denominator for _, _, coefficient in certificate.terms))
        total = MinorPolynomial(v)
        for mu, multiplier, coefficient in certificate.terms:
            term = MinorPolynomial.from_monomial(multiplier) * minor(mu, v)
            total = total + term * int(coefficient * scale)
        assert total == minor(theta, v) * scale
        assert minor(theta, v) == X(v, 1, 2) * X(v, 5, 3) - X(v, 1, 3) * X(v, 5, 2)

    def test_trivial_above_v(self) -> None:
        v, w = gi(5, 2, 3), gi(5, 2, 4)
        certificate = verify_generator_reduction(v, w, gi(5, 3, 5))
        assert certificate.source == "trivial"
        assert certificate.to_dict()["terms"] == [
            {"mu": [3, 5], "multiplier": "{}", "coefficient": "1"}
        ]

    def test_rejects_theta_below_w(self) -> None:
        with pytest.raises(InvalidInputError):
            verify_generator_reduction(gi(5, 2, 3), gi(5, 2, 4), gi(5, 1, 4))

    def test_every_reducible_theta(self) -> None:
        v, w = gi(5, 2, 3), gi(5, 2, 4)
        thetas = reducible_indices(v, w)
        assert gi(5, 1, 5) in thetas
        for theta in thetas:
            verify_generator_reduction(v, w, theta)
