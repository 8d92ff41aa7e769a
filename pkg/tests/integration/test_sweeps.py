"""Exhaustive checks over every pair v <= w at small n."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubert_cone.services.bijection import (
    least_dominating_bruteforce,
    phi,
    pi,
    verify_full_bijection,
)
from schubert_cone.services.combinatorics import (
    GrassmannIndex,
    RootMonomial,
    bruhat_leq,
    dominates_monomial,
    grassmann_indices,
    positive_roots,
    v_degree,
)
from schubert_cone.services.hilbert import (
    hilbert_direct,
    hilbert_inclusion_exclusion,
    maximal_dominated,
    multiplicity,
    smooth_point_hilbert,
)
from schubert_cone.services.lattice_paths import enumerate_tuples, monomial_to_tuple, tuple_to_monomial
from schubert_cone.services.minor_algebra import check_initial_terms, initial_ideal_hilbert
from schubert_cone.services.standard_monomials import count_SM

pytestmark = [pytest.mark.slow, pytest.mark.integration]


def pairs(n: int) -> list[tuple[GrassmannIndex, GrassmannIndex]]:
    return [
        (v, w)
        for d in range(1, n)
        for v in grassmann_indices(d, n)
        for w in grassmann_indices(d, n)
        if bruhat_leq(v, w)
    ]


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_hilbert_three_ways(n: int) -> None:
    for v, w in pairs(n):
        family = maximal_dominated(v, w)
        for m in range(7):
            direct = hilbert_direct(v, w, m)
            assert hilbert_inclusion_exclusion(v, w, m, family) == direct
            if m <= 4:
                assert count_SM(v, w, m) == direct


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8, 9])
def test_paths_count_the_multiplicity(n: int) -> None:
    for v, w in pairs(n):
        tuples = enumerate_tuples(v, w)
        assert len(tuples) == multiplicity(v, w)
        for t in tuples:
            assert monomial_to_tuple(tuple_to_monomial(t), w) == t


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_initial_terms(n: int) -> None:
    for d in range(1, n):
        for v in grassmann_indices(d, n):
            assert check_initial_terms(v).ok


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_initial_ideal_counts(n: int) -> None:
    for v, w in pairs(n):
        for m in range(5):
            assert initial_ideal_hilbert(v, w, m) == hilbert_direct(v, w, m)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_smooth_points(n: int) -> None:
    for d in range(1, n):
        for v in grassmann_indices(d, n):
            assert multiplicity(v, v) == 1
            for m in range(4):
                assert hilbert_direct(v, v, m) == smooth_point_hilbert(v, m)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_full_bijection_all_pairs(n: int) -> None:
    for v, w in pairs(n):
        for m in range(5):
            check = verify_full_bijection(v, w, m)
            assert check.ok, check.failures


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=7, max_value=8), st.data())
def test_full_bijection_sampled(n: int, data: st.DataObject) -> None:
    d = data.draw(st.integers(min_value=1, max_value=n - 1))
    indices = grassmann_indices(d, n)
    v = data.draw(st.sampled_from(indices))
    w = data.draw(st.sampled_from([w for w in indices if bruhat_leq(v, w)]))
    m = data.draw(st.integers(min_value=0, max_value=4))
    check = verify_full_bijection(v, w, m)
    assert check.ok, check.failures


def test_nine_example_three_ways(nine_v: GrassmannIndex, nine_w: GrassmannIndex) -> None:
    family = maximal_dominated(nine_v, nine_w)
    assert family.k == 9
    assert len(maximal_dominated(nine_v, nine_w, method="paths").faces) == 9
    assert len(enumerate_tuples(nine_v, nine_w)) == 9


@st.composite
def monomials(draw: st.DrawFn) -> RootMonomial:
    n = draw(st.integers(min_value=2, max_value=8))
    d = draw(st.integers(min_value=1, max_value=n - 1))
    v = draw(st.sampled_from([v for v in grassmann_indices(d, n) if positive_roots(v)]))
    return RootMonomial.of(v, draw(st.lists(st.sampled_from(positive_roots(v)), min_size=1, max_size=6)))


@settings(max_examples=10_000, deadline=None)
@given(monomials(), st.data())
def test_pi_phi_property_suite(m: RootMonomial, data: st.DataObject) -> None:
    v = m.v
    image = pi(m)
    assert bruhat_leq(v, image.w) and image.w != v
    assert v_degree(image.w, v) + image.residual.degree == m.degree
    assert dominates_monomial(image.w, v, image.residual)
    assert image.w == least_dominating_bruteforce(m, v)
    assert phi(image.w, v, image.residual) == m

    # any index above pi(m).w still dominates the residual
    upper = data.draw(
        st.sampled_from([w for w in grassmann_indices(v.d, v.n) if bruhat_leq(image.w, w)])
    )
    rebuilt = pi(phi(upper, v, image.residual))
    assert (rebuilt.w, rebuilt.residual) == (upper, image.residual)
