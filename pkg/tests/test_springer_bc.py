import pytest
from hypothesis import given, settings, strategies as st

from coxkrew import kreweras as K
from coxkrew.partitions import enumerate_bipartitions, pair_stats, parse_bipartition
from coxkrew.qlaurent import ONE, IntLaurentPoly, monomial, q_binomial
from coxkrew.springer_bc import (InvalidOmega, OmegaPair, collapse_C, critical_values, enumerate_omega,
                                 exterior_gen_poly, exterior_gen_poly_complement, iota, iota_inverse,
                                 iota_inverse_search, kreweras_via_orbit, level_stratum_closed_form,
                                 level_stratum_sum_check, orbit_count_exotic, orbit_count_sun, phi_C, split)
from coxkrew.types import CoxeterType

b = parse_bipartition


def test_iota_examples():
    assert iota(OmegaPair([1, 1, 1, 1], {1: 0})) == b("((),(1,1))")
    assert iota(OmegaPair([4], {4: 2})) == b("((2),())")
    assert iota(OmegaPair([2, 2], {2: 1})) == b("((1),(1))")
    assert iota_inverse(b("((),(1,1))")) == OmegaPair([1, 1, 1, 1], {1: 0})
    for n in range(1, 5):
        assert iota_inverse(b(f"(({n}),())")) == OmegaPair([2 * n], {2 * n: n})


def test_invalid_omega():
    with pytest.raises(InvalidOmega):
        OmegaPair([3], {3: 1})
    with pytest.raises(InvalidOmega):
        OmegaPair([2, 2], {2: 2})
    with pytest.raises(InvalidOmega):
        OmegaPair([4], {4: 1})  # odd multiplicity forces kappa = r/2


@pytest.mark.parametrize("n", range(1, 7))
def test_iota_is_a_bijection(n):
    omegas = enumerate_omega(n)
    images = [iota(w) for w in omegas]
    assert sorted(map(str, images)) == sorted(map(str, enumerate_bipartitions(n)))
    for w, im in zip(omegas, images):
        assert iota_inverse(im) == w
    if n <= 4:
        for im in images:
            assert iota_inverse_search(im) == iota_inverse(im)


def test_critical_value_examples():
    w = OmegaPair([4], {4: 2})
    assert critical_values(w) == {4}
    assert split(w) == (w, OmegaPair([], {}))
    w = OmegaPair([1, 1, 1, 1], {1: 0})
    assert critical_values(w) == set()
    assert split(w) == (OmegaPair([], {}), w)


@pytest.mark.parametrize("n", range(1, 7))
def test_odd_multiplicity_values_are_critical(n):
    for w in enumerate_omega(n):
        for r in set(w.lam):
            if w.lam.count(r) % 2:
                assert r in critical_values(w)


@pytest.mark.parametrize("n", range(1, 7))
def test_split_recombines(n):
    for w in enumerate_omega(n):
        dist, ind = split(w)
        assert sorted([*dist.lam, *ind.lam]) == sorted(w.lam)
        assert set(dist.lam) == critical_values(w)


def test_phi_and_collapse_examples():
    assert str(phi_C(b("((1),(1))"))) == "(2,2)"
    assert str(phi_C(b("((),(2))"))) == "(2,2)"
    assert collapse_C(b("((1),(1))")) == b("((1),(1))")


@pytest.mark.parametrize("n", range(1, 7))
def test_collapse_idempotent_and_level_preserving(n):
    for x in enumerate_bipartitions(n):
        y = collapse_C(x)
        assert collapse_C(y) == y
        assert pair_stats(y).l == pair_stats(x).l
        assert phi_C(y) == phi_C(x)


def test_rank_one_orbit_counts():
    assert orbit_count_exotic(b("((1),())")) == monomial(2) - ONE
    assert orbit_count_exotic(b("((),(1))")) == ONE


@pytest.mark.parametrize("n", range(1, 7))
def test_orbit_count_two_ways(n):
    for x in enumerate_bipartitions(n):
        assert orbit_count_exotic(x) == orbit_count_sun(x)


@pytest.mark.parametrize("n", range(1, 7))
def test_total_point_count(n):
    """The exotic nilcone has q^{2n^2} points, so the orbit counts sum to that."""
    total = sum((orbit_count_exotic(x) for x in enumerate_bipartitions(n)), IntLaurentPoly())
    assert total == monomial(2 * n * n)


def test_level_stratum_small_case():
    assert level_stratum_closed_form(1, 0) == monomial(2) - ONE
    assert all(level_stratum_sum_check(n, k) for n in range(1, 5) for k in range(n + 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_exterior_polynomials(n):
    for x in enumerate_bipartitions(n):
        coeffs = exterior_gen_poly(x)
        l = pair_stats(x).l
        assert len(coeffs) == n + 1
        for i, c in enumerate(coeffs):
            # prod_{j<=l} (1 + y q^{2j-1}) has y^i coefficient q^{i^2} [l choose i]_{q^2}
            expected = q_binomial(l, i, 2).shift(i * i) if i <= l else IntLaurentPoly()
            assert c == expected
        assert exterior_gen_poly_complement(x) == coeffs[::-1]
        assert coeffs[1].eval_at_one() == K.level(CoxeterType.BC(n), x)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10))
def test_orbit_route_matches_closed_form(n, k):
    t = 2 * k + 1
    T = CoxeterType.BC(n)
    for x in enumerate_bipartitions(n):
        assert kreweras_via_orbit(x, t) == K.kreweras(T, x, t)
