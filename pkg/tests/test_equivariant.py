import pytest

from src.equivariant.bold_k0 import BoldK0Elem, bold_chi
from src.equivariant.finite_sets import FiniteZSet
from src.equivariant.orbit_sum import (
    OrbitSum,
    chi_hat_z,
    cyclic_pair_class,
    eq_rho_tilde_n,
    eq_sigma_n,
    euler_characteristic_to_burnside,
    orbit_product,
)
from src.bost_connes.crossed_product import BCElem
from src.group_ring.group_ring import GroupRingElem, cyclic_class, rho_tilde_n, sigma_n
from src.utils.errors import InvalidInputError

Z = OrbitSum.orbit


def realize(x):
    return FiniteZSet.from_orbit_sum(x)


@pytest.mark.parametrize("x, y, expected", [
    (Z(2), Z(3), Z(6)),
    (Z(4), Z(6), Z(12, 2)),
    (Z(1), Z(5) + Z(2, 3), Z(5) + Z(2, 3)),
])
def test_orbit_product(x, y, expected):
    assert orbit_product(x, y) == expected
    assert x * y == expected


@pytest.mark.parametrize("d", range(1, 9))
@pytest.mark.parametrize("e", range(1, 9))
def test_orbit_product_matches_enumeration(d, e):
    assert realize(Z(d)).product(realize(Z(e))).orbit_sum() == orbit_product(Z(d), Z(e))


def test_sigma_examples():
    assert eq_sigma_n(2, Z(4)) == Z(2, 2)
    assert eq_sigma_n(3, Z(2)) == Z(2)
    assert eq_sigma_n(7, Z(1)) == Z(1)


def test_rho_tilde_examples():
    assert eq_rho_tilde_n(2, Z(1)) == Z(2)
    assert eq_rho_tilde_n(3, Z(2)) == Z(6)
    x = Z(3) + Z(4, 2)
    assert eq_rho_tilde_n(1, x) == x


@pytest.mark.parametrize("d", range(1, 9))
@pytest.mark.parametrize("n", range(1, 6))
def test_lifts_match_the_permutation_model(d, n):
    assert realize(Z(d)).precompose_power(n).orbit_sum() == eq_sigma_n(n, Z(d))
    assert realize(Z(d)).verschiebung(n).orbit_sum() == eq_rho_tilde_n(n, Z(d))


@pytest.mark.parametrize("d", range(1, 13))
@pytest.mark.parametrize("n", range(1, 7))
def test_chi_intertwines_the_endomorphisms(d, n):
    assert chi_hat_z(eq_sigma_n(n, Z(d))) == sigma_n(n, chi_hat_z(Z(d)))
    assert chi_hat_z(eq_rho_tilde_n(n, Z(d))) == rho_tilde_n(n, chi_hat_z(Z(d)))


def test_chi_examples():
    assert chi_hat_z(Z(1)) == GroupRingElem.one()
    assert chi_hat_z(Z(2)) == GroupRingElem.from_dict({"0/1": 1, "1/2": 1})
    assert chi_hat_z(Z(4)) == cyclic_class(4)
    assert chi_hat_z(cyclic_pair_class(5)) == cyclic_class(5)


def test_chi_is_multiplicative():
    for d in range(1, 10):
        for e in range(1, 10):
            assert chi_hat_z(orbit_product(Z(d), Z(e))) == chi_hat_z(Z(d)) * chi_hat_z(Z(e))


def test_composites_with_the_cyclic_pair():
    for d in range(1, 9):
        for n in range(1, 6):
            assert eq_sigma_n(n, eq_rho_tilde_n(n, Z(d))) == Z(d, n)
            assert eq_rho_tilde_n(n, eq_sigma_n(n, Z(d))) == orbit_product(Z(d), cyclic_pair_class(n))


def test_virtual_classes():
    x = Z(2) - Z(1, 3)
    assert not x.is_genuine()
    assert x.cardinality == -1
    with pytest.raises(InvalidInputError):
        realize(x)
    assert euler_characteristic_to_burnside(x) == x


def test_finite_set_structure():
    s = realize(Z(3) + Z(1))
    assert s.size == 4
    assert s.fixed_points(1) == 1
    assert s.fixed_points(3) == 4
    assert s.disjoint_union(realize(Z(2))).orbit_sum() == Z(3) + Z(1) + Z(2)
    with pytest.raises(InvalidInputError):
        FiniteZSet((0, 0))


def test_orbit_validation():
    with pytest.raises(InvalidInputError):
        Z(0)
    with pytest.raises(InvalidInputError):
        eq_sigma_n(0, Z(1))


def test_bold_chi_examples():
    assert bold_chi(BoldK0Elem.inject(Z(2))) == BCElem.inject(cyclic_class(2))
    assert bold_chi(BoldK0Elem.unit()) == BCElem.unit()
    u = BoldK0Elem.from_terms([(2, Z(1), 2)])
    assert u == BoldK0Elem.inject(Z(2))
    assert bold_chi(u) == BCElem.inject(cyclic_class(2))


def test_bold_relations():
    assert BoldK0Elem.mu_star(3) * BoldK0Elem.mu_tilde(3) == BoldK0Elem.unit().scale(3)
    x = BoldK0Elem.inject(Z(4))
    assert BoldK0Elem.mu_tilde(2) * x * BoldK0Elem.mu_star(2) == BoldK0Elem.inject(Z(8))
    u = BoldK0Elem.mu_tilde(2) * BoldK0Elem.inject(Z(3)) + BoldK0Elem.mu_star(5)
    v = BoldK0Elem.inject(Z(2)) * BoldK0Elem.mu_star(4)
    assert bold_chi(u * v) == bold_chi(u) * bold_chi(v)
