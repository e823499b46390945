import random
from math import gcd

import pytest

from src.bost_connes.crossed_product import (
    BCElem,
    RationalBCElem,
    bc_inject,
    bc_mu_star,
    bc_mu_tilde,
    bc_mul,
    bc_rationalize,
)
from src.cyclotomic.qz import QZ
from src.group_ring.group_ring import GroupRingElem, rho_tilde_n, sigma_n
from src.utils.errors import InvalidInputError


def e(r, c=1):
    return GroupRingElem.basis(r, c)


def random_term(rng):
    x = GroupRingElem.from_dict({QZ.make(rng.randrange(12), rng.randint(1, 12)): rng.randint(-3, 3) for _ in range(2)})
    return BCElem.from_terms([(rng.randint(1, 6), x, rng.randint(1, 6))])


def test_constructors():
    assert bc_inject(e("1/2")).terms == ((1, e("1/2"), 1),)
    assert bc_mu_tilde(6).terms == ((6, e("0/1"), 1),)
    assert bc_mu_star(1) == BCElem.unit()


def test_from_terms_normalizes_common_factors():
    u = BCElem.from_terms([(2, e("0/1"), 2)])
    assert u == bc_inject(e("0/1") + e("1/2"))
    with pytest.raises(InvalidInputError):
        BCElem.from_terms([(0, e("0/1"), 1)])


def test_generator_relations():
    assert bc_mu_star(2) * bc_mu_tilde(2) == BCElem.unit().scale(2)
    assert bc_mu_tilde(2) * bc_inject(e("0/1")) * bc_mu_star(2) == bc_inject(e("0/1") + e("1/2"))
    for n in range(1, 9):
        for m in range(1, 9):
            assert bc_mu_tilde(n * m) == bc_mu_tilde(n) * bc_mu_tilde(m)
            assert bc_mu_star(n * m) == bc_mu_star(n) * bc_mu_star(m)
            if gcd(n, m) == 1:
                assert bc_mu_tilde(n) * bc_mu_star(m) == bc_mu_star(m) * bc_mu_tilde(n)


def test_mixed_word_collapses_to_a_group_ring_element():
    left = bc_mu_tilde(2) * bc_mu_star(3)
    right = bc_mu_tilde(3) * bc_mu_star(2)
    assert bc_mul(left, right) == bc_inject(e("0/1", 3) + e("1/2", 3))


@pytest.mark.parametrize("r, n", [("1/3", 2), ("1/4", 3), ("0/1", 5), ("5/6", 4)])
def test_commutation_with_group_ring(r, n):
    x = bc_inject(e(r))
    assert x * bc_mu_tilde(n) == bc_mu_tilde(n) * bc_inject(sigma_n(n, e(r)))
    assert bc_mu_star(n) * x == bc_inject(sigma_n(n, e(r))) * bc_mu_star(n)
    assert bc_mu_tilde(n) * x * bc_mu_star(n) == bc_inject(rho_tilde_n(n, e(r)))


def test_associativity_on_random_triples():
    rng = random.Random(11)
    for _ in range(60):
        u, v, w = random_term(rng), random_term(rng), random_term(rng)
        assert (u * v) * w == u * (v * w)


def test_additive_structure():
    u = bc_mu_tilde(2) + bc_mu_star(3)
    assert u - bc_mu_star(3) == bc_mu_tilde(2)
    assert not (u - u)
    assert -u + u == BCElem.zero()
    assert u.coefficient(2, 1) == e("0/1")
    assert u.coefficient(5, 5) == GroupRingElem.zero()


def test_rationalize():
    assert bc_rationalize(bc_mu_tilde(2)) == RationalBCElem.mu(2).scale(2)
    assert bc_rationalize(BCElem.unit()) == RationalBCElem.unit()
    u = bc_rationalize(bc_mu_tilde(2) * bc_inject(e("0/1")) * bc_mu_star(2))
    assert u == RationalBCElem.inject(e("0/1") + e("1/2"))


def test_rationalize_is_multiplicative():
    rng = random.Random(3)
    for _ in range(60):
        u, v = random_term(rng), random_term(rng)
        assert bc_rationalize(u * v) == bc_rationalize(u) * bc_rationalize(v)


def test_rational_relations():
    for n in range(1, 9):
        assert RationalBCElem.mu_star(n) * RationalBCElem.mu(n) == RationalBCElem.unit()
    x = e("1/3").to_rational()
    lhs = RationalBCElem.mu(2) * RationalBCElem.inject(x) * RationalBCElem.mu_star(2)
    assert lhs == RationalBCElem.inject(x.rho(2))


def test_integer_scalars():
    assert 3 * bc_mu_tilde(2) == bc_mu_tilde(2).scale(3)
    assert bc_mu_tilde(2) * 0 == BCElem.zero()
