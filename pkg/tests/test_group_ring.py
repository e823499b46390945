import random
from fractions import Fraction

import pytest

from src.cyclotomic.qz import QZ
from src.group_ring.group_ring import (
    GroupRingElem,
    cyclic_class,
    from_subring_coefficients,
    in_fixed_subring,
    pi_n,
    rho_n,
    rho_tilde_n,
    sigma_n,
    twist,
)
from src.utils.errors import CoefficientModeError, InvalidInputError


def e(*pairs, rational=False):
    """e("1/3") or e(("1/3", 2), ("0/1", 1))"""
    mapping = {}
    for pair in pairs:
        r, c = (pair, 1) if isinstance(pair, str) else pair
        mapping[QZ.parse(r)] = mapping.get(QZ.parse(r), 0) + c
    return GroupRingElem.from_dict(mapping, rational)


def random_element(rng):
    return GroupRingElem.from_dict({
        QZ.make(rng.randrange(24), rng.randint(1, 24)): rng.randint(-5, 5) for _ in range(4)
    })


def test_terms_are_sorted_and_merged():
    x = GroupRingElem.from_dict({"1/2": 1, "0/1": 2, "2/4": 3, "1/3": 0})
    assert [(str(r), c) for r, c in x.terms] == [("0/1", 2), ("1/2", 4)]
    assert x.level == 2


def test_products():
    assert e("1/3") * e("1/3") == e("2/3")
    assert e("1/2") * e("1/2") == e("0/1")
    assert (e("0/1") + e("1/2")) * (e("0/1") + e("1/2")) == e(("0/1", 2), ("1/2", 2))


def test_sigma_examples():
    assert sigma_n(2, e("1/3")) == e("2/3")
    x = e("0/1", "1/4", "1/2", "3/4")
    assert sigma_n(1, x) == x
    assert sigma_n(2, x) == e(("0/1", 2), ("1/2", 2))


def test_rho_tilde_examples():
    assert rho_tilde_n(2, e("0/1")) == e("0/1", "1/2")
    assert rho_tilde_n(2, e("1/2")) == e("1/4", "3/4")
    x = e(("1/5", 3))
    assert rho_tilde_n(1, x) == x


def test_rho_needs_rational_mode():
    with pytest.raises(CoefficientModeError):
        rho_n(2, e("0/1"))
    half = Fraction(1, 2)
    assert rho_n(2, e("0/1", rational=True)) == e(("0/1", half), ("1/2", half), rational=True)


def test_pi():
    assert pi_n(1) == e("0/1")
    assert pi_n(2) == e(("0/1", Fraction(1, 2)), ("1/2", Fraction(1, 2)), rational=True)
    for n in range(1, 13):
        assert pi_n(n) * pi_n(n) == pi_n(n)


@pytest.mark.parametrize("seed", range(5))
def test_relations_on_random_elements(seed):
    rng = random.Random(seed)
    for _ in range(50):
        x, y, n = random_element(rng), random_element(rng), rng.randint(1, 12)
        assert rho_tilde_n(n, sigma_n(n, x) * y) == x * rho_tilde_n(n, y)
        assert sigma_n(n, rho_tilde_n(n, x)) == x.scale(n)
        assert rho_tilde_n(n, sigma_n(n, x)) == (pi_n(n) * x).scale(n)


def test_sigma_is_a_ring_homomorphism():
    rng = random.Random(7)
    for _ in range(100):
        x, y, n = random_element(rng), random_element(rng), rng.randint(1, 12)
        assert sigma_n(n, x * y) == sigma_n(n, x) * sigma_n(n, y)
        assert sigma_n(n, x + y) == sigma_n(n, x) + sigma_n(n, y)


def test_invalid_index():
    with pytest.raises(InvalidInputError):
        sigma_n(0, e("0/1"))
    with pytest.raises(InvalidInputError):
        pi_n(0)


def test_mode_mixing_stays_rational():
    assert (e("0/1") + e(("0/1", Fraction(1, 2)), rational=True)).rational
    with pytest.raises(CoefficientModeError):
        GroupRingElem.from_dict({"0/1": Fraction(1, 2)})


@pytest.mark.parametrize("x, member, coefficients", [
    (e("0/1", "1/2"), True, {2: 1}),
    (e("1/3"), False, {}),
    (e(("0/1", 2)), True, {1: 2}),
    (e(("0/1", 3), ("1/2", 1)), True, {1: 2, 2: 1}),
    (e("1/4", "3/4"), True, {4: 1, 2: -1}),
])
def test_fixed_subring_membership(x, member, coefficients):
    result = in_fixed_subring(x)
    assert result.member is member
    assert result.coefficients == coefficients
    if member:
        assert from_subring_coefficients(result.coefficients) == x
    else:
        assert result.reason


def test_fixed_subring_rejects_rational_mode():
    with pytest.raises(CoefficientModeError):
        in_fixed_subring(pi_n(2))


def test_cyclic_class_is_rho_tilde_of_one():
    for d in range(1, 13):
        assert cyclic_class(d) == rho_tilde_n(d, GroupRingElem.one())


def test_twist():
    assert twist(2, e("1/3")) == e("2/3")
    with pytest.raises(InvalidInputError):
        twist(2, e("1/4"))
