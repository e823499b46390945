import numpy as np
import pytest

from src.bost_connes.crossed_product import BCElem
from src.cyclotomic.polynomials import IntPoly, cyclotomic_poly
from src.dynamical.graded_endo import (
    GradedEndo,
    as_integer_matrix,
    companion_matrix,
    cyclic_pair,
    dyn_disjoint_union,
    dyn_product,
    dyn_rho_tilde_n,
    dyn_scale,
    dyn_sigma_n,
    matrix_power,
    point_pair,
    verschiebung_block,
    verschiebung_intertwiner,
)
from src.dynamical.spectrum import (
    bold_spectrum,
    characteristic_polynomial,
    primitive_roots,
    quasi_unipotent_check,
    spectrum_euler,
)
from src.group_ring.group_ring import GroupRingElem, rho_tilde_n, sigma_n
from src.utils.errors import InvalidInputError, NotQuasiUnipotentError

ROTATION = [[0, -1], [1, 0]]


def e(*rs):
    return GroupRingElem.from_dict({r: 1 for r in rs})


def single(matrix, degree=0):
    return GradedEndo.single(matrix, degree)


def test_graded_endo_validation():
    with pytest.raises(InvalidInputError):
        single([[1, 2]])
    with pytest.raises(InvalidInputError):
        single([[0.5]])
    with pytest.raises(InvalidInputError):
        GradedEndo(((0, [[1]]), (0, [[2]])))
    with pytest.raises(InvalidInputError):
        single([[1]], degree=-1)
    assert GradedEndo(((0, np.zeros((0, 0), dtype=int)), (1, [[1]]))).degrees == [1]


def test_characteristic_polynomial():
    assert characteristic_polynomial(single(ROTATION).matrix(0)) == IntPoly((1, 0, 1))
    for d in range(1, 16):
        assert characteristic_polynomial(companion_matrix(cyclotomic_poly(d))) == cyclotomic_poly(d)


def test_quasi_unipotent_check():
    certificate = quasi_unipotent_check(single(ROTATION))
    assert certificate.passed
    assert certificate.cyclotomic_multiplicities() == {0: {4: 1}}
    assert not quasi_unipotent_check(single([[2]]))
    assert quasi_unipotent_check(single(np.eye(3, dtype=int).tolist())).cyclotomic_multiplicities() == {0: {1: 3}}
    assert not quasi_unipotent_check(single([[0]]))
    assert quasi_unipotent_check(single([[0]]), allow_zero=True)


def test_spectrum_examples():
    assert spectrum_euler(single(ROTATION)) == e("1/4", "3/4")
    assert spectrum_euler(point_pair()) == GroupRingElem.one()
    g = GradedEndo(((0, [[1]]), (1, [[1]])))
    assert spectrum_euler(g, signed=True) == GroupRingElem.zero()
    assert spectrum_euler(g) == GroupRingElem.basis("0/1", 2)


def test_spectrum_rejects_non_cyclotomic_blocks():
    with pytest.raises(NotQuasiUnipotentError) as info:
        spectrum_euler(GradedEndo(((0, [[1]]), (1, [[2]]))))
    assert info.value.degree == 1
    with pytest.raises(NotQuasiUnipotentError):
        spectrum_euler(single([[0, 0], [1, 0]]))


def test_primitive_roots():
    assert primitive_roots(1) == GroupRingElem.one()
    assert primitive_roots(6) == e("1/6", "5/6")


def test_sigma_examples():
    squared = dyn_sigma_n(2, single(ROTATION))
    assert squared == single([[-1, 0], [0, -1]])
    assert spectrum_euler(squared) == GroupRingElem.basis("1/2", 2)
    assert dyn_sigma_n(1, single(ROTATION)) == single(ROTATION)
    fourth = dyn_sigma_n(4, single(ROTATION))
    assert fourth == single([[1, 0], [0, 1]])
    assert spectrum_euler(fourth) == GroupRingElem.basis("0/1", 2)


def test_rho_examples():
    g = dyn_rho_tilde_n(3, point_pair())
    assert g == single([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    assert spectrum_euler(g) == e("0/1", "1/3", "2/3")
    assert g == cyclic_pair(3)


@pytest.mark.parametrize("d", range(1, 9))
@pytest.mark.parametrize("n", range(1, 7))
def test_spectrum_intertwines_the_endomorphisms(d, n):
    g = single(companion_matrix(cyclotomic_poly(d)))
    assert spectrum_euler(dyn_sigma_n(n, g)) == sigma_n(n, spectrum_euler(g))
    assert spectrum_euler(dyn_rho_tilde_n(n, g)) == rho_tilde_n(n, spectrum_euler(g))
    assert spectrum_euler(dyn_sigma_n(n, dyn_rho_tilde_n(n, g))) == spectrum_euler(dyn_scale(n, g))
    assert spectrum_euler(dyn_rho_tilde_n(n, dyn_sigma_n(n, g))) == spectrum_euler(dyn_product(g, cyclic_pair(n)))


def test_ring_homomorphism():
    g = GradedEndo(((0, companion_matrix(cyclotomic_poly(3))), (1, companion_matrix(cyclotomic_poly(4)))))
    h = GradedEndo(((0, [[1]]), (2, companion_matrix(cyclotomic_poly(6)))))
    for signed in (False, True):
        assert spectrum_euler(dyn_disjoint_union(g, h), signed) == spectrum_euler(g, signed) + spectrum_euler(h, signed)
        assert spectrum_euler(dyn_product(g, h), signed) == spectrum_euler(g, signed) * spectrum_euler(h, signed)
    assert g + h == dyn_disjoint_union(g, h)
    assert (g * h).degrees == [0, 1, 2, 3]
    assert g * point_pair() == g


def test_verschiebung_intertwiner():
    for d in (1, 3, 4, 6):
        m = companion_matrix(cyclotomic_poly(d))
        for n in range(1, 7):
            s = verschiebung_intertwiner(m, n)
            left = np.dot(s, verschiebung_block(matrix_power(m, n), n))
            right = np.dot(np.kron(cyclic_pair(n).matrix(0), m), s)
            assert np.array_equal(left, right)


def test_scale_and_empty_blocks():
    g = single(ROTATION)
    assert dyn_scale(0, g) == GradedEndo()
    assert dyn_scale(2, g).rank(0) == 4
    assert g.rank(5) == 0


def test_empty_matrix_is_a_zero_block():
    assert as_integer_matrix([]).shape == (0, 0)
    assert GradedEndo(((0, []), (1, ROTATION))) == GradedEndo(((1, ROTATION),))
    assert GradedEndo(((0, []),)) == GradedEndo()
    with pytest.raises(InvalidInputError):
        as_integer_matrix([[]])


def test_companion_matrix_requires_monic_polynomial():
    with pytest.raises(InvalidInputError):
        companion_matrix(IntPoly((1, 2)))


def test_bold_spectrum():
    u = bold_spectrum([(2, point_pair(), 2), (1, single(ROTATION), 3)])
    expected = BCElem.from_terms([(2, GroupRingElem.one(), 2), (1, e("1/4", "3/4"), 3)])
    assert u == expected
    assert u.coefficient(1, 1) == e("0/1", "1/2")
