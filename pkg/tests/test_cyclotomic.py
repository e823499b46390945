import pytest
import sympy

from src.cyclotomic.arith import divisors, euler_phi, lcm, mobius
from src.cyclotomic.polynomials import IntPoly, cyclotomic_factorize, cyclotomic_poly
from src.cyclotomic.qz import QZ, division_points, preimages, qz_make
from src.utils.errors import InvalidDenominatorError, InvalidInputError


@pytest.mark.parametrize("num, den, expected", [
    (5, 3, "2/3"),
    (0, 7, "0/1"),
    (-1, 4, "3/4"),
    (6, 8, "3/4"),
    (3, -4, "1/4"),
])
def test_make_reduces_mod_one(num, den, expected):
    assert str(qz_make(num, den)) == expected


def test_zero_denominator_is_rejected():
    with pytest.raises(InvalidDenominatorError):
        qz_make(1, 0)


def test_constructor_requires_reduced_representative():
    with pytest.raises(InvalidInputError):
        QZ(2, 4)


def test_parse_and_arithmetic():
    r = QZ.parse("1/3")
    assert r + r == QZ.make(2, 3)
    assert -r == QZ.make(2, 3)
    assert r.scale(3) == QZ.zero()
    assert QZ.parse("4") == QZ.zero()
    with pytest.raises(InvalidInputError):
        QZ.parse("one/3")


def test_root_of_unity():
    assert QZ.make(1, 4).root_of_unity() == pytest.approx(1j)
    assert QZ.make(1, 2).root_of_unity() == pytest.approx(-1)


@pytest.mark.parametrize("n, expected", [
    (1, ["0/1"]),
    (2, ["0/1", "1/2"]),
    (4, ["0/1", "1/4", "1/2", "3/4"]),
])
def test_division_points(n, expected):
    assert [str(r) for r in division_points(n)] == expected


@pytest.mark.parametrize("r, n, expected", [
    ("0/1", 2, ["0/1", "1/2"]),
    ("1/3", 1, ["1/3"]),
    ("1/2", 2, ["1/4", "3/4"]),
])
def test_preimages(r, n, expected):
    assert [str(s) for s in preimages(QZ.parse(r), n)] == expected


@pytest.mark.parametrize("n", range(1, 31))
def test_preimages_solve_the_equation(n):
    r = QZ.make(5, 12)
    solutions = preimages(r, n)
    assert len(set(solutions)) == n
    assert all(s.scale(n) == r for s in solutions)


def test_arith_helpers():
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert euler_phi(12) == 4
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert lcm(4, 6, 10) == 60
    assert lcm() == 1


@pytest.mark.parametrize("d, expected", [
    (1, [-1, 1]),
    (4, [1, 0, 1]),
    (6, [1, -1, 1]),
])
def test_cyclotomic_poly_examples(d, expected):
    assert cyclotomic_poly(d).to_list() == expected


@pytest.mark.parametrize("d", range(1, 61))
def test_cyclotomic_poly_matches_sympy(d):
    t = sympy.Symbol("t")
    oracle = sympy.Poly(sympy.cyclotomic_poly(d, t), t).all_coeffs()
    assert cyclotomic_poly(d) == IntPoly.from_high_to_low(int(c) for c in oracle)


def test_cyclotomic_poly_rejects_zero():
    with pytest.raises(InvalidInputError):
        cyclotomic_poly(0)


def test_factorize_examples():
    f = cyclotomic_factorize(IntPoly((1, 0, 1)))
    assert (f.zero_mult, f.cyclo, f.remainder) == (0, {4: 1}, IntPoly.one())

    f = cyclotomic_factorize(IntPoly((0, 0, -1, 1)))
    assert (f.zero_mult, f.cyclo, f.remainder) == (2, {1: 1}, IntPoly.one())
    assert f.is_quasi_idempotent() and not f.is_quasi_unipotent()

    f = cyclotomic_factorize(IntPoly((-2, 0, 1)))
    assert (f.zero_mult, f.cyclo, f.remainder) == (0, {}, IntPoly((-2, 0, 1)))
    assert not f.fully_factored


def test_factorize_multiplies_back():
    p = cyclotomic_poly(12) ** 2 * cyclotomic_poly(5) * IntPoly((3, -1, 1)) * IntPoly.monomial(3)
    f = cyclotomic_factorize(p)
    assert f.cyclo == {5: 1, 12: 2}
    assert f.zero_mult == 3
    assert f.expand() == p


def test_factorize_rejects_zero():
    with pytest.raises(InvalidInputError):
        cyclotomic_factorize(IntPoly())


def test_intpoly_printing_and_evaluation():
    p = IntPoly((1, -1, 1))
    assert str(p) == "t^2 - t + 1"
    assert p(2) == 3
    quotient, remainder = (IntPoly.monomial(6) - IntPoly.one()).divmod_monic(cyclotomic_poly(3))
    assert remainder.is_zero()
    assert quotient * cyclotomic_poly(3) == IntPoly.monomial(6) - IntPoly.one()
