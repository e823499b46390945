from dataclasses import dataclass, field
from math import gcd

import sympy
from sympy.polys.matrices import DomainMatrix

from src.bost_connes.crossed_product import BCElem
from src.cyclotomic.polynomials import IntPoly, cyclotomic_factorize
from src.cyclotomic.qz import QZ
from src.group_ring.group_ring import GroupRingElem
from src.utils.errors import NotQuasiUnipotentError
from src.utils.logger import get_logger

logger = get_logger(__name__)


def characteristic_polynomial(matrix):
    """det(t I - M) as an exact IntPoly"""
    coeffs = DomainMatrix.from_Matrix(sympy.Matrix(matrix.tolist())).charpoly()
    poly = IntPoly.from_high_to_low(int(c) for c in coeffs)
    logger.debug("charpoly of %dx%d block: %s", matrix.shape[0], matrix.shape[0], poly)
    return poly


@dataclass(frozen=True)
class QuasiUnipotenceCertificate:
    """Per-degree cyclotomic factorizations of the characteristic polynomials"""

    passed: bool
    factorizations: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def cyclotomic_multiplicities(self):
        """{degree: {d: multiplicity of Phi_d}}"""
        return {k: dict(f.cyclo) for k, f in self.factorizations.items()}


def quasi_unipotent_check(g, allow_zero=False):
    """
    Decide whether every eigenvalue of every block is a root of unity

    Args:
        g: GradedEndo
        allow_zero: Also accept the eigenvalue 0 (quasi-idempotent maps)

    Returns:
        QuasiUnipotenceCertificate
    """
    factorizations = {k: cyclotomic_factorize(characteristic_polynomial(m)) for k, m in g.blocks}
    if allow_zero:
        passed = all(f.is_quasi_idempotent() for f in factorizations.values())
    else:
        passed = all(f.is_quasi_unipotent() for f in factorizations.values())
    return QuasiUnipotenceCertificate(passed, factorizations)


def primitive_roots(d):
    """sum of e(j/d) over j coprime to d"""
    return GroupRingElem.from_dict({QZ.make(j, d): 1 for j in range(d) if gcd(j, d) == 1})


def spectrum_euler(g, signed=False):
    """
    Eigenvalues of f on homology, with multiplicity, as an element of Z[Q/Z]

    Args:
        g: Quasi-unipotent GradedEndo
        signed: Weight degree k by (-1)^k instead of 1

    Returns:
        GroupRingElem

    Raises:
        NotQuasiUnipotentError: if some block has an eigenvalue that is zero
        or not a root of unity
    """
    certificate = quasi_unipotent_check(g)
    total = GroupRingElem.zero()
    for k, factorization in certificate.factorizations.items():
        if not factorization.fully_factored:
            raise NotQuasiUnipotentError(k, factorization.remainder)
        if factorization.zero_mult:
            raise NotQuasiUnipotentError(k, f"t^{factorization.zero_mult}")
        weight = -1 if signed and k % 2 else 1
        for d, mult in factorization.cyclo.items():
            total = total + primitive_roots(d).scale(weight * mult)
    return total


def bold_spectrum(terms, signed=False):
    """
    Spectrum on noncommutative words sum mu~_a (X, f) mu*_b

    Args:
        terms: Iterable of (a, GradedEndo, b)
        signed: Passed to spectrum_euler

    Returns:
        BCElem
    """
    return BCElem.from_terms((a, spectrum_euler(g, signed), b) for a, g, b in terms)
