from functools import lru_cache
from math import factorial

import numpy as np
from scipy.special import bernoulli, poch

from src.utils.config import (
    EULER_MACLAURIN_MAX_TERMS,
    EULER_MACLAURIN_MIN_TERMS,
    EULER_MACLAURIN_ORDER,
    EULER_MACLAURIN_TOLERANCE,
)
from src.utils.errors import DomainError
from src.utils.logger import get_logger

logger = get_logger(__name__)

# B_0 .. B_{2(order+1)}; the last one bounds the first omitted correction
_BERNOULLI = bernoulli(2 * (EULER_MACLAURIN_ORDER + 1))


def check_beta(beta):
    """Inverse temperatures must exceed 1 for sum n^-beta to converge"""
    beta = float(beta)
    if not beta > 1.0:
        raise DomainError(f"beta = {beta} must be > 1")
    return beta


def _correction(beta, x, j):
    """B_2j / (2j)! * (beta)_(2j-1) * x^(-beta-2j+1)"""
    return _BERNOULLI[2 * j] / factorial(2 * j) * poch(beta, 2 * j - 1) * x ** (-beta - 2 * j + 1)


def _cutoff(beta, a):
    n = EULER_MACLAURIN_MIN_TERMS
    while n < EULER_MACLAURIN_MAX_TERMS:
        if abs(_correction(beta, n + a, EULER_MACLAURIN_ORDER + 1)) < EULER_MACLAURIN_TOLERANCE:
            break
        n *= 2
    return min(n, EULER_MACLAURIN_MAX_TERMS)


@lru_cache(maxsize=4096)
def hurwitz_zeta(beta, a=1.0):
    """
    Hurwitz zeta sum_{k >= 0} (k + a)^-beta by Euler-Maclaurin summation

    Args:
        beta: Real > 1
        a: Shift in (0, 1]

    Returns:
        float
    """
    beta = check_beta(beta)
    a = float(a)
    if not 0.0 < a <= 1.0:
        raise DomainError(f"Hurwitz parameter {a} must lie in (0, 1]")
    n = _cutoff(beta, a)
    head = np.sum((np.arange(n, dtype=np.float64) + a) ** (-beta))
    x = n + a
    tail = x ** (1.0 - beta) / (beta - 1.0) + x ** (-beta) / 2.0
    tail += sum(_correction(beta, x, j) for j in range(1, EULER_MACLAURIN_ORDER + 1))
    logger.debug("hurwitz(%g, %g): %d direct terms", beta, a, n)
    return float(head + tail)


def riemann_zeta(beta):
    return hurwitz_zeta(beta, 1.0)


def partition_function(beta):
    """Tr(exp(-beta H)) with H eps_n = log(n) eps_n, i.e. zeta(beta)"""
    return riemann_zeta(beta)


def polylog_at_root(beta, r):
    """
    Li_beta(exp(2 pi i r)) through the finite Hurwitz decomposition

    Args:
        beta: Real > 1
        r: QZ

    Returns:
        complex: q^-beta sum_{m=1}^{q} zeta_r^m hurwitz(beta, m/q), q = order of r
    """
    beta = check_beta(beta)
    q = r.den
    total = 0j
    for m in range(1, q + 1):
        total += r.scale(m).root_of_unity() * hurwitz_zeta(beta, m / q)
    return complex(total * q ** (-beta))
