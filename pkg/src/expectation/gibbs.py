from src.equivariant.orbit_sum import chi_hat_z
from src.expectation.zeta import check_beta, polylog_at_root, riemann_zeta
from src.group_ring.group_ring import twist as galois_twist
from src.utils.config import COMPLEX_OUTPUT_DIGITS


def expectation_groupring(x, beta, twist=1):
    """
    Gibbs expectation <x>_beta in the standard representation

    e(r) acts on eps_n by zeta_r^n, so <e(r)>_beta = Li_beta(zeta_r) / zeta(beta).

    Args:
        x: GroupRingElem (integer or rational coefficients)
        beta: Inverse temperature > 1
        twist: k coprime to the level of x, selecting the embedding r -> exp(2 pi i k r)

    Returns:
        complex
    """
    beta = check_beta(beta)
    if twist != 1:
        x = galois_twist(twist, x)
    total = sum(complex(float(c)) * polylog_at_root(beta, r) for r, c in x.terms)
    return complex(total) / riemann_zeta(beta)


def expectation_class(x, beta, twist=1):
    """<chi(X, alpha)>_beta for an orbit sum"""
    return expectation_groupring(chi_hat_z(x), beta, twist)


def expectation_bc(u, beta, twist=1):
    """
    Expectation of a Bost-Connes normal form

    mu~_a x mu*_b shifts eps_n unless a = b = 1, so only the (1, 1) term has a
    trace.
    """
    return expectation_groupring(u.coefficient(1, 1), beta, twist)


def format_complex(value, digits=COMPLEX_OUTPUT_DIGITS):
    """Render as "a+bi" with a fixed number of decimals ("+0i" for a negligible imaginary part)"""
    value = complex(value)
    real = f"{value.real:.{digits}f}"
    if real.startswith("-") and float(real) == 0.0:
        real = real[1:]
    if abs(value.imag) < 10.0 ** (-digits):
        return f"{real}+0i"
    return f"{real}{value.imag:+.{digits}f}i"
