from src.bost_connes.crossed_product import BCElem, NormalFormElem
from src.equivariant.orbit_sum import OrbitSum, chi_hat_z


class BoldK0Elem(NormalFormElem):
    """
    Noncommutative extension of the orbit model by mu~_n and mu*_n

    Same normal form and rewrite engine as A_Z, with OrbitSum coefficients
    whose sigma_n / rho~_n are the equivariant lifts.
    """

    coefficient_type = OrbitSum


def bold_chi(u):
    """
    Extend chi^Z to the noncommutative ring

    Args:
        u: BoldK0Elem

    Returns:
        BCElem: chi applied to every coefficient, identity on mu~ and mu*
    """
    return u.map_coefficients(chi_hat_z, BCElem)
