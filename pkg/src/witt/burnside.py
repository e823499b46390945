import numpy as np

from src.cyclotomic.arith import divisors, mobius
from src.equivariant.orbit_sum import OrbitSum
from src.utils.errors import InvalidInputError, NotAWittVectorError
from src.witt.truncation import TruncationSet
from src.witt.witt_vector import witt_from_ghost


def fixed_points(x, m):
    """
    Mark of the subgroup mZ^ on an orbit sum

    Args:
        x: OrbitSum
        m: Positive integer

    Returns:
        int: sum over d | m of d * multiplicity([Z/d])
    """
    if m < 1:
        raise InvalidInputError("m must be positive")
    return sum(d * k for d, k in x.orbits if m % d == 0)


def burnside_to_witt(x, trunc):
    """The Witt vector whose ghost components are the marks of x"""
    return witt_from_ghost(trunc, {m: fixed_points(x, m) for m in trunc})


def witt_to_burnside(w):
    """
    Recover the orbit sum from a Witt vector by Moebius inversion of its ghosts

    Args:
        w: WittVector

    Returns:
        OrbitSum: supported on the truncation set of w
    """
    ghosts = w.ghost()
    orbits = {}
    for d in w.trunc:
        total = sum(mobius(d // e) * ghosts[e] for e in divisors(d))
        if total % d:
            raise NotAWittVectorError(d, f"{total}/{d}")
        orbits[d] = total // d
    return OrbitSum.from_dict(orbits)


def table_of_marks(n):
    """
    Marks of the cyclic group Z/n

    Returns:
        tuple: (divisors of n, integer matrix whose (i, j) entry counts the
        points of [Z/d_i] fixed by d_j Z^)
    """
    labels = divisors(n)
    marks = np.array(
        [[fixed_points(OrbitSum.orbit(d), m) for m in labels] for d in labels],
        dtype=np.int64,
    )
    return labels, marks


def burnside_truncation(x, level=None):
    """Divisors of the given level, or of the level of x"""
    return TruncationSet.of_level(level or x.level)
