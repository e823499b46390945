from dataclasses import dataclass
from math import gcd

from src.cyclotomic.arith import lcm
from src.group_ring.group_ring import GroupRingElem, cyclic_class
from src.utils.errors import InvalidInputError


@dataclass(frozen=True)
class OrbitSum:
    """
    Integer combination of cyclic orbit classes [Z/d]

    Stored as sorted (d, multiplicity) pairs with no zero multiplicity.
    Genuine finite Z^-sets have nonnegative multiplicities; virtual classes
    of the Grothendieck ring may have negative ones.
    """

    orbits: tuple = ()

    @classmethod
    def from_dict(cls, mapping):
        merged = {}
        for d, m in mapping.items():
            d, m = int(d), int(m)
            if d < 1:
                raise InvalidInputError(f"orbit length {d} must be positive")
            merged[d] = merged.get(d, 0) + m
        return cls(tuple(sorted((d, m) for d, m in merged.items() if m)))

    @classmethod
    def orbit(cls, d, multiplicity=1):
        """multiplicity * [Z/d]"""
        return cls.from_dict({d: multiplicity})

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls.orbit(1)

    @property
    def multiplicities(self):
        return dict(self.orbits)

    def multiplicity(self, d):
        return self.multiplicities.get(d, 0)

    @property
    def level(self):
        """The action factors through Z/level"""
        return lcm(*(d for d, _ in self.orbits))

    @property
    def cardinality(self):
        return sum(d * m for d, m in self.orbits)

    def is_genuine(self):
        return all(m > 0 for _, m in self.orbits)

    def __bool__(self):
        return bool(self.orbits)

    def __add__(self, other):
        if not isinstance(other, OrbitSum):
            return NotImplemented
        merged = self.multiplicities
        for d, m in other.orbits:
            merged[d] = merged.get(d, 0) + m
        return OrbitSum.from_dict(merged)

    def __neg__(self):
        return OrbitSum(tuple((d, -m) for d, m in self.orbits))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, OrbitSum):
            return orbit_product(self, other)
        if isinstance(other, int) and not isinstance(other, bool):
            return OrbitSum.from_dict({d: other * m for d, m in self.orbits})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def sigma(self, n):
        return eq_sigma_n(n, self)

    def rho_tilde(self, n):
        return eq_rho_tilde_n(n, self)

    def __str__(self):
        if not self.orbits:
            return "0"
        return " + ".join(f"{m}[Z/{d}]" for d, m in self.orbits)


def orbit_product(x, y):
    """Diagonal action product: [Z/d][Z/e] = gcd(d, e) [Z/lcm(d, e)]"""
    out = {}
    for d, m in x.orbits:
        for e, k in y.orbits:
            g = gcd(d, e)
            key = d * e // g
            out[key] = out.get(key, 0) + g * m * k
    return OrbitSum.from_dict(out)


def eq_sigma_n(n, x):
    """
    Precompose the action with sigma_n

    Translation by n on Z/d splits into gcd(n, d) orbits of length d / gcd(n, d).
    """
    if n < 1:
        raise InvalidInputError("n must be positive")
    out = {}
    for d, m in x.orbits:
        g = gcd(n, d)
        out[d // g] = out.get(d // g, 0) + g * m
    return OrbitSum.from_dict(out)


def eq_rho_tilde_n(n, x):
    """Verschiebung [Z/d] -> [Z/nd] (one orbit of X x Z_n per orbit of X)"""
    if n < 1:
        raise InvalidInputError("n must be positive")
    return OrbitSum.from_dict({n * d: m for d, m in x.orbits})


def cyclic_pair_class(n):
    """[Z_n, gamma_n]"""
    return OrbitSum.orbit(n)


def chi_hat_z(x):
    """
    Equivariant Euler characteristic into Z[Q/Z]

    Args:
        x: OrbitSum

    Returns:
        GroupRingElem: sum of m_d * sum_{ds=0} e(s)
    """
    total = GroupRingElem.zero()
    for d, m in x.orbits:
        total = total + cyclic_class(d).scale(m)
    return total


def euler_characteristic_to_burnside(x):
    """Zero-dimensional sets are their own 0-skeleta, so chi^G is the identity here"""
    return x
