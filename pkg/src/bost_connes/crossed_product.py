from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from src.group_ring.group_ring import GroupRingElem
from src.utils.errors import InvalidInputError


@dataclass(frozen=True)
class NormalFormElem:
    """
    Normal form sum of mu~_a x mu*_b with gcd(a, b) = 1

    Subclasses fix the coefficient ring. A coefficient type must offer
    +, * (ring and integer scalar), bool (nonzero), sigma(n) and the
    compression map used by _compress. Integer coefficients live inside x.
    """

    terms: tuple = ()

    # Subclass hooks
    coefficient_type = None

    @classmethod
    def _coefficient_one(cls):
        return cls.coefficient_type.one()

    @classmethod
    def _coefficient_zero(cls):
        return cls.coefficient_type.zero()

    @classmethod
    def _collision_weight(cls, g):
        """Scalar produced by mu*_g mu~_g"""
        return g

    @classmethod
    def _compress(cls, h, z):
        """mu~_h z mu*_h"""
        return z.rho_tilde(h)

    # Construction

    @classmethod
    def from_terms(cls, triples):
        """
        Normalize and merge arbitrary (a, x, b) triples

        Args:
            triples: Iterable of (a, x, b) with positive a, b

        Returns:
            NormalFormElem: Coprime keys, merged, zero terms dropped
        """
        merged = {}
        for a, x, b in triples:
            if a < 1 or b < 1:
                raise InvalidInputError("mu indices must be positive")
            h = gcd(a, b)
            if h > 1:
                a, b, x = a // h, b // h, cls._compress(h, x)
            key = (a, b)
            merged[key] = merged[key] + x if key in merged else x
        terms = tuple((a, x, b) for (a, b), x in sorted(merged.items()) if x)
        return cls(terms)

    @classmethod
    def inject(cls, x):
        return cls.from_terms([(1, x, 1)])

    @classmethod
    def unit(cls):
        return cls.inject(cls._coefficient_one())

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def mu_tilde(cls, n):
        return cls.from_terms([(n, cls._coefficient_one(), 1)])

    @classmethod
    def mu_star(cls, n):
        return cls.from_terms([(1, cls._coefficient_one(), n)])

    # Ring structure

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self).from_terms(self.terms + other.terms)

    def __neg__(self):
        return type(self)(tuple((a, -x, b) for a, x, b in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return type(self).from_terms((a, x * k, b) for a, x, b in self.terms)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if type(other) is not type(self):
            return NotImplemented
        return type(self).from_terms(
            self._multiply_terms(s, t) for s in self.terms for t in other.terms
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    @classmethod
    def _multiply_terms(cls, left, right):
        a, x, b = left
        c, y, d = right
        # mu*_b mu~_c = g mu~_c' mu*_b' once the common factor g is cancelled
        g = gcd(b, c)
        b1, c1 = b // g, c // g
        z = x.sigma(c1) * y.sigma(b1)
        weight = cls._collision_weight(g)
        if weight != 1:
            z = z * weight
        return (a * c1, z, b1 * d)

    def coefficient(self, a, b):
        for ta, x, tb in self.terms:
            if (ta, tb) == (a, b):
                return x
        return self._coefficient_zero()

    def map_coefficients(self, function, target):
        """Apply function to every coefficient, keeping (a, b), landing in target"""
        return target.from_terms((a, function(x), b) for a, x, b in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"mu~_{a} [{x}] mu*_{b}" for a, x, b in self.terms)


class BCElem(NormalFormElem):
    """Element of the integral Bost-Connes algebra A_Z"""

    coefficient_type = GroupRingElem


class RationalBCElem(NormalFormElem):
    """Element of Q[Q/Z] x| N written as sum mu_a x mu*_b"""

    coefficient_type = GroupRingElem

    @classmethod
    def _coefficient_one(cls):
        return GroupRingElem.one(rational=True)

    @classmethod
    def _coefficient_zero(cls):
        return GroupRingElem.zero(rational=True)

    @classmethod
    def _collision_weight(cls, g):
        return 1

    @classmethod
    def _compress(cls, h, z):
        return z.to_rational().rho(h)

    @classmethod
    def mu(cls, n):
        """mu_n = n^-1 mu~_n"""
        return cls.mu_tilde(n)

    @classmethod
    def from_terms(cls, triples):
        return super().from_terms((a, x.to_rational(), b) for a, x, b in triples)


def bc_inject(x):
    return BCElem.inject(x)


def bc_mu_tilde(n):
    return BCElem.mu_tilde(n)


def bc_mu_star(n):
    return BCElem.mu_star(n)


def bc_mul(u, v):
    return u * v


def bc_rationalize(u):
    """
    Rewrite mu~_a = a mu_a term by term

    Args:
        u: BCElem

    Returns:
        RationalBCElem: sum mu_a (a x) mu*_b
    """
    return RationalBCElem.from_terms((a, x.to_rational().scale(a), b) for a, x, b in u.terms)
