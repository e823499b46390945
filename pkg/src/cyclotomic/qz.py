from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from src.utils.errors import InvalidDenominatorError, InvalidInputError


@dataclass(frozen=True)
class QZ:
    """
    An element of Q/Z stored as its reduced representative num/den in [0, 1)

    Use QZ.make for arbitrary numerators and denominators; the constructor
    itself only accepts already reduced representatives.
    """

    num: int
    den: int

    def __post_init__(self):
        if self.den < 1 or not 0 <= self.num < self.den or gcd(self.num, self.den) != 1:
            raise InvalidInputError(f"{self.num}/{self.den} is not a reduced representative")

    @classmethod
    def make(cls, num, den=1):
        """
        Reduce num/den modulo 1

        Args:
            num: Any integer numerator
            den: Nonzero integer denominator

        Returns:
            QZ: The canonical representative
        """
        if den == 0:
            raise InvalidDenominatorError("denominator must be nonzero")
        if den < 0:
            num, den = -num, -den
        num %= den
        g = gcd(num, den)
        return cls(num // g, den // g)

    @classmethod
    def zero(cls):
        return cls(0, 1)

    @classmethod
    def parse(cls, text):
        """Parse "num/den" (or a bare integer) into a QZ"""
        head, sep, tail = str(text).strip().partition("/")
        try:
            num = int(head)
            den = int(tail) if sep else 1
        except ValueError:
            raise InvalidInputError(f"cannot parse {text!r} as num/den") from None
        return cls.make(num, den)

    @property
    def order(self):
        return self.den

    def __add__(self, other):
        return QZ.make(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return QZ.make(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n):
        """Return n * r in Q/Z"""
        return QZ.make(n * self.num, self.den)

    def as_fraction(self):
        return Fraction(self.num, self.den)

    def root_of_unity(self):
        """exp(2 pi i r) under the tautological embedding"""
        return complex(np.exp(2j * np.pi * self.num / self.den))

    def sort_key(self):
        return (self.den, self.num)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return f"{self.num}/{self.den}"


def qz_make(num, den):
    return QZ.make(num, den)


def division_points(n):
    """
    The n-torsion {k/n mod 1 : 0 <= k < n}

    Args:
        n: Positive integer

    Returns:
        list: Exactly n reduced QZ values sorted by value
    """
    if n < 1:
        raise InvalidInputError("n must be positive")
    return [QZ.make(k, n) for k in range(n)]


def preimages(r, n):
    """
    Solutions r' of n * r' = r in Q/Z

    Args:
        r: QZ target
        n: Positive integer

    Returns:
        list: Exactly n reduced QZ values (num + k*den) / (n*den) sorted by value
    """
    if n < 1:
        raise InvalidInputError("n must be positive")
    return [QZ.make(r.num + k * r.den, n * r.den) for k in range(n)]
