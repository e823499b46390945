from dataclasses import dataclass, field
from functools import lru_cache
from itertools import zip_longest

from src.cyclotomic.arith import divisors, euler_phi
from src.utils.errors import InvalidInputError


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial in t, coefficients stored constant term first"""

    coeffs: tuple = ()

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def monomial(cls, degree, coefficient=1):
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def from_high_to_low(cls, coeffs):
        return cls(tuple(reversed(list(coeffs))))

    @property
    def degree(self):
        """Degree (-1 for the zero polynomial)"""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.leading == 1

    def __add__(self, other):
        return IntPoly(tuple(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    def __pow__(self, exponent):
        result = IntPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def divmod_monic(self, divisor):
        """
        Exact long division by a monic divisor

        Args:
            divisor: Monic IntPoly

        Returns:
            tuple: (quotient, remainder) with integer coefficients
        """
        if not divisor.is_monic():
            raise InvalidInputError("divisor must be monic")
        remainder = list(self.coeffs)
        dd = divisor.degree
        if len(remainder) - 1 < dd:
            return IntPoly(), self
        quotient = [0] * (len(remainder) - dd)
        for shift in range(len(remainder) - 1 - dd, -1, -1):
            c = remainder[shift + dd]
            if c:
                quotient[shift] = c
                for k, d in enumerate(divisor.coeffs):
                    remainder[shift + k] -= c * d
        return IntPoly(tuple(quotient)), IntPoly(tuple(remainder))

    def __call__(self, value):
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def to_list(self):
        return list(self.coeffs)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("t" if k == 1 else f"t^{k}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


@lru_cache(maxsize=None)
def cyclotomic_poly(d):
    """
    The d-th cyclotomic polynomial, by exact division of t^d - 1

    Args:
        d: Positive integer

    Returns:
        IntPoly: Monic, degree phi(d)
    """
    if d < 1:
        raise InvalidInputError("cyclotomic index must be positive")
    result = IntPoly.monomial(d) - IntPoly.one()
    for e in divisors(d):
        if e < d:
            result, remainder = result.divmod_monic(cyclotomic_poly(e))
            assert remainder.is_zero()
    return result


@dataclass(frozen=True)
class CycloFactorization:
    """t^zero_mult * prod Phi_d^cyclo[d] * remainder"""

    zero_mult: int
    cyclo: dict = field(default_factory=dict)
    remainder: IntPoly = field(default_factory=IntPoly.one)

    @property
    def fully_factored(self):
        return self.remainder.coeffs in ((1,), (-1,))

    def is_quasi_idempotent(self):
        """Roots are zero or roots of unity"""
        return self.fully_factored

    def is_quasi_unipotent(self):
        """Roots are roots of unity"""
        return self.fully_factored and self.zero_mult == 0

    def expand(self):
        product = IntPoly.monomial(self.zero_mult) * self.remainder
        for d, mult in self.cyclo.items():
            product = product * cyclotomic_poly(d) ** mult
        return product


@lru_cache(maxsize=None)
def _candidate_indices(degree):
    # phi(d) >= sqrt(d/2), so phi(d) <= degree forces d <= 2 * degree^2
    if degree < 1:
        return ()
    return tuple(d for d in range(1, 2 * degree * degree + 1) if euler_phi(d) <= degree)


def cyclotomic_factorize(p):
    """
    Split off powers of t and every cyclotomic factor by trial division

    Args:
        p: Nonzero IntPoly

    Returns:
        CycloFactorization: The exact factorization, remainder free of
        cyclotomic and t factors
    """
    if p.is_zero():
        raise InvalidInputError("cannot factor the zero polynomial")
    coeffs = p.coeffs
    zero_mult = next(k for k, c in enumerate(coeffs) if c)
    rest = IntPoly(coeffs[zero_mult:])
    cyclo = {}
    for d in _candidate_indices(rest.degree):
        if rest.degree == 0:
            break
        phi = cyclotomic_poly(d)
        while phi.degree <= rest.degree:
            quotient, remainder = rest.divmod_monic(phi)
            if not remainder.is_zero():
                break
            rest = quotient
            cyclo[d] = cyclo.get(d, 0) + 1
    return CycloFactorization(zero_mult=zero_mult, cyclo=cyclo, remainder=rest)
