from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from src.cyclotomic.arith import divisors, euler_phi, lcm
from src.cyclotomic.qz import QZ, division_points, preimages
from src.utils.errors import CoefficientModeError, InvalidInputError


def _as_coefficient(value, rational):
    if isinstance(value, bool):
        raise CoefficientModeError("booleans are not coefficients")
    if rational:
        return Fraction(value)
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise CoefficientModeError(f"coefficient {value} is not an integer")
        return int(value)
    if isinstance(value, int):
        return value
    raise CoefficientModeError(f"coefficient {value!r} is not an integer")


@dataclass(frozen=True, eq=False)
class GroupRingElem:
    """
    Finite sparse element sum c_r e(r) of Z[Q/Z] or Q[Q/Z]

    Terms are kept sorted by (denominator, numerator) with no zero
    coefficient. The rational flag selects Q[Q/Z]; it is a representation
    choice, so equality compares the terms only.
    """

    terms: tuple = ()
    rational: bool = False

    @classmethod
    def from_dict(cls, mapping, rational=False):
        """
        Build an element from a QZ -> coefficient mapping

        Args:
            mapping: dict of QZ (or "num/den" strings) to coefficients
            rational: Use Q[Q/Z] coefficients

        Returns:
            GroupRingElem: Canonical element with zero terms dropped
        """
        merged = {}
        for r, c in mapping.items():
            if not isinstance(r, QZ):
                r = QZ.parse(r)
            merged[r] = merged.get(r, 0) + _as_coefficient(c, rational)
        terms = tuple(sorted(((r, c) for r, c in merged.items() if c), key=lambda t: t[0].sort_key()))
        return cls(terms, rational)

    @classmethod
    def basis(cls, r, coefficient=1, rational=False):
        """The element coefficient * e(r)"""
        if not isinstance(r, QZ):
            r = QZ.parse(r)
        return cls.from_dict({r: coefficient}, rational)

    @classmethod
    def zero(cls, rational=False):
        return cls((), rational)

    @classmethod
    def one(cls, rational=False):
        return cls.basis(QZ.zero(), 1, rational)

    @property
    def coeffs(self):
        return dict(self.terms)

    def coefficient(self, r):
        return self.coeffs.get(r, 0)

    @property
    def support(self):
        return [r for r, _ in self.terms]

    @property
    def level(self):
        """lcm of the denominators in the support (1 for zero)"""
        return lcm(*(r.den for r, _ in self.terms))

    def to_rational(self):
        return GroupRingElem(tuple((r, Fraction(c)) for r, c in self.terms), True)

    def _mode_with(self, other):
        return self.rational or other.rational

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other):
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        merged = self.coeffs
        for r, c in other.terms:
            merged[r] = merged.get(r, 0) + c
        return GroupRingElem.from_dict(merged, self._mode_with(other))

    def __neg__(self):
        return GroupRingElem(tuple((r, -c) for r, c in self.terms), self.rational)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        """Scalar multiple k * x (k an int, or a Fraction in rational mode)"""
        rational = self.rational or (isinstance(k, Fraction) and k.denominator != 1)
        return GroupRingElem.from_dict({r: k * c for r, c in self.terms}, rational)

    def __mul__(self, other):
        if isinstance(other, GroupRingElem):
            return gr_mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def sigma(self, n):
        return sigma_n(n, self)

    def rho_tilde(self, n):
        return rho_tilde_n(n, self)

    def rho(self, n):
        return rho_n(n, self)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*e({r})" for r, c in self.terms)


def _check_n(n):
    if n < 1:
        raise InvalidInputError("n must be a positive integer")


def gr_mul(x, y):
    """Convolution product e(r) e(r') = e(r + r')"""
    out = {}
    for r, c in x.terms:
        for s, d in y.terms:
            key = r + s
            out[key] = out.get(key, 0) + c * d
    return GroupRingElem.from_dict(out, x.rational or y.rational)


def sigma_n(n, x):
    """Ring endomorphism e(r) -> e(nr)"""
    _check_n(n)
    out = {}
    for r, c in x.terms:
        key = r.scale(n)
        out[key] = out.get(key, 0) + c
    return GroupRingElem.from_dict(out, x.rational)


def rho_tilde_n(n, x):
    """Additive map e(r) -> sum of e(r') over n r' = r"""
    _check_n(n)
    out = {}
    for r, c in x.terms:
        for s in preimages(r, n):
            out[s] = out.get(s, 0) + c
    return GroupRingElem.from_dict(out, x.rational)


def rho_n(n, x):
    """rho_n = n^-1 rho_tilde_n, defined on Q[Q/Z] only"""
    if not x.rational:
        raise CoefficientModeError("rho_n needs rational coefficients")
    return rho_tilde_n(n, x).scale(Fraction(1, n))


def pi_n(n):
    """The idempotent n^-1 sum_{ns=0} e(s) of Q[Q/Z]"""
    _check_n(n)
    return GroupRingElem.from_dict({s: Fraction(1, n) for s in division_points(n)}, rational=True)


def cyclic_class(d, rational=False):
    """sum_{ds=0} e(s) = rho_tilde_d(e(0)), a generator of the fixed subring"""
    _check_n(d)
    return GroupRingElem.from_dict({s: 1 for s in division_points(d)}, rational)


def twist(k, x):
    """Galois twist sigma_k for k coprime to the level of x"""
    if gcd(k, x.level) != 1:
        raise InvalidInputError(f"twist {k} is not coprime to level {x.level}")
    return sigma_n(k, x)


@dataclass(frozen=True)
class SubringMembership:
    """Outcome of the fixed-subring test with its certificate"""

    member: bool
    coefficients: dict
    reason: str = ""

    def __bool__(self):
        return self.member


def in_fixed_subring(x):
    """
    Decide whether x lies in the Z-span of {sum_{ds=0} e(s) : d >= 1}

    Args:
        x: Integer-mode GroupRingElem

    Returns:
        SubringMembership: member flag and the coefficients {d: a_d} with
        x = sum_d a_d * cyclic_class(d)
    """
    if x.rational:
        raise CoefficientModeError("membership is decided in Z[Q/Z] only")
    by_order = {}
    for r, c in x.terms:
        seen = by_order.setdefault(r.den, c)
        if seen != c:
            return SubringMembership(False, {}, f"coefficient varies on elements of order {r.den}")
    level = x.level
    for order, c in by_order.items():
        count = sum(1 for r, _ in x.terms if r.den == order)
        if count != euler_phi(order):
            return SubringMembership(False, {}, f"support misses elements of order {order}")
    # c(m) = sum_{m | d | N} a_d, solved from the top divisor down
    solved = {}
    for m in reversed(divisors(level)):
        above = sum(solved[d] for d in divisors(level) if d > m and d % m == 0)
        solved[m] = by_order.get(m, 0) - above
    return SubringMembership(True, {d: a for d, a in solved.items() if a})


def from_subring_coefficients(coefficients):
    """Inverse of the membership certificate: sum_d a_d * cyclic_class(d)"""
    total = GroupRingElem.zero()
    for d, a in coefficients.items():
        total = total + cyclic_class(d).scale(a)
    return total
