from dataclasses import dataclass

from src.cyclotomic.arith import divisor_closure, divisors
from src.utils.errors import TruncationError


@dataclass(frozen=True)
class TruncationSet:
    """Finite divisor-closed set of positive integers"""

    divisors: tuple

    def __post_init__(self):
        values = tuple(sorted(set(int(d) for d in self.divisors)))
        if not values or values[0] < 1:
            raise TruncationError("a truncation set holds positive integers and 1")
        if set(values) != divisor_closure(values):
            raise TruncationError(f"{list(values)} is not closed under divisors")
        object.__setattr__(self, "divisors", values)

    @classmethod
    def of_level(cls, n):
        """All divisors of n"""
        return cls(divisors(n))

    @classmethod
    def closure(cls, values):
        return cls(tuple(divisor_closure(values)))

    def __contains__(self, m):
        return m in self.divisors

    def __iter__(self):
        return iter(self.divisors)

    def __len__(self):
        return len(self.divisors)

    def quotient(self, n):
        """{m : n m in T}, the truncation of F_n outputs"""
        values = tuple(m for m in self.divisors if n * m in self.divisors)
        if not values:
            raise TruncationError(f"truncation {list(self.divisors)} is too small for F_{n}")
        return TruncationSet(values)

    def scaled(self, n):
        """Divisor closure of {n m}, the truncation of V_n outputs"""
        return TruncationSet.closure(n * m for m in self.divisors)

    def issubset(self, other):
        return set(self.divisors) <= set(other.divisors)
