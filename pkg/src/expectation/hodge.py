from dataclasses import dataclass

from src.expectation.gibbs import expectation_groupring, format_complex
from src.expectation.zeta import check_beta
from src.group_ring.group_ring import GroupRingElem
from src.utils.errors import InvalidInputError


@dataclass(frozen=True)
class HodgeTable:
    """Equivariant Hodge numbers E^{p,q} in Z[Q/Z], sorted by (p, q)"""

    entries: tuple = ()

    def __post_init__(self):
        merged = {}
        for (p, q), x in self.entries:
            if p < 0 or q < 0:
                raise InvalidInputError(f"Hodge index ({p}, {q}) must be nonnegative")
            merged[(p, q)] = merged[(p, q)] + x if (p, q) in merged else x
        object.__setattr__(self, "entries", tuple(sorted((k, x) for k, x in merged.items() if x)))

    @classmethod
    def from_dict(cls, mapping):
        return cls(tuple(mapping.items()))

    def total_class(self):
        """Sum of all E^{p,q}: the equivariant Euler characteristic"""
        total = GroupRingElem.zero()
        for _, x in self.entries:
            total = total + x
        return total


@dataclass(frozen=True)
class HodgePolynomial:
    """Polynomial sum c_{p,q} u^p v^q with complex coefficients"""

    coefficients: tuple = ()

    @property
    def as_dict(self):
        return dict(self.coefficients)

    def coefficient(self, p, q):
        return self.as_dict.get((p, q), 0j)

    def evaluate(self, u, v):
        return sum(c * u ** p * v ** q for (p, q), c in self.coefficients)

    def weight_polynomial(self):
        """Specialize u = v = w: {p + q: coefficient of w^(p+q)}"""
        weights = {}
        for (p, q), c in self.coefficients:
            weights[p + q] = weights.get(p + q, 0j) + c
        return dict(sorted(weights.items()))

    def at_one(self):
        """w = 1, the expectation of the Euler characteristic"""
        return self.evaluate(1, 1)

    def __str__(self):
        if not self.coefficients:
            return "0"
        return " + ".join(f"({format_complex(c)}) u^{p} v^{q}" for (p, q), c in self.coefficients)


def hodge_expectation(table, beta, twist=1):
    """
    Expectation of the equivariant Hodge-Deligne polynomial

    Args:
        table: HodgeTable
        beta: Inverse temperature > 1
        twist: Galois twist of the embedding

    Returns:
        HodgePolynomial: coefficient of u^p v^q is <E^{p,q}>_beta
    """
    check_beta(beta)
    return HodgePolynomial(tuple(
        (key, expectation_groupring(x, beta, twist)) for key, x in table.entries
    ))
