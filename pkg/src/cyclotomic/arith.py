from functools import lru_cache, reduce
from math import gcd

import sympy


def lcm(*values):
    """Least common multiple of positive integers (1 for no arguments)"""
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)


@lru_cache(maxsize=None)
def divisors(n):
    """Sorted tuple of the positive divisors of n"""
    return tuple(int(d) for d in sympy.divisors(n))


@lru_cache(maxsize=None)
def euler_phi(n):
    return int(sympy.totient(n))


@lru_cache(maxsize=None)
def mobius(n):
    """Moebius function via the prime factorization"""
    exponents = sympy.factorint(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def divisor_closure(values):
    """Smallest divisor-closed set containing the given positive integers"""
    closed = set()
    for v in values:
        closed.update(divisors(v))
    return closed
