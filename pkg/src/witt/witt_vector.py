from dataclasses import dataclass

from src.utils.errors import InvariantViolation, NotAWittVectorError, TruncationError
from src.witt.truncation import TruncationSet


@dataclass(frozen=True)
class WittVector:
    """
    Truncated big Witt vector over Z

    coords[i] is the coordinate x_d for d = trunc.divisors[i]; the ghost
    components are g_m = sum_{d | m} d x_d^(m/d).
    """

    trunc: TruncationSet
    coords: tuple

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != len(self.trunc):
            raise TruncationError("one coordinate per element of the truncation set")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_dict(cls, trunc, mapping):
        return cls(trunc, tuple(int(mapping.get(d, 0)) for d in trunc))

    @classmethod
    def zero(cls, trunc):
        return cls(trunc, (0,) * len(trunc))

    @classmethod
    def one(cls, trunc):
        return teichmuller(1, trunc)

    def coordinate(self, d):
        return dict(zip(self.trunc, self.coords)).get(d, 0)

    def as_dict(self):
        return dict(zip(self.trunc, self.coords))

    def ghost(self):
        return witt_ghost(self)

    def __add__(self, other):
        return witt_add(self, other)

    def __sub__(self, other):
        return witt_sub(self, other)

    def __neg__(self):
        return witt_neg(self)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return _from_ghost_checked(self.trunc, {m: other * g for m, g in self.ghost().items()})
        return witt_mul(self, other)

    def __rmul__(self, other):
        return self * other

    def __str__(self):
        return "(" + ", ".join(f"x{d}={x}" for d, x in zip(self.trunc, self.coords)) + ")"


def teichmuller(a, trunc):
    """The Teichmueller vector [a] = (a, 0, 0, ...)"""
    return WittVector.from_dict(trunc, {1: a})


def witt_ghost(w):
    """Ghost components {m: sum_{d | m} d x_d^(m/d)}"""
    values = w.as_dict()
    return {
        m: sum(d * values[d] ** (m // d) for d in w.trunc if m % d == 0)
        for m in w.trunc
    }


def witt_from_ghost(trunc, ghosts):
    """
    Invert the ghost map over Z by a triangular solve

    Args:
        trunc: TruncationSet
        ghosts: mapping m -> integer ghost component for every m in trunc

    Returns:
        WittVector: the unique integral preimage

    Raises:
        NotAWittVectorError: if some coordinate is not an integer
    """
    missing = [m for m in trunc if m not in ghosts]
    if missing:
        raise TruncationError(f"ghost components missing for {missing}")
    coords = {}
    for m in trunc:
        lower = sum(d * coords[d] ** (m // d) for d in trunc if d < m and m % d == 0)
        residue = ghosts[m] - lower
        if residue % m:
            raise NotAWittVectorError(m, f"{residue}/{m}")
        coords[m] = residue // m
    return WittVector.from_dict(trunc, coords)


def _from_ghost_checked(trunc, ghosts):
    # Ring operations on integral Witt vectors stay integral
    try:
        return witt_from_ghost(trunc, ghosts)
    except NotAWittVectorError as exc:
        raise InvariantViolation(f"Witt arithmetic left the integers: {exc}") from exc


def _same_truncation(a, b):
    if a.trunc != b.trunc:
        raise TruncationError(f"truncations differ: {list(a.trunc)} vs {list(b.trunc)}")


def witt_add(a, b):
    _same_truncation(a, b)
    ga, gb = a.ghost(), b.ghost()
    return _from_ghost_checked(a.trunc, {m: ga[m] + gb[m] for m in a.trunc})


def witt_neg(a):
    return _from_ghost_checked(a.trunc, {m: -g for m, g in a.ghost().items()})


def witt_sub(a, b):
    _same_truncation(a, b)
    ga, gb = a.ghost(), b.ghost()
    return _from_ghost_checked(a.trunc, {m: ga[m] - gb[m] for m in a.trunc})


def witt_mul(a, b):
    _same_truncation(a, b)
    ga, gb = a.ghost(), b.ghost()
    return _from_ghost_checked(a.trunc, {m: ga[m] * gb[m] for m in a.trunc})


def witt_restrict(w, trunc):
    """Project to a smaller truncation set (coordinates are compatible)"""
    if not trunc.issubset(w.trunc):
        raise TruncationError(f"{list(trunc)} is not contained in {list(w.trunc)}")
    return WittVector.from_dict(trunc, w.as_dict())


def witt_frobenius(n, w):
    """F_n with ghost_m(F_n w) = ghost_{nm}(w), on the truncation {m : nm in T}"""
    trunc = w.trunc.quotient(n)
    ghosts = w.ghost()
    return _from_ghost_checked(trunc, {m: ghosts[n * m] for m in trunc})


def witt_verschiebung(n, w, trunc=None):
    """
    V_n, the coordinate shift x_d -> position n d

    Args:
        n: Positive integer
        w: WittVector on T
        trunc: Optional output truncation inside closure(nT)

    Returns:
        WittVector: ghost_m = n ghost_{m/n}(w) when n | m, else 0
    """
    full = w.trunc.scaled(n)
    values = w.as_dict()
    result = WittVector.from_dict(full, {n * d: x for d, x in values.items()})
    if trunc is None:
        return result
    return witt_restrict(result, trunc)


def verschiebung_from_ghost(n, w):
    """The ghost-side definition of V_n, kept as a cross-check of the shift"""
    full = w.trunc.scaled(n)
    ghosts = w.ghost()
    return _from_ghost_checked(full, {m: n * ghosts[m // n] if m % n == 0 else 0 for m in full})
