from dataclasses import dataclass

from src.equivariant.orbit_sum import OrbitSum
from src.utils.errors import InvalidInputError


@dataclass(frozen=True)
class FiniteZSet:
    """
    A finite set {0, ..., size-1} with the action of the generator of Z^

    The action is recorded by the permutation image[i] of each point; it
    factors through Z/N for N the order of the permutation.
    """

    image: tuple

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise InvalidInputError("image is not a permutation")

    @classmethod
    def from_orbit_sum(cls, x):
        """Realize a genuine orbit sum by disjoint cyclic shifts"""
        if not x.is_genuine():
            raise InvalidInputError("virtual classes have no finite set")
        image = []
        for d, m in x.orbits:
            for _ in range(m):
                start = len(image)
                image.extend(start + (k + 1) % d for k in range(d))
        return cls(tuple(image))

    @property
    def size(self):
        return len(self.image)

    def orbit_sum(self):
        """Cycle type of the permutation as an orbit sum"""
        seen = [False] * self.size
        lengths = {}
        for start in range(self.size):
            if seen[start]:
                continue
            length, point = 0, start
            while not seen[point]:
                seen[point] = True
                point = self.image[point]
                length += 1
            lengths[length] = lengths.get(length, 0) + 1
        return OrbitSum.from_dict(lengths)

    def disjoint_union(self, other):
        shift = self.size
        return FiniteZSet(self.image + tuple(shift + p for p in other.image))

    def product(self, other):
        """Diagonal action on the Cartesian product"""
        width = other.size
        return FiniteZSet(tuple(
            self.image[i] * width + other.image[j]
            for i in range(self.size) for j in range(width)
        ))

    def precompose_power(self, n):
        """alpha o sigma_n: the generator now acts by its n-th power"""
        image = list(range(self.size))
        for _ in range(n):
            image = [self.image[p] for p in image]
        return FiniteZSet(tuple(image))

    def verschiebung(self, n):
        """
        The cyclic extension on X x Z_n

        (x, a_i) -> (x, a_{i+1}) for i < n, and (x, a_n) -> (alpha(x), a_1);
        point (x, i) is stored at index x * n + i.
        """
        image = []
        for x in range(self.size):
            for i in range(n):
                if i < n - 1:
                    image.append(x * n + i + 1)
                else:
                    image.append(self.image[x] * n)
        return FiniteZSet(tuple(image))

    def fixed_points(self, m):
        """Number of points fixed by the subgroup mZ^"""
        power = self.precompose_power(m).image
        return sum(1 for p in range(self.size) if power[p] == p)
