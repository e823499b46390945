from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import sympy

from src.cyclotomic.arith import divisors
from src.equivariant.orbit_sum import OrbitSum, eq_rho_tilde_n, eq_sigma_n
from src.scissors.smith import SmithNormalForm
from src.utils.config import FINITE_SET_SIZE_FACTOR
from src.utils.errors import InvalidInputError, RelationViolationError
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class AssemblerPresentation:
    """
    Objects and finite disjoint covering families

    families holds (target, parts) pairs meaning [target] = sum of [part].
    """

    objects: tuple
    families: tuple = ()

    def __post_init__(self):
        objects = tuple(self.objects)
        if len(set(objects)) != len(objects):
            raise InvalidInputError("object labels must be distinct")
        known = set(objects)
        families = []
        for target, parts in self.families:
            parts = tuple(parts)
            for label in (target, *parts):
                if label not in known:
                    raise InvalidInputError(f"family mentions unknown object {label!r}")
            families.append((target, parts))
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "families", tuple(families))


@dataclass(frozen=True)
class K0Presentation:
    """
    The computed group Z^rank + sum Z/t for t in torsion

    Coordinates list the torsion summands first, then the free ones.
    basis_map sends every object label to its coordinate vector; lifts holds,
    per coordinate, an object combination whose class is that unit vector.
    """

    rank: int
    torsion: tuple
    basis_map: dict
    lifts: tuple = field(default=(), repr=False)

    @property
    def moduli(self):
        """Per-coordinate modulus, 0 for free coordinates"""
        return self.torsion + (0,) * self.rank

    def reduce(self, vector):
        return tuple(v % m if m else v for v, m in zip(vector, self.moduli))


def _substitute(row, expressions):
    out = {}
    for label, c in row.items():
        for target, k in expressions.get(label, {label: 1}).items():
            out[target] = out.get(target, 0) + c * k
    return {label: c for label, c in out.items() if c}


def _eliminate(presentation):
    """
    Solve unit-coefficient relations by substitution

    Returns the expression of every eliminated object in the survivors, the
    survivors in object order, and the residual rows with no unit entry.
    """
    expressions = {}
    users = {}
    residual = []
    for target, parts in presentation.families:
        row = {target: 1}
        for part in parts:
            row[part] = row.get(part, 0) - 1
        row = _substitute({k: v for k, v in row.items() if v}, expressions)
        if not row:
            continue
        pivot = next((label for label, c in row.items() if abs(c) == 1), None)
        if pivot is None:
            residual.append(row)
            continue
        sign = row.pop(pivot)
        value = {label: -sign * c for label, c in row.items()}
        expressions[pivot] = value
        for label in value:
            users.setdefault(label, set()).add(pivot)
        for owner in users.pop(pivot, set()):
            if owner == pivot or owner not in expressions:
                continue
            updated = _substitute(expressions[owner], {pivot: value})
            expressions[owner] = updated
            for label in updated:
                users.setdefault(label, set()).add(owner)
    survivors = [label for label in presentation.objects if label not in expressions]
    residual = [r for r in (_substitute(r, expressions) for r in residual) if r]
    logger.debug(
        "eliminated %d of %d objects, %d residual rows",
        len(expressions), len(presentation.objects), len(residual),
    )
    return expressions, survivors, residual


def k0_from_presentation(p):
    """
    K_0 of a finite presentation: free group on objects modulo covering relations

    Args:
        p: AssemblerPresentation

    Returns:
        K0Presentation
    """
    expressions, survivors, residual = _eliminate(p)
    index = {label: i for i, label in enumerate(survivors)}
    rows = [[r.get(label, 0) for label in survivors] for r in residual]
    snf = SmithNormalForm(rows, len(survivors)).run()
    diagonal, Q = snf.diagonal, snf.Q
    kept = [i for i, d in enumerate(diagonal) if abs(d) != 1]
    kept.sort(key=lambda i: (diagonal[i] == 0, abs(diagonal[i])))
    torsion = tuple(abs(diagonal[i]) for i in kept if diagonal[i])
    rank = sum(1 for i in kept if diagonal[i] == 0)
    moduli = torsion + (0,) * rank

    def coordinates(expression):
        vector = [sum(c * Q[index[label]][i] for label, c in expression.items()) for i in kept]
        return tuple(v % m if m else v for v, m in zip(vector, moduli))

    basis_map = {
        label: coordinates(expressions.get(label, {label: 1})) for label in p.objects
    }
    lifts = ()
    if survivors:
        inverse = sympy.Matrix(Q).inv()
        lifts = tuple(
            {label: int(inverse[i, index[label]]) for label in survivors if inverse[i, index[label]]}
            for i in kept
        )
    return K0Presentation(rank, torsion, basis_map, lifts)


def class_vector(k0, combination):
    """
    Class of an integer combination of objects

    Args:
        k0: K0Presentation
        combination: mapping label -> integer, or an iterable of labels

    Returns:
        tuple: reduced coordinate vector
    """
    if not isinstance(combination, dict):
        counts = {}
        for label in combination:
            counts[label] = counts.get(label, 0) + 1
        combination = counts
    size = len(k0.moduli)
    total = [0] * size
    for label, c in combination.items():
        if label not in k0.basis_map:
            raise InvalidInputError(f"unknown object {label!r}")
        for i, v in enumerate(k0.basis_map[label]):
            total[i] += c * v
    return k0.reduce(total)


def express_in_basis(k0, vector, labels):
    """
    Coordinates of a class with respect to chosen object classes

    Args:
        k0: K0Presentation
        vector: Coordinate vector of the class
        labels: Object labels whose classes form a basis

    Returns:
        tuple: integers y with sum y_j [labels_j] = vector
    """
    columns = [k0.basis_map[label] for label in labels]
    matrix = sympy.Matrix(len(vector), len(labels), lambda i, j: columns[j][i])
    try:
        solution, params = matrix.gauss_jordan_solve(sympy.Matrix(list(vector)))
    except ValueError:
        raise InvalidInputError(f"{list(vector)} is not in the span of {list(labels)}") from None
    if params.shape[0]:
        raise InvalidInputError(f"classes of {list(labels)} are not independent")
    if any(not value.is_integer for value in solution):
        raise InvalidInputError(f"{list(vector)} is not an integral combination of {list(labels)}")
    return tuple(int(value) for value in solution)


def _image(object_map, multiplicity_map, label):
    target = object_map[label]
    combination = {}
    for part in ([target] if isinstance(target, str) else target):
        combination[part] = combination.get(part, 0) + 1
    weight = 1 if multiplicity_map is None else multiplicity_map.get(label, 1)
    return {part: weight * c for part, c in combination.items()}


def induced_k0_map(p, q, object_map, multiplicity_map=None, basis=None):
    """
    Matrix of the homomorphism K_0(p) -> K_0(q) induced by an object map

    Args:
        p: Source AssemblerPresentation
        q: Target AssemblerPresentation
        object_map: p-label -> q-label or list of q-labels
        multiplicity_map: Optional p-label -> integer weight of the image
        basis: Optional (source labels, target labels) to express the matrix in
            object bases instead of the computed coordinates

    Returns:
        list: integer matrix, one column per source basis element

    Raises:
        RelationViolationError: if a covering family of p is not sent to a
        relation of q
    """
    missing = [label for label in p.objects if label not in object_map]
    if missing:
        raise InvalidInputError(f"object map misses {missing}")
    source, target = k0_from_presentation(p), k0_from_presentation(q)

    def image_class(combination):
        total = {}
        for label, c in combination.items():
            for part, k in _image(object_map, multiplicity_map, label).items():
                total[part] = total.get(part, 0) + c * k
        return class_vector(target, total)

    zero = target.reduce((0,) * len(target.moduli))
    for family in p.families:
        head, parts = family
        relation = {head: 1}
        for part in parts:
            relation[part] = relation.get(part, 0) - 1
        if image_class(relation) != zero:
            raise RelationViolationError(family)

    if basis is None:
        columns = [image_class(lift) for lift in source.lifts]
    else:
        source_labels, target_labels = basis
        columns = [
            express_in_basis(target, image_class({label: 1}), target_labels)
            for label in source_labels
        ]
    height = len(columns[0]) if columns else 0
    return [[column[i] for column in columns] for i in range(height)]


def orbit_label(x):
    """Label of a genuine orbit sum, e.g. "Z/1+Z/1+Z/2" """
    return "+".join(f"Z/{d}" for d, m in x.orbits for _ in range(m))


def parse_orbit_label(label):
    counts = {}
    for piece in label.split("+"):
        head, _, d = piece.strip().partition("/")
        if head != "Z" or not d.isdigit():
            raise InvalidInputError(f"cannot parse orbit label {label!r}")
        counts[int(d)] = counts.get(int(d), 0) + 1
    return OrbitSum.from_dict(counts)


def _orbit_multisets(lengths, max_size):
    """Nonempty multisets of the given orbit lengths with total size <= max_size"""
    if not lengths:
        yield {}
        return
    d, rest = lengths[0], lengths[1:]
    for m in range(max_size // d + 1):
        for tail in _orbit_multisets(rest, max_size - m * d):
            yield {d: m, **tail} if m else tail


@lru_cache(maxsize=64)
def finite_set_assembler(n, orbit_lengths=None):
    """
    Finite Z/n-sets of size <= 2n with all two-part decompositions

    Objects are listed by size, so every family's parts precede its target.

    Args:
        n: Positive level
        orbit_lengths: Optional subset of the divisors of n; the sets built
            from these orbits are closed under decomposition

    Returns:
        AssemblerPresentation
    """
    if n < 1:
        raise InvalidInputError("level must be positive")
    max_size = FINITE_SET_SIZE_FACTOR * n
    lengths = sorted(orbit_lengths) if orbit_lengths else list(divisors(n))
    if any(n % d for d in lengths):
        raise InvalidInputError(f"orbit lengths {lengths} must divide {n}")
    sums = [OrbitSum.from_dict(m) for m in _orbit_multisets(lengths, max_size) if m]
    sums.sort(key=lambda x: (x.cardinality, x.orbits))
    families = []
    for x in sums:
        counts = x.orbits
        for choice in product(*(range(m + 1) for _, m in counts)):
            part = OrbitSum.from_dict({d: k for (d, _), k in zip(counts, choice)})
            other = x - part
            if not part or not other or other.orbits < part.orbits:
                continue
            families.append((orbit_label(x), (orbit_label(part), orbit_label(other))))
    logger.debug("level %d assembler: %d objects, %d families", n, len(sums), len(families))
    return AssemblerPresentation(tuple(orbit_label(x) for x in sums), tuple(families))


def sigma_endofunctor(n_level, n):
    """Object map of sigma_n on the level-N finite-set assembler"""
    return {
        label: orbit_label(eq_sigma_n(n, parse_orbit_label(label)))
        for label in finite_set_assembler(n_level).objects
    }


def rho_tilde_endofunctor(n_level, n):
    """Object map of rho~_n from level N into level nN"""
    return {
        label: orbit_label(eq_rho_tilde_n(n, parse_orbit_label(label)))
        for label in finite_set_assembler(n_level).objects
    }


def rho_tilde_target(n_level, n):
    """Sets at level nN whose orbit lengths are n d, d | N: the image of rho~_n"""
    return finite_set_assembler(n * n_level, tuple(n * d for d in divisors(n_level)))


def orbit_basis(n):
    """Labels of the single orbits [Z/d], d | n"""
    return [orbit_label(OrbitSum.orbit(d)) for d in divisors(n)]
