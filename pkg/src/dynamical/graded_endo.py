from dataclasses import dataclass

import numpy as np
from scipy.linalg import block_diag

from src.utils.errors import InvalidInputError


def as_integer_matrix(rows):
    """Exact square integer matrix as a numpy object array"""
    matrix = np.array(rows, dtype=object)
    if matrix.shape == (0,):
        return np.zeros((0, 0), dtype=object)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InvalidInputError(f"matrix of shape {matrix.shape} is not square")
    for value in matrix.flat:
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
            raise InvalidInputError(f"matrix entry {value!r} is not an integer")
    return np.vectorize(int, otypes=[object])(matrix) if matrix.size else matrix


def identity(size):
    return as_integer_matrix(np.eye(size, dtype=np.int64).tolist()) if size else np.zeros((0, 0), dtype=object)


def matrix_power(matrix, n):
    result = identity(matrix.shape[0])
    for _ in range(n):
        result = np.dot(result, matrix)
    return result


@dataclass(frozen=True, eq=False)
class GradedEndo:
    """
    The action of f on homology modulo torsion, one square block per degree

    blocks is a tuple of (degree, matrix) sorted by degree; zero-size blocks
    are dropped so equal endomorphisms compare equal.
    """

    blocks: tuple = ()

    def __post_init__(self):
        cleaned = {}
        for degree, matrix in self.blocks:
            if degree < 0:
                raise InvalidInputError("homological degrees are nonnegative")
            if degree in cleaned:
                raise InvalidInputError(f"degree {degree} given twice")
            matrix = as_integer_matrix(matrix)
            if matrix.shape[0]:
                cleaned[degree] = matrix
        object.__setattr__(self, "blocks", tuple(sorted(cleaned.items(), key=lambda b: b[0])))

    @classmethod
    def from_dict(cls, mapping):
        return cls(tuple(mapping.items()))

    @classmethod
    def single(cls, matrix, degree=0):
        return cls(((degree, matrix),))

    @property
    def degrees(self):
        return [k for k, _ in self.blocks]

    def matrix(self, degree):
        for k, m in self.blocks:
            if k == degree:
                return m
        return np.zeros((0, 0), dtype=object)

    def rank(self, degree):
        return self.matrix(degree).shape[0]

    def to_lists(self):
        return [(k, m.tolist()) for k, m in self.blocks]

    def __eq__(self, other):
        if not isinstance(other, GradedEndo):
            return NotImplemented
        if self.degrees != other.degrees:
            return False
        return all(np.array_equal(m, other.matrix(k)) for k, m in self.blocks)

    def __hash__(self):
        return hash(tuple((k, tuple(m.flat)) for k, m in self.blocks))

    def __add__(self, other):
        return dyn_disjoint_union(self, other)

    def __mul__(self, other):
        return dyn_product(self, other)


def companion_matrix(p):
    """
    Companion matrix of a monic integer polynomial

    Args:
        p: Monic IntPoly of degree >= 1

    Returns:
        np.ndarray: Object matrix with characteristic polynomial p
    """
    if not p.is_monic() or p.degree < 1:
        raise InvalidInputError(f"{p} is not a monic polynomial of positive degree")
    size = p.degree
    matrix = np.zeros((size, size), dtype=object)
    for i in range(1, size):
        matrix[i, i - 1] = 1
    for i in range(size):
        matrix[i, size - 1] = -p.coeffs[i]
    return matrix


def cyclic_pair(n):
    """(Z_n, gamma): the n points permuted cyclically, in degree 0"""
    if n < 1:
        raise InvalidInputError("n must be positive")
    matrix = np.zeros((n, n), dtype=object)
    for i in range(n):
        matrix[(i + 1) % n, i] = 1
    return GradedEndo.single(matrix)


def point_pair():
    """The one-point space, unit of the product"""
    return GradedEndo.single([[1]])


def dyn_sigma_n(n, g):
    """(X, f) -> (X, f^n)"""
    if n < 1:
        raise InvalidInputError("n must be positive")
    return GradedEndo(tuple((k, matrix_power(m, n)) for k, m in g.blocks))


def verschiebung_block(matrix, n):
    """
    The matrix of Phi_n(f) on H(X)^n

    Block (i+1, i) is the identity and block (0, n-1) is the given matrix,
    so the n copies are cycled and f acts once per revolution.
    """
    size = matrix.shape[0]
    out = np.zeros((n * size, n * size), dtype=object)
    eye = identity(size)
    for i in range(n - 1):
        out[(i + 1) * size:(i + 2) * size, i * size:(i + 1) * size] = eye
    out[0:size, (n - 1) * size:n * size] = matrix
    return out


def dyn_rho_tilde_n(n, g):
    """(X, f) -> (X x Z_n, Phi_n(f))"""
    if n < 1:
        raise InvalidInputError("n must be positive")
    return GradedEndo(tuple((k, verschiebung_block(m, n)) for k, m in g.blocks))


def dyn_disjoint_union(g, h):
    """Degreewise block-diagonal sum"""
    out = {}
    for k in sorted(set(g.degrees) | set(h.degrees)):
        out[k] = block_diag(g.matrix(k), h.matrix(k))
    return GradedEndo.from_dict(out)


def dyn_product(g, h):
    """Kuenneth: degree m carries the sum over k + l = m of M_k (x) N_l"""
    pieces = {}
    for k, m in g.blocks:
        for l, n in h.blocks:
            pieces.setdefault(k + l, []).append(np.kron(m, n))
    return GradedEndo.from_dict({d: block_diag(*mats) for d, mats in pieces.items()})


def dyn_scale(n, g):
    """The n-fold disjoint union of g with itself"""
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    result = GradedEndo()
    for _ in range(n):
        result = dyn_disjoint_union(result, g)
    return result


def verschiebung_intertwiner(matrix, n):
    """
    S = diag(I, M, ..., M^(n-1))

    S Phi_n(M^n) = (Phi_n(1) (x) M) S holds exactly, the matrix form of
    Phi_n(f^n) = f Phi_n(1) up to conjugation by S.
    """
    return block_diag(*(matrix_power(matrix, i) for i in range(n)))
