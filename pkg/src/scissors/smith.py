from src.utils.logger import get_logger

logger = get_logger(__name__)


class SmithNormalForm:
    """
    Smith normal form of an integer matrix with the column transform kept

    D = P A Q with P, Q unimodular and D diagonal, d_1 | d_2 | ... . Only
    Q is recorded: the cokernel Z^n / rowspace(A) only depends on the row
    space, and x -> x Q carries it onto Z^n / rowspace(D).

    Usage
    -----
    snf = SmithNormalForm(rows, ncols)
    snf.run()
    snf.diagonal, snf.Q
    """

    def __init__(self, A, ncols=None):
        self._A = [[int(v) for v in row] for row in A]
        self._m = len(self._A)
        self._n = ncols if ncols is not None else (len(self._A[0]) if self._A else 0)
        if any(len(row) != self._n for row in self._A):
            raise ValueError("rows of unequal length")
        self._Q = [[int(i == j) for j in range(self._n)] for i in range(self._n)]
        self._diagonal = None

    @property
    def A(self):
        """The matrix, reduced to D once run() has finished"""
        return self._A

    @property
    def Q(self):
        return self._Q

    @property
    def D(self):
        return self._A if self._diagonal is not None else None

    @property
    def diagonal(self):
        """d_1, ..., d_n with zeros for the free directions"""
        return self._diagonal

    def run(self):
        t = 0
        while t < min(self._m, self._n) and self._reduce_at(t):
            t += 1
        self._diagonal = [self._A[i][i] if i < self._m else 0 for i in range(self._n)]
        logger.debug("Smith form of %dx%d: %s", self._m, self._n, self._diagonal[:t])
        return self

    def _swap_rows(self, i, j):
        self._A[i], self._A[j] = self._A[j], self._A[i]

    def _swap_columns(self, i, j):
        for row in self._A:
            row[i], row[j] = row[j], row[i]
        for row in self._Q:
            row[i], row[j] = row[j], row[i]

    def _add_column(self, target, source, factor):
        """column target += factor * column source"""
        for row in self._A:
            row[target] += factor * row[source]
        for row in self._Q:
            row[target] += factor * row[source]

    def _search_pivot(self, t):
        best = None
        for i in range(t, self._m):
            for j in range(t, self._n):
                v = self._A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        return best
        return best

    def _reduce_at(self, t):
        A = self._A
        while True:
            found = self._search_pivot(t)
            if found is None:
                return False
            _, i, j = found
            if i != t:
                self._swap_rows(t, i)
            if j != t:
                self._swap_columns(t, j)
            p = A[t][t]
            clean = True
            for i in range(t + 1, self._m):
                if A[i][t]:
                    q = A[i][t] // p
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, self._n):
                if A[t][j]:
                    self._add_column(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            offender = next(
                (i for i in range(t + 1, self._m) for j in range(t + 1, self._n) if A[i][j] % p),
                None,
            )
            if offender is not None:
                A[t] = [a + b for a, b in zip(A[t], A[offender])]
                continue
            if p < 0:
                A[t] = [-a for a in A[t]]
            return True
