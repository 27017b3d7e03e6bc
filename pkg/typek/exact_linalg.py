"""
Exact integer and rational linear algebra.

Matrices are plain lists of rows. Integer matrices hold python ints, rational
matrices hold ``fractions.Fraction``; nothing in here touches floating point.
"""
from fractions import Fraction
from typing import List, Sequence, Tuple, Union, Optional
from typek.utils import get_logger

logger = get_logger(__name__)

Number = Union[int, Fraction]
IntMatrix = List[List[int]]
RatMatrix = List[List[Fraction]]
Matrix = Sequence[Sequence[Number]]


class SnfResult:
    """
    Smith normal form ``D = U * A * V`` with unimodular ``U`` and ``V``.
    """

    def __init__(self, D: IntMatrix, U: IntMatrix, V: IntMatrix):
        self.D = D
        self.U = U
        self.V = V

    @property
    def divisors(self) -> List[int]:
        """
        The nonzero elementary divisors d1 | d2 | ...
        """
        size = min(len(self.D), len(self.D[0]) if self.D else 0)
        return [self.D[i][i] for i in range(size) if self.D[i][i] != 0]

    @property
    def rank(self) -> int:
        return len(self.divisors)

    def __repr__(self):
        return f"<SnfResult divisors={self.divisors}>"


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> IntMatrix:
    return [[0] * cols for _ in range(rows)]


def copy_matrix(A: Matrix) -> list:
    return [list(row) for row in A]


def transpose(A: Matrix) -> list:
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def matmul(A: Matrix, B: Matrix) -> list:
    if not A or not B:
        cols = len(B[0]) if B else 0
        return [[0] * cols for _ in A]
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_vec(A: Matrix, v: Sequence[Number]) -> list:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def bilinear(G: Matrix, x: Sequence[Number], y: Sequence[Number]) -> Number:
    """
    The pairing x^T G y.
    """
    return sum(xi * gij * yj for xi, row in zip(x, G) for gij, yj in zip(row, y) if xi and gij and yj)


def is_symmetric(A: Matrix) -> bool:
    n = len(A)
    return all(len(row) == n for row in A) and all(A[i][j] == A[j][i] for i in range(n) for j in range(i))


def block_diagonal(*blocks: Matrix) -> list:
    size = sum(len(block) for block in blocks)
    result = [[0] * size for _ in range(size)]
    offset = 0
    for block in blocks:
        for i, row in enumerate(block):
            for j, entry in enumerate(row):
                result[offset + i][offset + j] = entry
        offset += len(block)
    return result


def _swap_rows(M: list, i: int, j: int):
    M[i], M[j] = M[j], M[i]


def _swap_cols(M: list, i: int, j: int):
    for row in M:
        row[i], row[j] = row[j], row[i]


def _add_row(M: list, target: int, source: int, factor: Number):
    """ row[target] += factor * row[source] """
    M[target] = [a + factor * b for a, b in zip(M[target], M[source])]


def _add_col(M: list, target: int, source: int, factor: Number):
    """ col[target] += factor * col[source] """
    for row in M:
        row[target] += factor * row[source]


def smith_normal_form(A: Matrix) -> SnfResult:
    """
    Smith normal form by elimination with the smallest available pivot.

    args:
        A: integer matrix, any shape
    returns:
        SnfResult with U * A * V = D, positive divisors in a divisibility chain
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [[int(x) for x in row] for row in A]
    U = identity(m)
    V = identity(n)

    t = 0
    while t < min(m, n):
        candidates = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j] != 0]
        if not candidates:
            break
        _, i, j = min(candidates)
        _swap_rows(D, t, i)
        _swap_rows(U, t, i)
        _swap_cols(D, t, j)
        _swap_cols(V, t, j)

        while True:
            clean = True
            for i in range(t + 1, m):
                q = D[i][t] // D[t][t]
                if q:
                    _add_row(D, i, t, -q)
                    _add_row(U, i, t, -q)
                if D[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = D[t][j] // D[t][t]
                if q:
                    _add_col(D, j, t, -q)
                    _add_col(V, j, t, -q)
                if D[t][j]:
                    clean = False

            if not clean:
                # a remainder smaller than the pivot is left in row or column t
                best = (abs(D[t][t]), t, t)
                for i in range(t + 1, m):
                    if D[i][t] and abs(D[i][t]) < best[0]:
                        best = (abs(D[i][t]), i, t)
                for j in range(t + 1, n):
                    if D[t][j] and abs(D[t][j]) < best[0]:
                        best = (abs(D[t][j]), t, j)
                _, i, j = best
                if i != t:
                    _swap_rows(D, t, i)
                    _swap_rows(U, t, i)
                if j != t:
                    _swap_cols(D, t, j)
                    _swap_cols(V, t, j)
                continue

            offender = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                             if D[i][j] % D[t][t]), None)
            if offender is None:
                break
            _add_row(D, t, offender[0], 1)
            _add_row(U, t, offender[0], 1)

        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    return SnfResult(D, U, V)


def hermite_normal_form(rows: Matrix) -> IntMatrix:
    """
    Row-style Hermite normal form; zero rows are dropped.

    The result spans the same subgroup of Z^n as ``rows``; pivots are positive
    and entries above a pivot lie in [0, pivot).
    """
    M = [[int(x) for x in row] for row in rows]
    if not M:
        return []
    m, n = len(M), len(M[0])
    r = 0
    for col in range(n):
        if r == m:
            break
        while True:
            nonzero = [i for i in range(r, m) if M[i][col] != 0]
            if not nonzero:
                break
            pivot = min(nonzero, key=lambda i: abs(M[i][col]))
            _swap_rows(M, r, pivot)
            done = True
            for i in range(r + 1, m):
                q = M[i][col] // M[r][col]
                if q:
                    _add_row(M, i, r, -q)
                if M[i][col]:
                    done = False
            if done:
                break
        if M[r][col] == 0:
            continue
        if M[r][col] < 0:
            M[r] = [-x for x in M[r]]
        for i in range(r):
            q = M[i][col] // M[r][col]
            if q:
                _add_row(M, i, r, -q)
        r += 1
    return [row for row in M[:r]]


def saturated_kernel(A: Matrix, ncols: Optional[int] = None) -> IntMatrix:
    """
    Z-basis (as rows) of the primitive sublattice {x in Z^n : A x = 0}.

    args:
        A: integer matrix with n columns
        ncols: n, required when A has no rows
    """
    if ncols is None:
        ncols = len(A[0])
    if not A:
        return identity(ncols)
    snf = smith_normal_form(A)
    r = snf.rank
    basis = [[snf.V[i][j] for i in range(ncols)] for j in range(r, ncols)]
    return hermite_normal_form(basis)


def rational_matrix(A: Matrix) -> RatMatrix:
    return [[Fraction(x) for x in row] for row in A]


def row_echelon(A: Matrix) -> Tuple[RatMatrix, List[int]]:
    """
    Reduced row echelon form over Q together with the pivot columns.
    """
    M = rational_matrix(A)
    pivots: List[int] = []
    if not M:
        return M, pivots
    m, n = len(M), len(M[0])
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if M[i][col] != 0), None)
        if pivot is None:
            continue
        _swap_rows(M, r, pivot)
        inv = 1 / M[r][col]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][col] != 0:
                _add_row(M, i, r, -M[i][col])
        pivots.append(col)
        r += 1
        if r == m:
            break
    return M, pivots


def rational_rank(A: Matrix) -> int:
    return len(row_echelon(A)[1])


def rational_kernel(A: Matrix, ncols: Optional[int] = None) -> RatMatrix:
    """
    Basis (as rows) of the right kernel of A over Q.
    """
    if ncols is None:
        ncols = len(A[0])
    if not A:
        return rational_matrix(identity(ncols))
    R, pivots = row_echelon(A)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def determinant(A: Matrix) -> Number:
    """
    Determinant by fraction-free Bareiss elimination (exact for ints).
    """
    n = len(A)
    if n == 0:
        return 1
    M = copy_matrix(A)
    sign = 1
    previous: Number = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            _swap_rows(M, k, swap)
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                if isinstance(value, int) and isinstance(previous, int):
                    M[i][j] = value // previous
                else:
                    M[i][j] = Fraction(value) / previous
        previous = M[k][k]
    return sign * M[n - 1][n - 1]


def rational_inverse(A: Matrix) -> RatMatrix:
    n = len(A)
    augmented = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rational_matrix(A))]
    R, pivots = row_echelon(augmented)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]


def congruent_diagonalize(S: Matrix) -> Tuple[RatMatrix, List[Fraction]]:
    """
    Symmetric Gaussian elimination over Q.

    returns:
        (P, d) with P^T S P = diag(d)
    """
    n = len(S)
    A = rational_matrix(S)
    P = rational_matrix(identity(n))

    def add(target: int, source: int, factor: Fraction):
        _add_col(A, target, source, factor)
        _add_row(A, target, source, factor)
        _add_col(P, target, source, factor)

    for k in range(n):
        if A[k][k] == 0:
            j = next((j for j in range(k + 1, n) if A[j][j] != 0), None)
            if j is not None:
                _swap_cols(A, k, j)
                _swap_rows(A, k, j)
                _swap_cols(P, k, j)
            else:
                j = next((j for j in range(k + 1, n) if A[k][j] != 0), None)
                if j is None:
                    continue
                # both diagonal entries vanish, the new pivot is 2 * A[k][j]
                add(k, j, Fraction(1))
        pivot = A[k][k]
        for i in range(k + 1, n):
            if A[k][i] != 0:
                add(i, k, -A[k][i] / pivot)

    return P, [A[i][i] for i in range(n)]


def inertia(S: Matrix) -> Tuple[int, int, int]:
    """
    returns:
        (positive, negative, zero) counts of a congruent diagonal form
    """
    _, d = congruent_diagonalize(S)
    return sum(1 for x in d if x > 0), sum(1 for x in d if x < 0), sum(1 for x in d if x == 0)
