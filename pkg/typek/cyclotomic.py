"""
Exact arithmetic in Z[zeta_N], represented modulo the cyclotomic polynomial.
"""
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple
from sympy import Poly, Symbol, cyclotomic_poly


@lru_cache(maxsize=None)
def cyclotomic_modulus(conductor: int) -> Tuple[int, ...]:
    """
    Coefficients of Phi_N, lowest degree first.
    """
    if conductor < 1:
        raise ValueError(f"invalid conductor {conductor}")
    x = Symbol('x')
    return tuple(int(c) for c in reversed(Poly(cyclotomic_poly(conductor, x), x).all_coeffs()))


def _reduce(coeffs: List[int], conductor: int) -> Tuple[int, ...]:
    modulus = cyclotomic_modulus(conductor)
    degree = len(modulus) - 1
    coeffs = list(coeffs)
    for top in range(len(coeffs) - 1, degree - 1, -1):
        c = coeffs[top]
        if c:
            for i, m in enumerate(modulus):
                coeffs[top - degree + i] -= c * m
    coeffs += [0] * degree
    return tuple(coeffs[:degree])


class CycInt:
    """
    An element of Z[zeta_N] as a vector of phi(N) integers on the power basis.
    """

    def __init__(self, conductor: int, coeffs: Sequence[int]):
        self.conductor = conductor
        self.coeffs = _reduce([int(c) for c in coeffs], conductor)

    @classmethod
    def from_int(cls, conductor: int, value: int) -> 'CycInt':
        return cls(conductor, [value])

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> 'CycInt':
        power %= conductor
        return cls(conductor, [0] * power + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def _coerce(self, other) -> 'CycInt':
        if isinstance(other, CycInt):
            if other.conductor != self.conductor:
                raise ValueError(f"conductors {self.conductor} and {other.conductor} differ")
            return other
        if isinstance(other, int):
            return CycInt.from_int(self.conductor, other)
        return NotImplemented

    def __add__(self, other) -> 'CycInt':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.conductor, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> 'CycInt':
        return CycInt(self.conductor, [-a for a in self.coeffs])

    def __sub__(self, other) -> 'CycInt':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'CycInt':
        return (-self) + other

    def __mul__(self, other) -> 'CycInt':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product = [0] * (2 * self.degree)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return CycInt(self.conductor, product)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'CycInt':
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = CycInt.from_int(self.conductor, 1)
        for _ in range(k):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def multiplication_matrix(self) -> List[List[Fraction]]:
        """
        Matrix of x -> self * x on the power basis, columns indexed by zeta^j.
        """
        columns = [(self * CycInt.zeta(self.conductor, j)).coeffs for j in range(self.degree)]
        return [[Fraction(columns[j][i]) for j in range(self.degree)] for i in range(self.degree)]

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            power = "" if j == 0 else ("z" if j == 1 else f"z^{j}")
            if not power:
                terms.append(str(c))
            elif c == 1:
                terms.append(power)
            elif c == -1:
                terms.append("-" + power)
            else:
                terms.append(f"{c}*{power}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __repr__(self):
        return f"<CycInt N={self.conductor} {self}>"


CycMatrix = List[List[CycInt]]


def cyc_matrix(conductor: int, rows: Sequence[Sequence]) -> CycMatrix:
    return [[x if isinstance(x, CycInt) else CycInt.from_int(conductor, x) for x in row] for row in rows]


def cyc_matmul(a: CycMatrix, b: CycMatrix) -> CycMatrix:
    conductor = a[0][0].conductor
    result = []
    for row in a:
        out = []
        for j in range(len(b[0])):
            total = CycInt.from_int(conductor, 0)
            for k, x in enumerate(row):
                if not x.is_zero() and not b[k][j].is_zero():
                    total = total + x * b[k][j]
            out.append(total)
        result.append(out)
    return result


def cyc_identity(conductor: int, n: int) -> CycMatrix:
    return cyc_matrix(conductor, [[int(i == j) for j in range(n)] for i in range(n)])


def adjugate2(m: CycMatrix) -> CycMatrix:
    """
    Adjugate of a 2x2 matrix, det(m) times its inverse.
    """
    (a, b), (c, d) = m
    return [[d, -b], [-c, a]]


def rational_blocks(m: CycMatrix) -> List[List[Fraction]]:
    """
    The Q-linear map of a matrix over Q(zeta_N) on Q^(n phi(N)).
    """
    degree = m[0][0].degree
    rows = []
    for row in m:
        blocks = [x.multiplication_matrix() for x in row]
        for i in range(degree):
            rows.append([blocks[j][i][k] for j in range(len(row)) for k in range(degree)])
    return rows
